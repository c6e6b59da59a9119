"""Succinct sequence representations supporting access, rank and select.

All public sequence APIs are 1-based: positions run over [1, n], symbols
over [1, sigma], and ``rank_a(S, i)`` counts occurrences of ``a`` in the
prefix ``S[1..i]``.  Every structure is immutable after construction and
safe for concurrent readers.
"""

from .seqcore import Sequence, OracleTable, zeroth_order_entropy
from .bitvec import BitVector, unary_concat
from .packed import PackedSequence

__all__ = [
    "Sequence",
    "OracleTable",
    "zeroth_order_entropy",
    "BitVector",
    "unary_concat",
    "PackedSequence",
]
