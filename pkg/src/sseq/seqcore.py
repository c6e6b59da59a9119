"""Shared sequence contract, naive reference implementations, and entropy.

The naive scans in this module are the ground truth every other structure
is tested against.  They are deliberately simple; ``OracleTable`` provides
the same answers from per-symbol position lists when a test needs millions
of expected values.
"""

from __future__ import annotations

import math
from bisect import bisect_right

import numpy as np


class Sequence:
    """A sequence S[1..n] over the alphabet [1, sigma].

    Immutable after construction.  ``symbols`` is stored as a plain list of
    ints; builders that want vectorized access convert it once.
    """

    __slots__ = ("symbols", "n", "sigma")

    def __init__(self, symbols, sigma: int):
        if sigma < 1:
            raise ValueError(f"alphabet size must be >= 1, got {sigma}")
        if isinstance(symbols, np.ndarray):
            if symbols.size and (symbols.min() < 1 or symbols.max() > sigma):
                raise ValueError("symbol out of range [1, sigma]")
            symbols = symbols.tolist()
        else:
            symbols = list(symbols)
            for s in symbols:
                if not 1 <= s <= sigma:
                    raise ValueError(f"symbol {s} out of range [1, {sigma}]")
        self.symbols = symbols
        self.n = len(symbols)
        self.sigma = sigma

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Sequence)
            and self.sigma == other.sigma
            and self.symbols == other.symbols
        )

    def __repr__(self) -> str:
        head = ",".join(str(s) for s in self.symbols[:8])
        tail = ",..." if self.n > 8 else ""
        return f"Sequence([{head}{tail}], n={self.n}, sigma={self.sigma})"

    def to_numpy(self) -> np.ndarray:
        return np.asarray(self.symbols, dtype=np.int64)


def oracle_access(seq: Sequence, i: int) -> int:
    """S[i] by direct lookup."""
    if not 1 <= i <= seq.n:
        raise IndexError(f"position {i} out of range [1, {seq.n}]")
    return seq.symbols[i - 1]


def oracle_rank(seq: Sequence, a: int, i: int) -> int:
    """Occurrences of ``a`` in S[1..i], by linear scan."""
    if not 1 <= a <= seq.sigma:
        raise ValueError(f"symbol {a} out of range [1, {seq.sigma}]")
    if not 0 <= i <= seq.n:
        raise IndexError(f"position {i} out of range [0, {seq.n}]")
    count = 0
    for k in range(i):
        if seq.symbols[k] == a:
            count += 1
    return count


def oracle_select(seq: Sequence, a: int, j: int) -> int:
    """Position of the j-th occurrence of ``a``, by linear scan."""
    if not 1 <= a <= seq.sigma:
        raise ValueError(f"symbol {a} out of range [1, {seq.sigma}]")
    if j < 1:
        raise ValueError(f"occurrence index must be >= 1, got {j}")
    count = 0
    for k, s in enumerate(seq.symbols):
        if s == a:
            count += 1
            if count == j:
                return k + 1
    raise ValueError(f"symbol {a} occurs only {count} times, wanted {j}")


def zeroth_order_entropy(seq: Sequence) -> float:
    """H0 in bits per symbol; 0 <= H0 <= lg(sigma)."""
    if seq.n == 0:
        raise ValueError("entropy of an empty sequence is undefined")
    counts: dict[int, int] = {}
    for s in seq.symbols:
        counts[s] = counts.get(s, 0) + 1
    n = seq.n
    h = 0.0
    for c in counts.values():
        h += (c / n) * math.log2(n / c)
    return h


class OracleTable:
    """Indexed oracle: per-symbol sorted position lists.

    Answers the same queries as the naive scans in O(log n) via bisect;
    equivalence with the scans is itself covered by tests.
    """

    __slots__ = ("n", "sigma", "positions", "symbols")

    def __init__(self, seq: Sequence):
        self.n = seq.n
        self.sigma = seq.sigma
        self.symbols = seq.symbols
        positions: dict[int, list[int]] = {}
        for idx, s in enumerate(seq.symbols):
            positions.setdefault(s, []).append(idx + 1)
        self.positions = positions

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range [1, {self.n}]")
        return self.symbols[i - 1]

    def rank(self, a: int, i: int) -> int:
        if not 1 <= a <= self.sigma:
            raise ValueError(f"symbol {a} out of range [1, {self.sigma}]")
        if not 0 <= i <= self.n:
            raise IndexError(f"position {i} out of range [0, {self.n}]")
        pos = self.positions.get(a)
        if pos is None:
            return 0
        return bisect_right(pos, i)

    def select(self, a: int, j: int) -> int:
        if not 1 <= a <= self.sigma:
            raise ValueError(f"symbol {a} out of range [1, {self.sigma}]")
        pos = self.positions.get(a, [])
        if not 1 <= j <= len(pos):
            raise ValueError(f"symbol {a} occurs {len(pos)} times, wanted {j}")
        return pos[j - 1]

    def count(self, a: int) -> int:
        return len(self.positions.get(a, []))
