"""Recursive predecessor structure over a static key set.

Public keys live in [1, u]; queries return (value, rank) where value is
the largest stored key <= x and rank its 1-based position, or (0, 0) when
x precedes every key.

Internally keys are 0-based.  The top level splits the set into
2^floor(lg n) partitions by high bits, storing partition sizes in unary
and one recursive structure per non-empty partition.  Each recursive node
splits its key length in half (key lengths follow the ladder 5*2^i),
keeps per-high-half tuples (min, rank, max, rank, child) in a hash map,
and recurses on high halves and on the low halves of each group stripped
of its extremes.  Recursion bottoms out in packed key sets once keys fit
16 bits and groups hold at most 64 keys.

Misses are signalled by rank 0, never by a sentinel key value, so a
stored key value of 0 inside a child structure stays unambiguous.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left

from .bitvec import BitVector, unary_concat
from .broadword import PackedKeySet

_BASE_BITS = 16
_BASE_KEYS = 64


def _ladder(nbits: int) -> int:
    l = 5
    while l < nbits:
        l <<= 1
    return l


class _RecNode:
    __slots__ = ("half", "lowmask", "groups", "pstruct")

    def __init__(self, keys: list[int], nbits: int):
        half = _ladder(nbits) >> 1
        self.half = half
        self.lowmask = (1 << half) - 1
        groups: dict[int, tuple] = {}
        order: list[int] = []
        start = 0
        n = len(keys)
        while start < n:
            p = keys[start] >> half
            end = start + 1
            while end < n and keys[end] >> half == p:
                end += 1
            child = None
            if end - start > 2:
                lows = [k & self.lowmask for k in keys[start + 1 : end - 1]]
                child = _build_node(lows, half)
            groups[p] = (keys[start], start + 1, keys[end - 1], end, child)
            order.append(p)
            start = end
        self.groups = groups
        self.pstruct = _build_node(order, nbits - half)

    def query(self, x: int) -> tuple[int, int]:
        p = x >> self.half
        e = self.groups.get(p)
        if e is None or x < e[0]:
            if p == 0:
                return (0, 0)
            r, v = self.pstruct.query(p - 1)
            if r == 0:
                return (0, 0)
            e2 = self.groups[v]
            return (e2[3], e2[2])
        if x >= e[2]:
            return (e[3], e[2])
        if x == e[0]:
            return (e[1], e[0])
        child = e[4]
        if child is not None:
            r, v = child.query(x & self.lowmask)
            if r:
                return (e[1] + r, (p << self.half) | v)
        return (e[1], e[0])


def _build_node(keys: list[int], nbits: int):
    if nbits <= _BASE_BITS and len(keys) <= _BASE_KEYS:
        return PackedKeySet(keys, max(1, nbits))
    return _RecNode(keys, nbits)


class PredecessorSet:
    """Predecessor queries on a sorted set of distinct keys from [1, u]."""

    __slots__ = ("n", "universe", "key_bits", "top_bits", "shift",
                 "sizes", "_children", "_prefix", "_lowmask")

    def __init__(self, keys, universe: int):
        if universe < 1:
            raise ValueError(f"universe size must be >= 1, got {universe}")
        keys = list(keys)
        prev = 0
        for k in keys:
            if k <= prev:
                raise ValueError("keys must be strictly increasing and >= 1")
            prev = k
        if prev > universe:
            raise ValueError(f"key {prev} exceeds universe {universe}")
        self.n = len(keys)
        self.universe = universe
        key_bits = max((universe - 1).bit_length(), 1)
        top = self.n.bit_length() - 1 if self.n else 0
        top = max(0, min(top, key_bits - 1))
        self.key_bits = key_bits
        self.top_bits = top
        self.shift = key_bits - top
        nparts = 1 << top
        counts = [0] * nparts
        children: dict[int, object] = {}
        shift = self.shift
        mask = (1 << shift) - 1
        self._lowmask = mask
        start = 0
        n = self.n
        while start < n:
            p = (keys[start] - 1) >> shift
            end = start + 1
            while end < n and (keys[end] - 1) >> shift == p:
                end += 1
            counts[p] = end - start
            children[p] = _build_node(
                [(k - 1) & mask for k in keys[start:end]], shift)
            start = end
        self.sizes = unary_concat(counts)
        self._children = children
        # derived acceleration of select0(sizes, p) - p: elements before
        # partition p; rebuilt on load, never serialized
        prefix = array("q", bytes(8 * (nparts + 1)))
        acc = 0
        for p, c in enumerate(counts):
            acc += c
            prefix[p + 1] = acc
        self._prefix = prefix

    def query(self, x: int) -> tuple[int, int]:
        """(value, rank) of the predecessor of x; (0, 0) when none."""
        if not 1 <= x <= self.universe:
            raise ValueError(f"key {x} outside universe [1, {self.universe}]")
        x0 = x - 1
        shift = self.shift
        p = x0 >> shift
        prefix = self._prefix
        r0 = prefix[p]
        child = self._children.get(p)
        if child is not None:
            r, v = child.query(x0 & self._lowmask)
            if r:
                return (((p << shift) | v) + 1, r0 + r)
        if r0 == 0:
            return (0, 0)
        p2 = bisect_left(prefix, r0) - 1  # partition holding element r0
        r2, v2 = self._children[p2].query(self._lowmask)
        return (((p2 << shift) | v2) + 1, r0)

    def __len__(self) -> int:
        return self.n
