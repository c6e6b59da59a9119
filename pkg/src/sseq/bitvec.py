"""Plain bitvector with rank/select directories.

Bit positions are 1-based: bit i lives in word (i-1)//64 at offset
(i-1)%64.  Bits past ``n_bits`` in the last word are zero, so whole-word
popcounts never need a trailing mask on the rank path.

Directory layout (all sizes fixed, serialized with the vector):
  * absolute 1-counters every 2^16 bits,
  * 16-bit relative counters every 512 bits (relative to the enclosing
    2^16 superblock, so values stay < 2^16),
  * sampled positions of every 8192-th 1-bit and 0-bit.

Select walks: sample -> binary search of superblock counters -> binary
search of the <=128 block counters inside one superblock -> popcount scan
of <=8 words -> in-word select via byte tables.
"""

from __future__ import annotations

import numpy as np

_M64 = (1 << 64) - 1
_SB_BITS = 1 << 16
_BLK_BITS = 512
_SEL_SAMPLE = 8192

_BYTE_POP = [bin(b).count("1") for b in range(256)]
_BYTE_SELECT = [[k for k in range(8) if (b >> k) & 1] for b in range(256)]


def select_in_word(word: int, j: int) -> int:
    """0-based offset of the j-th (1-based) set bit of a 64-bit word."""
    for shift in range(0, 64, 8):
        byte = (word >> shift) & 0xFF
        c = _BYTE_POP[byte]
        if j <= c:
            return shift + _BYTE_SELECT[byte][j - 1]
        j -= c
    raise ValueError("word has fewer set bits than requested")


def _pack_bits(bits: np.ndarray) -> np.ndarray:
    """uint8 0/1 array -> little-endian uint64 words."""
    packed = np.packbits(bits, bitorder="little")
    pad = (-len(packed)) % 8
    if pad:
        packed = np.concatenate([packed, np.zeros(pad, dtype=np.uint8)])
    return packed.view(np.uint64)


class BitVector:
    """Immutable bit sequence with constant-time rank and fast select."""

    __slots__ = ("n_bits", "_words", "_sb", "_blk", "_smp1", "_smp0", "_total1")

    def __init__(self, bits=None, *, _parts=None):
        if _parts is not None:
            (self.n_bits, self._words, self._sb, self._blk,
             self._smp1, self._smp0) = _parts
            self._total1 = self.rank1(self.n_bits) if self.n_bits else 0
            return
        if bits is None:
            bits = []
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 1:
            raise ValueError("bits must be one-dimensional")
        self.n_bits = int(arr.size)
        words = _pack_bits(arr) if self.n_bits else np.zeros(0, dtype=np.uint64)
        self._build_dirs(words, arr)

    @classmethod
    def from_words(cls, words: list[int], n_bits: int) -> "BitVector":
        """Build from packed words, recomputing directories."""
        arr = np.asarray(words, dtype=np.uint64)
        bits = np.unpackbits(arr.view(np.uint8), count=n_bits, bitorder="little")
        v = cls.__new__(cls)
        v.n_bits = n_bits
        v._build_dirs(arr, bits)
        return v

    @classmethod
    def from_parts(cls, n_bits, words, sb, blk, smp1, smp0) -> "BitVector":
        """Rebuild from serialized words and directories (no recomputation)."""
        return cls(_parts=(n_bits, list(words), list(sb), list(blk),
                           list(smp1), list(smp0)))

    def _build_dirs(self, words: np.ndarray, bits: np.ndarray) -> None:
        n = self.n_bits
        wpc = np.bitwise_count(words).astype(np.int64)
        cum = np.zeros(len(words) + 1, dtype=np.int64)
        np.cumsum(wpc, out=cum[1:])
        n_sb = n >> 16
        n_blk = n >> 9
        sb = cum[:: 1024][: n_sb + 1]
        blk_abs = cum[:: 8][: n_blk + 1]
        blk_rel = blk_abs - sb[np.arange(n_blk + 1) >> 7]
        ones_pos = np.flatnonzero(bits)
        self._smp1 = (ones_pos[_SEL_SAMPLE - 1 :: _SEL_SAMPLE] + 1).tolist()
        zeros_pos = np.flatnonzero(bits == 0)
        self._smp0 = (zeros_pos[_SEL_SAMPLE - 1 :: _SEL_SAMPLE] + 1).tolist()
        self._words = words.tolist()
        self._sb = sb.tolist()
        self._blk = blk_rel.tolist()
        self._total1 = int(cum[-1])

    # -- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return self.n_bits

    @property
    def total_ones(self) -> int:
        return self._total1

    @property
    def total_zeros(self) -> int:
        return self.n_bits - self._total1

    def get(self, i: int) -> int:
        if not 1 <= i <= self.n_bits:
            raise IndexError(f"bit {i} out of range [1, {self.n_bits}]")
        return (self._words[(i - 1) >> 6] >> ((i - 1) & 63)) & 1

    def rank1(self, i: int) -> int:
        """Number of 1-bits in positions [1, i]."""
        if not 0 <= i <= self.n_bits:
            raise IndexError(f"position {i} out of range [0, {self.n_bits}]")
        if i == 0:
            return 0
        cnt = self._sb[i >> 16] + self._blk[i >> 9]
        start = (i >> 9) << 9
        words = self._words
        w_end = i >> 6
        for w in range(start >> 6, w_end):
            cnt += words[w].bit_count()
        rem = i & 63
        if rem:
            cnt += (words[w_end] & ((1 << rem) - 1)).bit_count()
        return cnt

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, bit: int, i: int) -> int:
        return self.rank1(i) if bit else self.rank0(i)

    def select1(self, j: int) -> int:
        if not 1 <= j <= self._total1:
            raise ValueError(f"wanted 1-bit {j}, vector has {self._total1}")
        return self._select(j, True)

    def select0(self, j: int) -> int:
        total0 = self.n_bits - self._total1
        if not 1 <= j <= total0:
            raise ValueError(f"wanted 0-bit {j}, vector has {total0}")
        return self._select(j, False)

    def select(self, bit: int, j: int) -> int:
        return self.select1(j) if bit else self.select0(j)

    def _select(self, j: int, ones: bool) -> int:
        sb = self._sb
        smp = self._smp1 if ones else self._smp0
        idx = j // _SEL_SAMPLE
        if idx >= 1:
            pos = smp[idx - 1]
            if idx * _SEL_SAMPLE == j:
                return pos
            lo = pos >> 16
        else:
            lo = 0
        # largest superblock boundary with count < j
        hi = self.n_bits >> 16
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            c = sb[mid] if ones else (mid << 16) - sb[mid]
            if c < j:
                lo = mid
            else:
                hi = mid - 1
        s = lo
        sb_count = sb[s] if ones else (s << 16) - sb[s]
        # largest block boundary inside superblock s with count < j
        blk = self._blk
        lo = s << 7
        hi = min(self.n_bits >> 9, lo + 127)
        sb_ones = sb[s]
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            c = sb_ones + blk[mid] if ones else (mid << 9) - sb_ones - blk[mid]
            if c < j:
                lo = mid
            else:
                hi = mid - 1
        kb = lo
        cnt = sb_ones + blk[kb] if ones else (kb << 9) - sb_ones - blk[kb]
        # word scan
        words = self._words
        w = kb << 3
        last = len(words) - 1
        while True:
            x = words[w]
            if not ones:
                if w == last:
                    valid = self.n_bits - (w << 6)
                    x = ~x & ((1 << valid) - 1)
                else:
                    x = ~x & _M64
            c = x.bit_count()
            if cnt + c >= j:
                return (w << 6) + select_in_word(x, j - cnt) + 1
            cnt += c
            w += 1

    # -- accounting / serialization --------------------------------------

    @property
    def words(self) -> list[int]:
        return self._words

    def dir_parts(self):
        return self._sb, self._blk, self._smp1, self._smp0

    def space_bits(self) -> dict[str, int]:
        return {
            "bits": len(self._words) * 64,
            "rank_dir": 64 * len(self._sb) + 16 * len(self._blk),
            "select_dir": 64 * (len(self._smp1) + len(self._smp0)),
        }


def unary_concat(counts) -> BitVector:
    """Concatenate unary runs: 1^c1 0 1^c2 0 ... as a BitVector."""
    counts = np.asarray(counts, dtype=np.int64)
    if counts.size and counts.min() < 0:
        raise ValueError("counts must be non-negative")
    total = int(counts.sum()) + counts.size
    bits = np.ones(total, dtype=np.uint8)
    ends = np.cumsum(counts + 1) - 1
    bits[ends] = 0
    return BitVector(bits)
