"""Fixed-width fields packed into 64-bit words.

Fields are 0-indexed here; this is a storage container, not a query
structure.  Field f occupies bits [f*width, (f+1)*width) counted from the
least significant bit of word 0, crossing word boundaries when width does
not divide 64.
"""

from __future__ import annotations

import numpy as np


class PackedSequence:
    __slots__ = ("width", "count", "_words")

    def __init__(self, width: int, values=None, *, _words=None, _count=None):
        if not 1 <= width <= 64:
            raise ValueError(f"field width must be in [1, 64], got {width}")
        self.width = width
        if _words is not None:
            self._words = _words
            self.count = _count
            return
        arr = np.asarray(values if values is not None else [], dtype=np.uint64)
        self.count = int(arr.size)
        if arr.size and int(arr.max()) >> width:
            raise ValueError(f"value does not fit in {width} bits")
        if arr.size:
            bits = np.unpackbits(
                arr.astype("<u8").view(np.uint8).reshape(-1, 8),
                axis=1, bitorder="little",
            )[:, :width].reshape(-1)
            pad = (-len(bits)) % 64
            if pad:
                bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
            self._words = (
                np.packbits(bits, bitorder="little").view(np.uint64).tolist()
            )
        else:
            self._words = []

    @classmethod
    def from_words(cls, width: int, count: int, words: list[int]) -> "PackedSequence":
        return cls(width, _words=list(words), _count=count)

    def __len__(self) -> int:
        return self.count

    def get(self, f: int) -> int:
        """Value of field f (0-based)."""
        if not 0 <= f < self.count:
            raise IndexError(f"field {f} out of range [0, {self.count})")
        w = self.width
        bit = f * w
        word, off = bit >> 6, bit & 63
        v = self._words[word] >> off
        got = 64 - off
        if got < w:
            v |= self._words[word + 1] << got
        return v & ((1 << w) - 1)

    def to_numpy(self) -> np.ndarray:
        if self.count == 0:
            return np.zeros(0, dtype=np.uint64)
        arr = np.asarray(self._words, dtype=np.uint64)
        bits = np.unpackbits(arr.view(np.uint8), bitorder="little")
        need = self.count * self.width
        fields = bits[:need].reshape(self.count, self.width).astype(np.uint64)
        return fields @ (np.uint64(1) << np.arange(self.width, dtype=np.uint64))

    def to_list(self) -> list[int]:
        return self.to_numpy().tolist()

    @property
    def words(self) -> list[int]:
        return self._words

    def space_bits(self) -> int:
        return 64 * len(self._words)
