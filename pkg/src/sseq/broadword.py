"""Word-parallel kernels: block projection, field popcount, in-word select,
and the packed-key constant-time predecessor base case.

Field conventions: a block holds b fields of width l (2 <= l <= 16), field
j (1-based) at bits [(j-1)*l+1, j*l].  Projection masks carry one bit per
matching field, at the field's top bit (1-based position j*l).

When a kernel needs a register wider than 64 bits the computation runs on
a Python int spanning ceil(bits/64) chained words; carries and borrows
propagate exactly as a multiword add/sub chain would.
"""

from __future__ import annotations

from functools import lru_cache

_DEFAULT_MAX_KEYS = 64


@lru_cache(maxsize=None)
def _combs(width: int, count: int) -> tuple[int, int]:
    """(low comb, high comb) for `count` fields of `width` bits."""
    low = 0
    for i in range(count):
        low |= 1 << (i * width)
    return low, low << (width - 1)


class FieldBlock:
    """b fields of l bits each, packed least-significant-first."""

    __slots__ = ("payload", "width", "count")

    def __init__(self, width: int, values):
        if not 2 <= width <= 16:
            raise ValueError(f"field width must be in [2, 16], got {width}")
        values = list(values)
        payload = 0
        for j, v in enumerate(values):
            if v >> width:
                raise ValueError(f"field value {v} does not fit in {width} bits")
            payload |= v << (j * width)
        self.payload = payload
        self.width = width
        self.count = len(values)

    def field(self, j: int) -> int:
        """Value of field j (1-based)."""
        if not 1 <= j <= self.count:
            raise IndexError(f"field {j} out of range [1, {self.count}]")
        return (self.payload >> ((j - 1) * self.width)) & ((1 << self.width) - 1)

    def to_list(self) -> list[int]:
        return [self.field(j) for j in range(1, self.count + 1)]


def project_block(blk: FieldBlock, a: int) -> int:
    """Mask with bit j*l set iff field j of blk equals a; no per-field loop.

    Replicates a into every field, XORs against the payload, then marks the
    zeroed fields with an exact parallel zero test.
    """
    l, b = blk.width, blk.count
    if not 0 <= a < (1 << l):
        raise ValueError(f"value {a} does not fit in {l} bits")
    low, high = _combs(l, b)
    y = blk.payload ^ (a * low)
    return high & ~(y | ((y | high) - low))


def popcount_fields(mask: int, width: int, count: int) -> int:
    """Number of set bits in a projection mask.

    Uses the replicate/isolate/multiply/extract word-parallel scheme when
    the b*b*l-bit working register fits a word, native popcount otherwise.
    """
    b, l = count, width
    if b * b * l > 64 or b == 0:
        return mask.bit_count()
    stride = (b + 1) * l
    rep = 0
    keep = 0
    gather = 0
    for i in range(b):
        rep |= 1 << (i * b * l)
        keep |= 1 << (i * stride + l - 1)
        gather |= 1 << (i * stride)
    x = mask * rep
    y = (x & keep) >> (l - 1)
    z = (y * gather) & ((1 << 64) - 1)
    return (z >> ((b * b - 1) * l)) & ((1 << b.bit_length()) - 1)


def select_in_block(mask: int, width: int, count: int, j: int) -> int:
    """Field index (1-based) holding the j-th set bit of a projection mask.

    Parallel prefix counting: the mask is replicated into b superfields of
    capacity k = 2*b*b*l bits, superfield i keeps its first i field bits,
    all superfields are popcounted at once, the prefix counts are equality-
    projected against j, and the lowest match is located by its trailing
    zero count.
    """
    b, l = count, width
    total = popcount_fields(mask, width, count)
    if not 1 <= j <= total:
        raise ValueError(f"block holds {total} marked fields, wanted {j}")
    k = 2 * b * b * l
    rep_sf = 0
    keep = 0
    for i in range(b):
        rep_sf |= 1 << (i * k)
        for m in range(1, i + 2):
            keep |= 1 << (i * k + m * l - 1)
    y = (mask * rep_sf) & keep
    # popcount all superfields at once; replicas stay inside each superfield
    # because b*b*l <= k/2
    rep = 0
    keepc = 0
    gather = 0
    stride = (b + 1) * l
    for i in range(b):
        rep |= 1 << (i * b * l)
        keepc |= 1 << (i * stride + l - 1)
        gather |= 1 << (i * stride)
    keep_all = 0
    for i in range(b):
        keep_all |= keepc << (i * k)
    # one multiply replicates inside every superfield at once: replicas span
    # b*b*l = k/2 bits, so nothing crosses a superfield boundary
    x = y * rep
    z = ((x & keep_all) >> (l - 1)) * gather
    counts = z >> ((b * b - 1) * l)
    cb = b.bit_length()
    cmask = 0
    for i in range(b):
        cmask |= ((1 << cb) - 1) << (i * k)
    counts &= cmask
    # equality-project the prefix counts against j over k-wide fields
    low_k = 0
    for i in range(b):
        low_k |= 1 << (i * k)
    high_k = low_k << (k - 1)
    yj = counts ^ (j * low_k)
    w = high_k & ~(yj | ((yj | high_k) - low_k))
    v = w & (-w)
    return lowest_set_field(v, k)


def lowest_set_field(v: int, stride: int) -> int:
    """Position of the single set bit of v, divided by stride (1-based).

    The bit must sit at a 1-based position that is a multiple of stride.
    Trailing-zero count via the isolated bit's length, the hardware CTZ
    equivalent.
    """
    if v == 0 or v & (v - 1):
        raise ValueError("expected exactly one set bit")
    pos = v.bit_length()  # 1-based position of the bit
    if pos % stride:
        raise ValueError(f"bit at position {pos} is not stride-aligned ({stride})")
    return pos // stride


class PackedKeySet:
    """Sorted distinct keys packed with one zero separator bit per key.

    Keys of l bits are stored at stride l+1, 64//(l+1) keys per word, at
    most ``max_keys`` in one structure.  Predecessor queries subtract the
    packed block from a replicated query key and count surviving separator
    bits, one word at a time.
    """

    __slots__ = ("width", "count", "max_keys", "_words", "_per_word", "_wq")

    def __init__(self, keys, width: int, max_keys: int = 64):
        if not 1 <= width <= 16:
            raise ValueError(f"key width must be in [1, 16], got {width}")
        keys = list(keys)
        if len(keys) > max_keys:
            raise ValueError(f"at most {max_keys} keys, got {len(keys)}")
        prev = -1
        for key in keys:
            if key <= prev:
                raise ValueError("keys must be strictly increasing")
            if key >> width:
                raise ValueError(f"key {key} does not fit in {width} bits")
            prev = key
        self.width = width
        self.count = len(keys)
        self.max_keys = max_keys
        stride = width + 1
        per_word = 64 // stride
        self._per_word = per_word
        words = []
        wq = []
        for base in range(0, len(keys), per_word):
            word = 0
            chunk = keys[base : base + per_word]
            for idx, key in enumerate(chunk):
                word |= key << (idx * stride)
            words.append(word)
            low, _ = _combs(stride, len(chunk))
            wq.append((word, low, low << width, len(chunk)))
        self._words = words
        self._wq = wq

    @classmethod
    def _from_sorted(cls, keys: list[int], width: int) -> "PackedKeySet":
        """Internal: build from already-validated sorted distinct keys."""
        self = cls.__new__(cls)
        self.width = width
        self.count = len(keys)
        self.max_keys = _DEFAULT_MAX_KEYS
        stride = width + 1
        per_word = 64 // stride
        self._per_word = per_word
        if self.count <= per_word:
            word = 0
            for idx, key in enumerate(keys):
                word |= key << (idx * stride)
            if self.count:
                low, _ = _combs(stride, self.count)
                self._words = [word]
                self._wq = [(word, low, low << width, self.count)]
            else:
                self._words = []
                self._wq = []
            return self
        words = []
        wq = []
        for base in range(0, self.count, per_word):
            word = 0
            chunk = keys[base : base + per_word]
            for idx, key in enumerate(chunk):
                word |= key << (idx * stride)
            words.append(word)
            low, _ = _combs(stride, len(chunk))
            wq.append((word, low, low << width, len(chunk)))
        self._words = words
        self._wq = wq
        return self

    def get(self, idx: int) -> int:
        """Key at 0-based index idx."""
        if not 0 <= idx < self.count:
            raise IndexError(f"key index {idx} out of range [0, {self.count})")
        stride = self.width + 1
        w, off = divmod(idx, self._per_word)
        return (self._words[w] >> (off * stride)) & ((1 << self.width) - 1)

    def to_list(self) -> list[int]:
        return [self.get(i) for i in range(self.count)]

    def query(self, x: int) -> tuple[int, int]:
        """(rank, value): rank = |{keys <= x}|, value = largest key <= x.

        Returns (0, 0) when x precedes every key.
        """
        if not 0 <= x < (1 << self.width):
            raise ValueError(f"query key {x} does not fit in {self.width} bits")
        rank = 0
        for word, low, seps, t in self._wq:
            c = ((((x * low) | seps) - word) & seps).bit_count()
            rank += c
            if c < t:
                break
        if rank == 0:
            return (0, 0)
        return (rank, self.get(rank - 1))


def packed_predecessor(ks: PackedKeySet, x: int) -> tuple[int, int]:
    """Predecessor of x in a packed key set: (rank, value), (0,0) if none."""
    return ks.query(x)
