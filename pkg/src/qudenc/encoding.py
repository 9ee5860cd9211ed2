"""Integer-to-bitstring codes for d-level systems.

Four code families map a level index l in {0, ..., d-1} to a string of
qubit values:

* standard binary (SB):  R(l) = binary digits of l on ceil(log2 d) qubits;
* Gray:                  R(l) = l XOR (l >> 1), the reflected binary code,
  so consecutive levels always differ in exactly one bit;
* unary (one-hot):       R(l) sets exactly bit l among d qubits;
* block unary (BU):      ceil(d/g) blocks of ceil(log2(g+1)) qubits; level l
  occupies block floor(l/g), which holds the local code (SB or Gray) of the
  value (l mod g) + 1.  An all-zero block means "not this block", which is
  why local values start at 1.

Bit order convention: index 0 is the least significant bit and the lowest
qubit index.  Printed strings are big-endian ("0101" reads x3 x2 x1 x0);
block-unary display inserts a space between blocks.

The bitmask subset C(l) is the minimal set of qubits whose values pin down
level l: all qubits for a compact code, {l} for unary, and the block's bits
for block unary.  An operator element |l><l'| only ever needs the qubits in
C(l) | C(l').
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_D = 2**16

SB = "sb"
GRAY = "gray"
UNARY = "unary"
BLOCK_UNARY = "block_unary"

_KINDS = (SB, GRAY, UNARY, BLOCK_UNARY)
_LOCAL_KINDS = (SB, GRAY)

BitString = tuple[int, ...]


class InvalidCodeword(ValueError):
    """A bitstring that is not in the image of the code."""


@dataclass(frozen=True)
class EncodingSpec:
    """Which code to use, plus the level count d.

    For block unary, ``local_kind`` picks the in-block code and ``g`` the
    block size (number of levels per block).  Both are ignored for the
    other kinds.
    """

    kind: str
    d: int
    local_kind: str = SB
    g: int = 3

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown encoding kind {self.kind!r}")
        if not 2 <= self.d <= MAX_D:
            raise ValueError(f"d must be in [2, {MAX_D}], got {self.d}")
        if self.kind == BLOCK_UNARY:
            if self.local_kind not in _LOCAL_KINDS:
                raise ValueError(f"unknown local code {self.local_kind!r}")
            if self.g < 1:
                raise ValueError(f"block size g must be >= 1, got {self.g}")

    @property
    def block_width(self) -> int:
        """Qubits per block (block unary only): ceil(log2(g+1))."""
        return self.g.bit_length()

    def describe(self) -> str:
        if self.kind == BLOCK_UNARY:
            return f"bu[{self.local_kind},g={self.g}](d={self.d})"
        return f"{self.kind}(d={self.d})"


def _ceil_log2(d: int) -> int:
    return (d - 1).bit_length()


def num_qubits(spec: EncodingSpec) -> int:
    """Qubit count N_q of the code: ceil(log2 d) for SB/Gray, d for unary,
    ceil(d/g) * ceil(log2(g+1)) for block unary."""
    if spec.kind in (SB, GRAY):
        return _ceil_log2(spec.d)
    if spec.kind == UNARY:
        return spec.d
    blocks = -(-spec.d // spec.g)
    return blocks * spec.block_width


def _int_to_bits(x: int, n: int) -> BitString:
    return tuple((x >> i) & 1 for i in range(n))


def _bits_to_int(bits: BitString) -> int:
    return sum(b << i for i, b in enumerate(bits))


def _gray(l: int) -> int:
    return l ^ (l >> 1)


def _gray_inverse(x: int) -> int:
    mask = x >> 1
    while mask:
        x ^= mask
        mask >>= 1
    return x


def _local_value_bits(spec: EncodingSpec, v: int) -> BitString:
    """In-block code of local value v on block_width bits."""
    code = v if spec.local_kind == SB else _gray(v)
    return _int_to_bits(code, spec.block_width)


def encode(spec: EncodingSpec, l: int) -> BitString:
    """Codeword R(l), index 0 = least significant bit / lowest qubit."""
    if not 0 <= l < spec.d:
        raise ValueError(f"level {l} out of range [0, {spec.d})")
    n = num_qubits(spec)
    if spec.kind == SB:
        return _int_to_bits(l, n)
    if spec.kind == GRAY:
        return _int_to_bits(_gray(l), n)
    if spec.kind == UNARY:
        return tuple(1 if i == l else 0 for i in range(n))
    # Block unary: one occupied block, local value (l mod g) + 1 inside it.
    block, local = divmod(l, spec.g)
    w = spec.block_width
    bits = [0] * n
    bits[block * w : (block + 1) * w] = _local_value_bits(spec, local + 1)
    return tuple(bits)


def decode(spec: EncodingSpec, bits: BitString) -> int:
    """Inverse of :func:`encode`; rejects strings outside the code image."""
    n = num_qubits(spec)
    if len(bits) != n:
        raise ValueError(f"expected {n} bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0 or 1")
    if spec.kind in (SB, GRAY):
        x = _bits_to_int(bits)
        l = x if spec.kind == SB else _gray_inverse(x)
        if l >= spec.d:
            raise InvalidCodeword(f"{format_bits(spec, bits)} is not a level < d={spec.d}")
        return l
    if spec.kind == UNARY:
        set_bits = [i for i, b in enumerate(bits) if b]
        if len(set_bits) != 1:
            raise InvalidCodeword(f"unary codeword needs exactly one set bit, got {len(set_bits)}")
        return set_bits[0]
    # Block unary.
    w = spec.block_width
    occupied = []
    for block in range(n // w):
        chunk = bits[block * w : (block + 1) * w]
        if any(chunk):
            occupied.append((block, chunk))
    if len(occupied) != 1:
        raise InvalidCodeword(f"block-unary codeword needs exactly one occupied block, got {len(occupied)}")
    block, chunk = occupied[0]
    x = _bits_to_int(chunk)
    v = x if spec.local_kind == SB else _gray_inverse(x)
    if not 1 <= v <= spec.g:
        raise InvalidCodeword(f"local pattern {x:0{w}b} is not a local value in [1, g={spec.g}]")
    l = block * spec.g + (v - 1)
    if l >= spec.d:
        raise InvalidCodeword(f"block {block} local value {v} names level {l} >= d={spec.d}")
    return l


def bitmask_subset(spec: EncodingSpec, l: int) -> set[int]:
    """Qubits whose values determine level l: everything for compact codes,
    {l} for unary, the block's bit range for block unary."""
    if not 0 <= l < spec.d:
        raise ValueError(f"level {l} out of range [0, {spec.d})")
    if spec.kind in (SB, GRAY):
        return set(range(num_qubits(spec)))
    if spec.kind == UNARY:
        return {l}
    w = spec.block_width
    block = l // spec.g
    return set(range(block * w, (block + 1) * w))


def hamming_distance(a: BitString, b: BitString) -> int:
    """Number of positions where two equal-length bitstrings differ."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def format_bits(spec: EncodingSpec, bits: BitString) -> str:
    """Big-endian display; block unary gets a space between blocks."""
    s = "".join(str(b) for b in reversed(bits))
    if spec.kind != BLOCK_UNARY:
        return s
    w = spec.block_width
    groups = [s[i : i + w] for i in range(0, len(s), w)]
    return " ".join(groups)


def parse_bits(text: str) -> BitString:
    """Parse a big-endian display string (spaces ignored) back to bits."""
    clean = text.replace(" ", "")
    if not clean or any(c not in "01" for c in clean):
        raise ValueError(f"not a bitstring: {text!r}")
    return tuple(int(c) for c in reversed(clean))
