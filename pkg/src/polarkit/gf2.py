"""GF(2) primitives: bit vectors, polynomial division, and the polar transform.

Vectors are packed into Python integers, bit ``i`` of the integer holding
element ``i`` (LSB-first).  XOR and weight are then single word operations,
which the minimum-weight search depends on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "BitVec",
    "Gf2Poly",
    "polar_transform",
    "row",
    "combine_rows",
    "poly_divmod",
    "rref",
    "nullspace",
]


class BitVec:
    """Immutable dense GF(2) vector of fixed positive length.

    Element ``i`` lives at bit ``i`` of the backing integer, so ``v.to_int()``
    of ``[0, 1, 1]`` is ``0b110 = 6``.
    """

    __slots__ = ("_val", "_len")

    def __init__(self, length: int, value: int = 0):
        if length <= 0:
            raise ValueError(f"BitVec length must be positive, got {length}")
        if value < 0 or value >> length:
            raise ValueError("value has bits outside the vector length")
        self._val = value
        self._len = length

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVec":
        val = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit values must be 0 or 1, got {b!r}")
            val |= b << n
            n += 1
        return cls(n, val)

    @classmethod
    def from_support(cls, support: Iterable[int], length: int) -> "BitVec":
        val = 0
        for i in support:
            if not 0 <= i < length:
                raise IndexError(f"support index {i} outside [0, {length})")
            val |= 1 << i
        return cls(length, val)

    @classmethod
    def zeros(cls, length: int) -> "BitVec":
        return cls(length, 0)

    @classmethod
    def from_array(cls, arr) -> "BitVec":
        return cls.from_bits(int(b) for b in arr)

    def to_int(self) -> int:
        return self._val

    def to_array(self, dtype=np.uint8) -> np.ndarray:
        out = np.zeros(self._len, dtype=dtype)
        v = self._val
        while v:
            low = v & -v
            out[low.bit_length() - 1] = 1
            v ^= low
        return out

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self._len) if (self._val >> i) & 1)

    @property
    def weight(self) -> int:
        return self._val.bit_count()

    def __len__(self) -> int:
        return self._len

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._len:
            raise IndexError(f"index {i} outside [0, {self._len})")
        return (self._val >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self._val >> i) & 1 for i in range(self._len))

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self._len != other._len:
            raise ValueError(f"length mismatch: {self._len} vs {other._len}")
        return BitVec(self._len, self._val ^ other._val)

    def with_bit(self, i: int, bit: int) -> "BitVec":
        if not 0 <= i < self._len:
            raise IndexError(f"index {i} outside [0, {self._len})")
        if bit:
            return BitVec(self._len, self._val | (1 << i))
        return BitVec(self._len, self._val & ~(1 << i))

    def slice(self, indices: Iterable[int]) -> "BitVec":
        """Gather the given indices (in the given order) into a new vector."""
        return BitVec.from_bits(self[i] for i in indices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVec)
            and self._len == other._len
            and self._val == other._val
        )

    def __hash__(self) -> int:
        return hash((self._len, self._val))

    def __repr__(self) -> str:
        bits = "".join(str((self._val >> i) & 1) for i in range(self._len))
        return f"BitVec('{bits}')"


@dataclass(frozen=True)
class Gf2Poly:
    """Binary polynomial; bit ``a`` of ``coeffs`` is the coefficient of x^a."""

    coeffs: int

    def __post_init__(self):
        if self.coeffs <= 0:
            raise ValueError("polynomial must be nonzero")

    @classmethod
    def from_coeff_list(cls, bits: Iterable[int]) -> "Gf2Poly":
        """Build from [c0, c1, ..., cd] with c_a the coefficient of x^a."""
        val = 0
        for a, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"coefficients must be 0 or 1, got {b!r}")
            val |= b << a
        return cls(val)

    @classmethod
    def from_string(cls, text: str) -> "Gf2Poly":
        """Parse '0x...' hex or a binary string, highest-degree bit first."""
        text = text.strip()
        if text.lower().startswith("0x"):
            return cls(int(text, 16))
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary polynomial string: {text!r}")
        return cls(int(text, 2))

    @property
    def degree(self) -> int:
        return self.coeffs.bit_length() - 1

    def coeff(self, a: int) -> int:
        return (self.coeffs >> a) & 1

    @property
    def is_monic(self) -> bool:
        return True  # leading coefficient of a nonzero binary poly is 1

    def __str__(self) -> str:
        terms = [
            ("x^%d" % a if a > 1 else ("x" if a == 1 else "1"))
            for a in range(self.degree, -1, -1)
            if self.coeff(a)
        ]
        return " + ".join(terms)


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@lru_cache(maxsize=None)
def _stage_masks(n_bits: int) -> tuple[tuple[int, int], ...]:
    """(step, mask) per butterfly stage for a length-2^n transform.

    ``mask`` selects the positions whose stage bit is 0; they absorb the XOR
    from their partner ``step`` above.
    """
    N = 1 << n_bits
    full = (1 << N) - 1
    out = []
    for b in range(n_bits):
        step = 1 << b
        block = (1 << step) - 1
        mask = 0
        # positions p with (p >> b) & 1 == 0, as repeating blocks
        for start in range(0, N, 2 * step):
            mask |= block << start
        out.append((step, mask & full))
    return tuple(out)


def polar_transform(u: BitVec) -> BitVec:
    """Multiply by G_N = G_2^{(x)n} via the n-stage butterfly; self-inverse."""
    N = len(u)
    if not _is_pow2(N):
        raise ValueError(f"transform length must be a power of two, got {N}")
    val = u.to_int()
    for step, mask in _stage_masks(N.bit_length() - 1):
        val ^= (val >> step) & mask
    return BitVec(N, val)


def polar_transform_int(value: int, N: int) -> int:
    """Integer-payload version of :func:`polar_transform` (hot paths)."""
    for step, mask in _stage_masks(N.bit_length() - 1):
        value ^= (value >> step) & mask
    return value


def row(i: int, N: int) -> BitVec:
    """Row g_i of G_N; its weight is 2^popcount(i)."""
    if not _is_pow2(N):
        raise ValueError(f"N must be a power of two, got {N}")
    if not 0 <= i < N:
        raise IndexError(f"row index {i} outside [0, {N})")
    return polar_transform(BitVec(N, 1 << i))


def combine_rows(indices: Iterable[int], N: int) -> BitVec:
    """XOR of the selected rows of G_N (= transform of the indicator vector)."""
    if not _is_pow2(N):
        raise ValueError(f"N must be a power of two, got {N}")
    val = 0
    for i in indices:
        if not 0 <= i < N:
            raise IndexError(f"row index {i} outside [0, {N})")
        val |= 1 << i
    return polar_transform(BitVec(N, val))


def poly_divmod(dividend: BitVec, divisor: Gf2Poly) -> tuple[BitVec, BitVec]:
    """Long division over GF(2).

    Returns (quotient, remainder); the remainder always has exactly
    ``divisor.degree`` coefficients so callers can place it verbatim.
    """
    t = divisor.degree
    if t < 1:
        raise ValueError("divisor degree must be at least 1")
    q = divisor.coeffs
    rem = dividend.to_int()
    quot = 0
    for a in range(len(dividend) - 1, t - 1, -1):
        if (rem >> a) & 1:
            rem ^= q << (a - t)
            quot |= 1 << (a - t)
    qlen = max(len(dividend) - t, 1)
    return BitVec(qlen, quot & ((1 << qlen) - 1)), BitVec(t, rem)


def rref(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of integer bit-rows; returns (rows, pivots)."""
    mat = list(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(mat):
            break
        bit = 1 << c
        pivot = next((k for k in range(r, len(mat)) if mat[k] & bit), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for k in range(len(mat)):
            if k != r and mat[k] & bit:
                mat[k] ^= mat[r]
        pivots.append(c)
        r += 1
    return [m for m in mat[:r] if m], pivots


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of the null space {x : rows . x = 0} over GF(2), as bit-rows."""
    rr, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in (c for c in range(ncols) if c not in pivot_set):
        v = 1 << f
        for rw, p in zip(rr, pivots):
            if (rw >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis
