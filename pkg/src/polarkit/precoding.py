"""The five encoders: polar, CRC-polar, PAC, PS-PAC, and CCRC-polar.

Every encoder maps a K-bit data word to an N-bit codeword through the stages
data -> precoded -> profiled -> transform input -> codeword; the intermediate
vectors are kept in an :class:`EncodeTrace` for inspection and tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .gf2 import BitVec, Gf2Poly, polar_transform, poly_divmod

if TYPE_CHECKING:  # circular import only needed for type checkers
    from .construction import RateProfile

__all__ = [
    "CrcSpec",
    "ConvSpec",
    "EncodeTrace",
    "crc_encode",
    "crc_check",
    "conv_precode",
    "conv_deprecode",
    "encode",
    "mask_remainders",
]


@dataclass(frozen=True)
class CrcSpec:
    """CRC generator polynomial of degree t >= 1 with q_t = q_0 = 1."""

    poly: Gf2Poly

    def __post_init__(self):
        if self.poly.degree < 1:
            raise ValueError("CRC degree must be at least 1")
        if not self.poly.coeff(0):
            raise ValueError("CRC polynomial must have a constant term")

    @classmethod
    def from_string(cls, text: str) -> "CrcSpec":
        return cls(Gf2Poly.from_string(text))

    @property
    def degree(self) -> int:
        return self.poly.degree


@dataclass(frozen=True)
class ConvSpec:
    """Convolution polynomial p_0..p_s with p_0 = p_s = 1, degree s >= 1."""

    coeffs: tuple[int, ...]  # coeffs[l] = p_l

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("convolution polynomial needs degree >= 1")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ValueError("coefficients must be 0 or 1")
        if self.coeffs[0] != 1 or self.coeffs[-1] != 1:
            raise ValueError("convolution polynomial requires p_0 = p_s = 1")

    @classmethod
    def from_string(cls, text: str) -> "ConvSpec":
        """Parse a binary string read as [p_0, p_1, ..., p_s]."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary convolution string: {text!r}")
        return cls(tuple(int(c) for c in text))

    def coeff_list(self) -> list[int]:
        return list(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class EncodeTrace:
    """Pipeline stages of one encode call."""

    d: BitVec  # data, length K
    c: BitVec  # after CRC precoding (length K + t), or d itself
    v: BitVec  # profiled vector, length N
    u: BitVec  # polar transform input, length N
    x: BitVec  # codeword, length N


def crc_parity(d: BitVec, crc: CrcSpec) -> BitVec:
    """Systematic CRC parity of a data word.

    The data enters the division first-bit-first as the high-degree end of the
    dividend and is shifted by x^t, i.e. parity = remainder(d(x) * x^t / q(x))
    with d(x) = sum_j d_j x^(K-1-j).  The parity is returned first-out-first:
    element 0 is the coefficient of x^(t-1).
    """
    t = crc.degree
    K = len(d)
    # index a of the dividend holds the coefficient of x^a; d_0 is degree K-1+t
    dividend = BitVec(K + t, _reverse_bits(d.to_int(), K) << t)
    _, rem = poly_divmod(dividend, crc.poly)
    # emit high-degree coefficient first
    return BitVec(t, _reverse_bits(rem.to_int(), t))


def _reverse_bits(value: int, width: int) -> int:
    out = 0
    for _ in range(width):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


def crc_encode(d: BitVec, crc: CrcSpec) -> BitVec:
    """Return c = [d | parity], length K + t."""
    parity = crc_parity(d, crc)
    return BitVec(len(d) + crc.degree, d.to_int() | (parity.to_int() << len(d)))


def crc_check(c: BitVec, crc: CrcSpec) -> bool:
    """True if the trailing t bits of c are the CRC parity of its head."""
    t = crc.degree
    if len(c) <= t:
        raise ValueError("vector shorter than the CRC parity")
    head = BitVec(len(c) - t, c.to_int() & ((1 << (len(c) - t)) - 1))
    return crc_encode(head, crc) == c


def conv_precode(v: BitVec, conv: ConvSpec) -> BitVec:
    """Forward convolution u_i = XOR_l p_l v_(i-l)."""
    p = conv.coeffs
    n = len(v)
    out = 0
    vv = v.to_int()
    for l, pl in enumerate(p):
        if pl:
            out ^= vv << l
    return BitVec(n, out & ((1 << n) - 1))


def conv_deprecode(u: BitVec, conv: ConvSpec) -> BitVec:
    """Invert :func:`conv_precode` by back-substitution (p_0 = 1)."""
    p = conv.coeffs
    n = len(u)
    uu = u.to_int()
    v = 0
    for i in range(n):
        bit = (uu >> i) & 1
        for l in range(1, min(i, conv.degree) + 1):
            if p[l]:
                bit ^= (v >> (i - l)) & 1
        v |= bit << i
    return BitVec(n, v)


def scatter(bits: BitVec, positions: Iterable[int], N: int) -> BitVec:
    """Place bits at the given positions (ascending pairing) of a zero vector."""
    positions = list(positions)
    if len(positions) != len(bits):
        raise ValueError(f"{len(bits)} bits for {len(positions)} positions")
    val = 0
    for b, pos in zip(bits, positions):
        if b:
            val |= 1 << pos
    return BitVec(N, val)


def _frozen_runs(profile: "RateProfile") -> list[tuple[int, int, int]]:
    """Maximal runs of masked positions: (start, length, data bits consumed before)."""
    data_pos = set(profile.data_positions)
    masked = set(profile.masked)
    runs = []
    consumed = 0
    i = 0
    while i < profile.N:
        if i in masked:
            start = i
            while i < profile.N and i in masked:
                i += 1
            runs.append((start, i - start, consumed))
        else:
            if i in data_pos:
                consumed += 1
            i += 1
    return runs


def _window_remainder(
    data_prefix: BitVec, j: int, crc: CrcSpec, variant: str = "window"
) -> BitVec:
    """Intermediate remainder after consuming data bit j (0-based).

    ``window`` divides the (t+1)-bit sliding window ending at bit j (the first
    t windows are zero-padded on the right); ``running`` divides the whole
    prefix.  Bits enter the division first-bit-first, as in :func:`crc_parity`.
    """
    t = crc.degree
    if variant == "window":
        if j < t:
            window = [data_prefix[a] for a in range(j + 1)] + [0] * (t - j)
        else:
            window = [data_prefix[a] for a in range(j - t, j + 1)]
        dividend = BitVec(t + 1, _reverse_bits(BitVec.from_bits(window).to_int(), t + 1))
    elif variant == "running":
        prefix = [data_prefix[a] for a in range(j + 1)]
        dividend = BitVec(
            max(j + 1, 1), _reverse_bits(BitVec.from_bits(prefix).to_int(), j + 1)
        )
    else:
        raise ValueError(f"unknown remainder variant {variant!r}")
    _, rem = poly_divmod(dividend, crc.poly)
    # first-out-first: element 0 is the coefficient of x^(t-1)
    return BitVec(t, _reverse_bits(rem.to_int(), t))


def mask_remainders(
    c_scattered: BitVec, profile: "RateProfile", crc: CrcSpec, variant: str = "window"
) -> BitVec:
    """Fill the masked frozen positions of a CCRC-polar vector.

    Walks the positions in natural order; each maximal masked run receives the
    remainder current after the last data bit before it, truncated to the run
    length or cyclically repeated when the run is longer than t.
    """
    from .construction import Scheme

    if profile.scheme is not Scheme.CCRC_POLAR:
        raise ValueError(f"mask_remainders needs a ccrc_polar profile, got {profile.scheme}")
    t = crc.degree
    data = c_scattered.slice(profile.data_positions)
    val = c_scattered.to_int()
    for start, length, consumed in _frozen_runs(profile):
        rem = _window_remainder(data, consumed - 1, crc, variant)
        for off in range(length):
            if rem[off % t]:
                val |= 1 << (start + off)
    return BitVec(profile.N, val)


def encode(d: BitVec, profile: "RateProfile", variant: str = "window") -> EncodeTrace:
    """Run the full pipeline of the profile's scheme on a K-bit data word."""
    from .construction import Scheme

    if len(d) != profile.K:
        raise ValueError(f"data length {len(d)} != K = {profile.K}")
    scheme = profile.scheme

    if scheme in (Scheme.CRC_POLAR, Scheme.CCRC_POLAR):
        c = crc_encode(d, profile.crc)
        v = scatter(c, profile.info, profile.N)
        if scheme is Scheme.CCRC_POLAR:
            v = mask_remainders(v, profile, profile.crc, variant)
        u = v
    elif scheme in (Scheme.PAC, Scheme.PS_PAC):
        c = d
        v = scatter(d, profile.info, profile.N)
        u = conv_precode(v, profile.conv)
    else:
        c = d
        v = scatter(d, profile.info, profile.N)
        u = v
    x = polar_transform(u)
    return EncodeTrace(d=d, c=c, v=v, u=u, x=x)
