"""Reliability orderings and rate profiles for the five coding schemes.

A reliability ordering lists the N transform-input indices from least to most
reliable.  The shipped reference orderings (``data/reliability/``) were
produced by the Gaussian-approximation construction below and are pinned by
golden tests; the construction itself stays available for other lengths and
design SNRs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .precoding import ConvSpec, CrcSpec

__all__ = [
    "Scheme",
    "ReliabilityOrder",
    "RateProfile",
    "gaussian_reliabilities",
    "load_reliabilities",
    "bundled_order",
    "build_profile",
]


class Scheme(str, enum.Enum):
    POLAR = "polar"
    CRC_POLAR = "crc_polar"
    PAC = "pac"
    PS_PAC = "ps_pac"
    CCRC_POLAR = "ccrc_polar"

    def __str__(self) -> str:  # so '%s' gives the bare name in reports
        return self.value


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class ReliabilityOrder:
    """Permutation of [0, N) from least to most reliable index."""

    order: tuple[int, ...]
    source: str = "unspecified"

    def __post_init__(self):
        n = len(self.order)
        if sorted(self.order) != list(range(n)):
            raise ValueError("ordering is not a permutation of [0, N)")

    @property
    def N(self) -> int:
        return len(self.order)

    def most_reliable(self, k: int) -> list[int]:
        """The k most reliable indices, sorted ascending by index."""
        if not 0 <= k <= self.N:
            raise ValueError(f"k={k} outside [0, {self.N}]")
        return sorted(self.order[self.N - k :])


def _phi_inv_approx(x: float) -> float:
    """Piecewise check-node mean update for Gaussian-approximation DE."""
    if x > 12.0:
        return 0.9861 * x - 2.3152
    if x > 3.5:
        return x * (0.009005 * x + 0.7694) - 0.9507
    if x > 1.0:
        return x * (0.062883 * x + 0.3678) - 0.1627
    return x * (0.2202 * x + 0.06448)


def gaussian_reliabilities(
    N: int, design_snr_db: float, design_rate: float = 0.5
) -> ReliabilityOrder:
    """Gaussian-approximation density evolution on bit-channel LLR means.

    The root mean is 4 * design_rate * 10^(design_snr_db/10); check nodes use
    the piecewise mean update, variable nodes add means.  Indices are sorted
    ascending by reliability, ties broken by ascending index.
    """
    if not _is_pow2(N):
        raise ValueError(f"N must be a power of two, got {N}")
    if not math.isfinite(design_snr_db):
        raise ValueError("design SNR must be finite")
    n = N.bit_length() - 1
    m = [0.0] * N
    m[0] = 4.0 * design_rate * 10.0 ** (design_snr_db / 10.0)
    for level in range(1, n + 1):
        half = 1 << (level - 1)
        for j in range(half):
            t = m[j]
            m[j] = _phi_inv_approx(t)
            m[half + j] = 2.0 * t
    # the recursion above fills means in bit-reversed channel order
    mean = [0.0] * N
    for i in range(N):
        r = int(format(i, f"0{n}b")[::-1], 2) if n else 0
        mean[i] = m[r]
    order = sorted(range(N), key=lambda i: (mean[i], i))
    return ReliabilityOrder(
        tuple(order), source=f"gaussian_approximation({design_snr_db} dB)"
    )


def load_reliabilities(path: str | Path) -> ReliabilityOrder:
    """Parse an ordering file: whitespace-separated indices, least reliable
    first; lines starting with '#' are comments."""
    tokens: list[str] = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens.extend(line.split())
    try:
        order = tuple(int(t) for t in tokens)
    except ValueError as e:
        raise ValueError(f"{path}: non-integer token in ordering file") from e
    return ReliabilityOrder(order, source=f"file({path})")


def bundled_order(N: int) -> ReliabilityOrder:
    """Reference ordering shipped with the package (N in {32, 64, 128, 256, 512})."""
    ref = resources.files("polarkit.data").joinpath(f"reliability/n{N}.txt")
    if not ref.is_file():
        raise FileNotFoundError(f"no bundled reliability ordering for N={N}")
    with resources.as_file(ref) as p:
        ro = load_reliabilities(p)
    if ro.N != N:
        raise ValueError(f"bundled ordering for N={N} has wrong length {ro.N}")
    return ReliabilityOrder(ro.order, source=f"bundled(N={N})")


@dataclass(frozen=True)
class RateProfile:
    """Resolved index sets for one (scheme, N, K) code."""

    scheme: Scheme
    N: int
    K: int
    info: tuple[int, ...]
    frozen: tuple[int, ...]
    crc_positions: tuple[int, ...] = ()
    reserved: tuple[int, ...] = ()
    masked: tuple[int, ...] = ()
    crc: Optional[CrcSpec] = None
    conv: Optional[ConvSpec] = None
    alpha: int = 0

    def __post_init__(self):
        if not _is_pow2(self.N):
            raise ValueError(f"N must be a power of two, got {self.N}")
        info, frz = set(self.info), set(self.frozen)
        if info & frz or info | frz != set(range(self.N)):
            raise ValueError("info and frozen sets must partition [0, N)")
        if list(self.info) != sorted(info) or list(self.frozen) != sorted(frz):
            raise ValueError("index sets must be sorted")
        t = self.crc.degree if self.crc else 0
        if self.scheme in (Scheme.CRC_POLAR, Scheme.CCRC_POLAR):
            if self.crc is None:
                raise ValueError(f"{self.scheme} requires a CRC polynomial")
            if len(self.info) != self.K + t:
                raise ValueError("CRC schemes need |info| = K + t")
            if set(self.crc_positions) != set(sorted(self.info)[-t:]):
                raise ValueError("CRC positions must be the t largest info indices")
        else:
            if len(self.info) != self.K:
                raise ValueError("|info| must equal K")
            if self.crc_positions:
                raise ValueError("only CRC schemes carry CRC positions")
        if self.scheme in (Scheme.PAC, Scheme.PS_PAC):
            if self.conv is None:
                raise ValueError(f"{self.scheme} requires a convolution polynomial")
        if self.scheme is Scheme.PS_PAC:
            if len(self.reserved) != self.alpha:
                raise ValueError("|reserved| must equal alpha")
            if not set(self.reserved) <= set(self.frozen):
                raise ValueError("reserved set must be frozen")
        elif self.reserved:
            raise ValueError("only ps_pac carries a reserved set")
        if self.scheme is Scheme.CCRC_POLAR:
            expect = tuple(j for j in self.frozen if j > min(self.info))
            if tuple(self.masked) != expect:
                raise ValueError("masked set must be all frozen indices above min(info)")
        elif self.masked:
            raise ValueError("only ccrc_polar carries a masked set")

    @property
    def data_positions(self) -> tuple[int, ...]:
        """Positions of the K data bits (info set minus CRC positions)."""
        if self.crc_positions:
            r = set(self.crc_positions)
            return tuple(i for i in self.info if i not in r)
        return self.info

    def describe(self) -> str:
        lines = [
            f"scheme = {self.scheme}",
            f"N = {self.N}",
            f"K = {self.K}",
            "I = " + " ".join(map(str, self.info)),
            "Ic = " + " ".join(map(str, self.frozen)),
            "R = " + " ".join(map(str, self.crc_positions)),
            "F = " + " ".join(map(str, self.reserved)),
            "D = " + " ".join(map(str, self.masked)),
        ]
        if self.crc is not None:
            lines.append(f"crc_poly = {self.crc.poly.coeffs:#x}")
        if self.conv is not None:
            lines.append("conv_poly = " + "".join(map(str, self.conv.coeff_list())))
        lines.append(f"alpha = {self.alpha}")
        return "\n".join(lines) + "\n"


def build_profile(
    scheme: Scheme | str,
    N: int,
    K: int,
    order: ReliabilityOrder,
    crc: Optional[CrcSpec] = None,
    conv: Optional[ConvSpec] = None,
    alpha: int = 0,
) -> RateProfile:
    """Resolve the index sets of a code from a reliability ordering."""
    scheme = Scheme(scheme)
    if order.N != N:
        raise ValueError(f"ordering is for N={order.N}, not {N}")
    if not 1 <= K <= N:
        raise ValueError(f"K={K} outside [1, {N}]")

    if scheme in (Scheme.CRC_POLAR, Scheme.CCRC_POLAR):
        if crc is None:
            raise ValueError(f"{scheme} requires a CRC polynomial")
        t = crc.degree
        if K + t > N:
            raise ValueError(f"K + t = {K + t} exceeds N = {N}")
        info = order.most_reliable(K + t)
        crc_positions = tuple(info[-t:])
        frozen = sorted(set(range(N)) - set(info))
        masked: tuple[int, ...] = ()
        if scheme is Scheme.CCRC_POLAR:
            masked = tuple(j for j in frozen if j > info[0])
        return RateProfile(
            scheme, N, K, tuple(info), tuple(frozen),
            crc_positions=crc_positions, masked=masked, crc=crc,
        )

    if scheme in (Scheme.PAC, Scheme.PS_PAC):
        if conv is None:
            raise ValueError(f"{scheme} requires a convolution polynomial")
        if scheme is Scheme.PS_PAC:
            if alpha < 0:
                raise ValueError("alpha must be nonnegative")
            if alpha >= conv.degree:
                raise ValueError(
                    f"ps_pac needs conv degree s > alpha (s={conv.degree}, alpha={alpha})"
                )
            if K + alpha > N:
                raise ValueError("K + alpha exceeds N")
            ranks = order.order
            info = sorted(ranks[N - K - alpha : N - alpha])
            reserved = sorted(ranks[N - alpha :]) if alpha else []
            frozen = sorted(set(range(N)) - set(info))
            return RateProfile(
                scheme, N, K, tuple(info), tuple(frozen),
                reserved=tuple(reserved), conv=conv, alpha=alpha,
            )
        info = order.most_reliable(K)
        frozen = sorted(set(range(N)) - set(info))
        return RateProfile(scheme, N, K, tuple(info), tuple(frozen), conv=conv)

    info = order.most_reliable(K)
    frozen = sorted(set(range(N)) - set(info))
    return RateProfile(scheme, N, K, tuple(info), tuple(frozen))


def load_profile(path: str | Path) -> RateProfile:
    """Read back a profile file produced by :meth:`RateProfile.describe`."""
    fields: dict[str, str] = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()
    try:
        scheme = Scheme(fields["scheme"])
        N = int(fields["N"])
        K = int(fields["K"])
        ints = lambda key: tuple(int(x) for x in fields.get(key, "").split())
        crc = CrcSpec.from_string(fields["crc_poly"]) if "crc_poly" in fields else None
        conv = ConvSpec.from_string(fields["conv_poly"]) if "conv_poly" in fields else None
        return RateProfile(
            scheme, N, K, ints("I"), ints("Ic"),
            crc_positions=ints("R"), reserved=ints("F"), masked=ints("D"),
            crc=crc, conv=conv, alpha=int(fields.get("alpha", "0")),
        )
    except KeyError as e:
        raise ValueError(f"{path}: missing profile field {e}") from e
