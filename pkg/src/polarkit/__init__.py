"""polarkit: polar / PAC / CRC-polar coding laboratory."""

__version__ = "0.1.0"

from .gf2 import BitVec, Gf2Poly, combine_rows, polar_transform, poly_divmod, row

__all__ = [
    "BitVec",
    "Gf2Poly",
    "polar_transform",
    "row",
    "combine_rows",
    "poly_divmod",
]
