from .linalg import det, det_leibniz, perm_sign, solve_rational
from .multipoly import MultiPoly
from .ratfunc import ALPHA, AlphaRational
from .superpoly import (
    SuperPolynomial,
    apply_K,
    orbit_sum,
    superpoly_mul,
    symmetrize,
    symmetrize_canonical,
)

__all__ = [
    "ALPHA",
    "AlphaRational",
    "MultiPoly",
    "SuperPolynomial",
    "apply_K",
    "det",
    "det_leibniz",
    "orbit_sum",
    "perm_sign",
    "solve_rational",
    "superpoly_mul",
    "symmetrize",
    "symmetrize_canonical",
]
