from .charpoly import CharPoly, Exponent
from .characters import (
    antisymmetrize,
    demazure_E,
    demazure_E_schur,
    divide_by_vandermonde,
    permutation_sign,
    schur,
    schur_expand,
    schur_sum,
    straighten,
    vandermonde,
)
from .qpoly import QPoly

__all__ = [
    "CharPoly",
    "Exponent",
    "QPoly",
    "antisymmetrize",
    "demazure_E",
    "demazure_E_schur",
    "divide_by_vandermonde",
    "permutation_sign",
    "schur",
    "schur_expand",
    "schur_sum",
    "straighten",
    "vandermonde",
]
