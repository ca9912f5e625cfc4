from .charge import charge, reading_word, ssyt
from .foulkes import cocharge_kf, kostka_foulkes
from .k_polynomials import branching_check, k_polynomial
from .littlewood_richardson import LRTable, default_table, lr_coefficient
from .verify import verify_hat_duality, verify_routes

__all__ = [
    "LRTable",
    "branching_check",
    "charge",
    "cocharge_kf",
    "default_table",
    "k_polynomial",
    "kostka_foulkes",
    "lr_coefficient",
    "reading_word",
    "ssyt",
    "verify_hat_duality",
    "verify_routes",
]
