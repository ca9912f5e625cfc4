from .genfun import (
    convolution,
    genfun_check,
    genfun_coefficients,
    gl_coefficient,
    littlewood_expansion,
    littlewood_sides,
)
from .kl import kl_poly, stable_kl, translate
from .partition_function import PartitionFunctionCache, partition_cache, partition_function

__all__ = [
    "PartitionFunctionCache",
    "convolution",
    "genfun_check",
    "genfun_coefficients",
    "gl_coefficient",
    "kl_poly",
    "littlewood_expansion",
    "littlewood_sides",
    "partition_cache",
    "partition_function",
    "stable_kl",
    "translate",
]
