from .coenergy import (
    coenergy_D,
    coenergy_D_tilde,
    energy_D,
    h_small,
    h_tilde,
    local_coenergy,
    path_statistic,
)
from .rmatrix import HwClass, classify_hw, component_class, hw_vertex, rmatrix
from .splitting import split
from .verify import (
    coenergy_moving_right,
    verify_hw_classes,
    verify_involution,
    verify_splitting,
    verify_yang_baxter,
)

__all__ = [
    "HwClass",
    "classify_hw",
    "coenergy_moving_right",
    "coenergy_D",
    "coenergy_D_tilde",
    "component_class",
    "energy_D",
    "h_small",
    "h_tilde",
    "hw_vertex",
    "local_coenergy",
    "path_statistic",
    "rmatrix",
    "split",
    "verify_hw_classes",
    "verify_involution",
    "verify_splitting",
    "verify_yang_baxter",
]
