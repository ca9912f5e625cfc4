from .sums import OneDimSum, coenergy_table, crystal_family, default_rank, x_sum
from .verify import (
    columns_grid,
    grid_pairs,
    verify_column_coenergy,
    verify_f_equals_e,
    verify_ny,
    verify_stability,
    verify_statistics,
    verify_theorem4,
)

__all__ = [
    "OneDimSum",
    "coenergy_table",
    "columns_grid",
    "crystal_family",
    "default_rank",
    "grid_pairs",
    "verify_column_coenergy",
    "verify_f_equals_e",
    "verify_ny",
    "verify_stability",
    "verify_statistics",
    "verify_theorem4",
]
