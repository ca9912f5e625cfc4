from .base import BaseOneDimModel, FrozenModel
from .classical_type import ClassicalType, Diamond
from .exceptions import (
    CrystalStructureError,
    InternalArithmeticError,
    InvalidInputError,
    OneDimError,
    ReportCacheError,
)
from .partition import DominantWeight, Partition, parse_parts
from .reports import CellReport, SuiteReport
from .run_config import RunConfig

__all__ = [
    "BaseOneDimModel",
    "CellReport",
    "ClassicalType",
    "CrystalStructureError",
    "Diamond",
    "DominantWeight",
    "FrozenModel",
    "InternalArithmeticError",
    "InvalidInputError",
    "OneDimError",
    "Partition",
    "ReportCacheError",
    "RunConfig",
    "SuiteReport",
    "parse_parts",
]
