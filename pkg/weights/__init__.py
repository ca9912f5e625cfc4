from .lattice import dominance_geq, hat_bound, hat_pair, is_dominant, norms, pad, simple_root_coordinates, star
from .partitions import (
    conjugate,
    contains,
    decreasing_vectors,
    diamond_partitions,
    dominates,
    in_diamond_family,
    partitions_of,
    partitions_up_to,
)
from .roots import RootSystem, doubled_rho, lusztig_weights, positive_roots, rho, root_system, simple_roots
from .weyl import WeylElement, symmetric_group, weyl_group, weyl_order

__all__ = [
    "RootSystem",
    "WeylElement",
    "conjugate",
    "contains",
    "decreasing_vectors",
    "diamond_partitions",
    "dominance_geq",
    "dominates",
    "doubled_rho",
    "hat_bound",
    "hat_pair",
    "in_diamond_family",
    "is_dominant",
    "lusztig_weights",
    "norms",
    "pad",
    "partitions_of",
    "partitions_up_to",
    "positive_roots",
    "rho",
    "root_system",
    "simple_root_coordinates",
    "simple_roots",
    "star",
    "symmetric_group",
    "weyl_group",
    "weyl_order",
]
