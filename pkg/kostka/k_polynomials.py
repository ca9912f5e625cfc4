"""K-polynomials K̄^⋄_{λ,μ} and Littlewood's branching sums."""

from __future__ import annotations

import logging

from algebra.qpoly import QPoly
from models.classical_type import Diamond
from models.exceptions import InvalidInputError
from models.partition import Partition
from weights.partitions import diamond_partitions, dominates, partitions_of

from .foulkes import Route, cocharge_kf
from .littlewood_richardson import default_table

logger = logging.getLogger(__name__)


def k_polynomial(lam: Partition, mu: Partition, diamond: Diamond, route: Route = "kl") -> QPoly:
    """K̄^⋄_{λ,μ}(q) = q^{(|μ|−|λ|)/2} Σ_ν K̄_{ν,μ}(q) Σ_{γ∈P_m^⋄} c^ν_{λγ}.

    ν runs over P_m with |ν| = |μ| and ν ⊵ μ; γ over P_m^⋄ of size |ν| − |λ|.
    """
    m = max(lam.length, mu.length, 1)
    gap = mu.size - lam.size
    if gap < 0:
        return QPoly.zero()
    total = QPoly.zero()
    gammas = [Partition(parts=g) for g in diamond_partitions(gap, m, diamond)]
    if not gammas:
        return total
    for nu_parts in partitions_of(mu.size, m):
        if not dominates(nu_parts, mu.parts):
            continue
        nu = Partition(parts=nu_parts)
        weight = sum(default_table(lam, gamma, nu) for gamma in gammas)
        if weight:
            total = total + cocharge_kf(nu, mu, route) * weight
    return total.shift(gap)


def branching_check(nu: Partition, lam: Partition, n: int) -> int:
    """Σ_{γ∈P_m^{(1,1)}} c^ν_{λγ}, the D_n → A_{n−1} branching multiplicity for n ≥ m."""
    m = max(nu.length, lam.length, 1)
    if n < m:
        raise InvalidInputError(f"Rank {n} is below the {m} parts of ν, λ")
    gap = nu.size - lam.size
    if gap < 0:
        return 0
    return sum(default_table(lam, Partition(parts=g), nu) for g in diamond_partitions(gap, m, Diamond.ONE_ONE))
