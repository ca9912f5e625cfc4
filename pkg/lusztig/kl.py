"""Lusztig q-analogues KL^{g,L} and their stable versions ∞KL."""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence, Tuple, Union

from algebra.qpoly import QPoly
from models.classical_type import ClassicalType
from models.exceptions import InternalArithmeticError, InvalidInputError
from models.partition import DominantWeight
from weights.lattice import dominance_geq, is_dominant
from weights.roots import RootSystem, doubled_rho, root_system
from weights.weyl import WeylElement, symmetric_group, weyl_group

from .partition_function import partition_cache

logger = logging.getLogger(__name__)

WeightLike = Union[DominantWeight, Sequence[int]]


def _coords(v: WeightLike) -> Tuple[int, ...]:
    return v.coords if isinstance(v, DominantWeight) else tuple(v)


def _alternating_sum(
    lam: Tuple[int, ...], mu: Tuple[int, ...], t: ClassicalType, rs: RootSystem, group: Iterable[WeylElement]
) -> QPoly:
    """Σ_w (−1)^w P_q^L(w(λ+ρ) − (μ+ρ)), using 2ρ to stay integral."""
    two_rho = doubled_rho(t)
    lam_shift = tuple(2 * a + r for a, r in zip(lam, two_rho))
    mu_shift = tuple(2 * a + r for a, r in zip(mu, two_rho))
    pf = partition_cache(rs)
    total = QPoly.zero()
    for w in group:
        doubled = [a - b for a, b in zip(w.act(lam_shift), mu_shift)]
        if any(x % 2 for x in doubled):
            raise InternalArithmeticError(f"w(λ+ρ) − (μ+ρ) is not integral for {w}")
        term = pf(tuple(x // 2 for x in doubled))
        if not term.is_zero():
            total = total + (term if w.parity == 1 else -term)
    return total


def _check_length(lam, mu, t: ClassicalType) -> None:
    if len(lam) != t.n or len(mu) != t.n:
        raise InvalidInputError(f"Weights {lam}, {mu} must have {t.n} entries for {t}")


def kl_poly(lam: WeightLike, mu: WeightLike, t: ClassicalType, rs: Optional[RootSystem] = None) -> QPoly:
    """KL^{g,L}_{λ,μ}(q): sum over the full Weyl group. L ≡ 1 unless rs says otherwise."""
    lam, mu = _coords(lam), _coords(mu)
    _check_length(lam, mu, t)
    for v in (lam, mu):
        if not is_dominant(v, t):
            raise InvalidInputError(f"{v} is not dominant for {t}")
    rs = rs or root_system(t)
    if not dominance_geq(lam, mu, t):
        return QPoly.zero()
    value = _alternating_sum(lam, mu, t, rs, weyl_group(t))
    logger.debug("KL^%s_{%s,%s} = %s", t, lam, mu, value)
    return value


def stable_kl(lam: WeightLike, mu: WeightLike, t: ClassicalType, rs: Optional[RootSystem] = None) -> QPoly:
    """∞KL^{g,L}_{λ,μ}(q): the same alternating sum over S_n only, λ, μ ∈ ℤⁿ weakly decreasing."""
    lam, mu = _coords(lam), _coords(mu)
    _check_length(lam, mu, t)
    for v in (lam, mu):
        if any(a < b for a, b in zip(v, v[1:])):
            raise InvalidInputError(f"{v} is not weakly decreasing")
    rs = rs or root_system(t)
    if not dominance_geq(lam, mu, t):
        return QPoly.zero()
    return _alternating_sum(lam, mu, t, rs, symmetric_group(t.n))


def translate(v: Sequence[int], k: int) -> Tuple[int, ...]:
    """v + (kⁿ)."""
    return tuple(x + k for x in v)
