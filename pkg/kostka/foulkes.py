"""Kostka–Foulkes polynomials K_{λ,μ}(q) and their cocharge form K̄_{λ,μ}(q)."""

from __future__ import annotations

import logging
from typing import Literal

from algebra.qpoly import QPoly
from models.classical_type import ClassicalType, Diamond
from models.exceptions import InvalidInputError
from models.partition import Partition
from weights.lattice import norms, pad
from weights.partitions import dominates

from .charge import charge, reading_word, ssyt

logger = logging.getLogger(__name__)

Route = Literal["kl", "charge", "onedim"]


def _by_kl(lam: Partition, mu: Partition) -> QPoly:
    from lusztig.kl import stable_kl

    n = max(lam.length, mu.length, 2)
    return stable_kl(pad(lam.parts, n), pad(mu.parts, n), ClassicalType(family="A", n=n))


def _by_charge(lam: Partition, mu: Partition) -> QPoly:
    counts = {}
    for tab in ssyt(lam.parts, mu.parts):
        c = charge(reading_word(tab))
        counts[2 * c] = counts.get(2 * c, 0) + 1
    return QPoly(counts)


def _by_onedim(lam: Partition, mu: Partition) -> QPoly:
    from onedim.sums import default_rank, x_sum

    n = default_rank(Diamond.EMPTY, max(lam.length, mu.length))
    _, mu_norm = norms(mu.parts)
    return x_sum(lam, mu, Diamond.EMPTY, n).value.bar().shift(2 * mu_norm)


_ROUTES = {"kl": _by_kl, "charge": _by_charge, "onedim": _by_onedim}


def kostka_foulkes(lam: Partition, mu: Partition, route: Route = "kl") -> QPoly:
    """K_{λ,μ}(q); zero unless |λ| = |μ| and λ ⊵ μ.

    route "kl" takes ∞KL of type A, "charge" sums q^{charge} over tableaux,
    "onedim" bars and shifts the type-A 1-d sum.
    """
    try:
        compute = _ROUTES[route]
    except KeyError as exc:
        raise InvalidInputError(f"Unknown route {route!r}; expected one of {sorted(_ROUTES)}") from exc
    if lam.size != mu.size or not dominates(lam.parts, mu.parts):
        return QPoly.zero()
    if mu.size == 0:
        return QPoly.one()
    value = compute(lam, mu)
    logger.debug("K_{%s,%s} via %s = %s", lam, mu, route, value)
    return value


def cocharge_kf(lam: Partition, mu: Partition, route: Route = "kl") -> QPoly:
    """K̄_{λ,μ}(q) = q^{||μ||} K_{λ,μ}(q^{-1})."""
    _, mu_norm = norms(mu.parts)
    return kostka_foulkes(lam, mu, route).bar().shift(2 * mu_norm)
