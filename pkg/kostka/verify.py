"""Cross-checks on Kostka–Foulkes polynomials: route agreement and box-complement duality."""

from __future__ import annotations

import logging
import time

from models.partition import Partition
from models.reports import CellReport
from weights.lattice import hat_pair

from .foulkes import kostka_foulkes

logger = logging.getLogger(__name__)


def verify_routes(lam: Partition, mu: Partition) -> CellReport:
    """The ∞KL, charge and 1-d sum routes give one polynomial."""
    started = time.perf_counter()
    values = {route: kostka_foulkes(lam, mu, route) for route in ("kl", "charge", "onedim")}
    passed = len(set(values.values())) == 1
    detail = None
    if not passed:
        detail = ", ".join(f"{route}={value}" for route, value in values.items())
        logger.warning("Kostka routes disagree at λ=%s μ=%s: %s", lam, mu, detail)
    logger.debug("routes λ=%s μ=%s took %.3fs", lam, mu, time.perf_counter() - started)
    return CellReport(lam=lam.as_list(), mu=mu.as_list(), kind="empty", rank=max(lam.length, mu.length),
                      x=str(values["onedim"]), k=str(values["kl"]), passed=passed, detail=detail)


def verify_hat_duality(lam: Partition, mu: Partition) -> CellReport:
    """K_{λ,μ}(q) = K_{λ̂,μ̂}(q) for the box complement in m = max(ℓ(λ), ℓ(μ)) rows."""
    m = max(lam.length, mu.length, 1)
    lam_hat, mu_hat, _ = hat_pair(lam.parts, mu.parts, m)
    left = kostka_foulkes(lam, mu)
    right = kostka_foulkes(Partition(parts=lam_hat), Partition(parts=mu_hat))
    passed = left == right
    return CellReport(lam=lam.as_list(), mu=mu.as_list(), kind="empty", rank=m, x=str(left), k=str(right),
                      passed=passed, detail=None if passed else f"K̂ = {right}")
