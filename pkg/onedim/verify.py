"""Per-cell verifications for the 1-d sum side: X̄ = K̄ through θ, rank stability, the column statements."""

from __future__ import annotations

import logging
import time
from typing import Iterable, Optional, Sequence

from crystal.highest_weight import e_set, highest_weight_vertices
from models.classical_type import Diamond
from models.partition import Partition
from models.reports import CellReport
from weights.partitions import partitions_of

from .bijection import (
    CheckLog,
    check_coenergy_shift,
    check_columns_shift,
    check_d_tilde_constant,
    check_d_tilde_restricts,
    check_f_equals_e,
    check_split_square,
    check_theta_rows,
    check_zigzag,
    grading_identity,
    theta_bijection,
)
from .sums import default_rank, x_sum

logger = logging.getLogger(__name__)


def _cell(lam, mu, kind: str, n: int, x: str, k: str, log: CheckLog, vertices: int, started: float) -> CellReport:
    logger.debug("cell λ=%s μ=%s kind=%s n=%d took %.3fs", lam, mu, kind, n, time.perf_counter() - started)
    if not log.ok:
        logger.warning("cell λ=%s μ=%s kind=%s failed: %s", lam, mu, kind, log.summary())
    return CellReport(
        lam=list(lam), mu=list(mu), kind=kind, rank=n, x=x, k=k,
        passed=log.ok, vertices=vertices, detail=log.summary() or None,
    )


def verify_theorem4(lam: Partition, mu: Partition, n: Optional[int] = None) -> CellReport:
    """X̄^{(1,1)} = K̄^{(1,1)} through the θ-bijection and its three statistic conditions."""
    from kostka.k_polynomials import k_polynomial

    started = time.perf_counter()
    m = max(lam.length, mu.length, 1)
    n = n if n is not None else default_rank(Diamond.ONE_ONE, m)
    log = CheckLog()
    x = x_sum(lam, mu, Diamond.ONE_ONE, n)
    k = k_polynomial(lam, mu, Diamond.ONE_ONE)
    if mu.length:
        theta_bijection(lam.parts, mu.parts, n, log)
        check_d_tilde_constant(lam.parts, mu.parts, n, log)
        check_coenergy_shift(lam.parts, mu.parts, n, log)
        check_d_tilde_restricts(mu.parts, n, log)
        left, right = grading_identity(lam.parts, mu.parts, n)
        if left != right:
            log.fail(f"graded count {left} != {right}")
    if x.value != k:
        log.fail(f"X̄={x.value} K̄={k}")
    return _cell(lam.parts, mu.parts, "11", n, str(x.value), str(k), log, x.vertices, started)


def verify_ny(lam: Partition, mu: Partition, n: Optional[int] = None) -> CellReport:
    """X̄^∅_{λ,μ}(q) = K̄_{λ,μ}(q) = q^{||μ||} K_{λ,μ}(q^{-1})."""
    from kostka.foulkes import cocharge_kf

    started = time.perf_counter()
    n = n if n is not None else default_rank(Diamond.EMPTY, max(lam.length, mu.length))
    log = CheckLog()
    x = x_sum(lam, mu, Diamond.EMPTY, n)
    k = cocharge_kf(lam, mu)
    if x.value != k:
        log.fail(f"X̄={x.value} K̄={k}")
    return _cell(lam.parts, mu.parts, "empty", n, str(x.value), str(k), log, x.vertices, started)


def verify_stability(lam: Partition, mu: Partition, kind: Diamond, ranks: Iterable[int]) -> CellReport:
    """The same X̄ at every rank in ranks."""
    started = time.perf_counter()
    ranks = sorted(ranks)
    log = CheckLog()
    values = [x_sum(lam, mu, kind, r) for r in ranks]
    first = values[0]
    for r, v in zip(ranks[1:], values[1:]):
        if v.value != first.value:
            log.fail(f"rank {ranks[0]} gives {first.value}, rank {r} gives {v.value}")
    return _cell(lam.parts, mu.parts, kind.value, ranks[-1], str(first.value), str(values[-1].value),
                 log, first.vertices, started)


def verify_f_equals_e(lam: Partition, m: int, n: Optional[int] = None) -> CellReport:
    """F_{λ,1^m} = E_{λ,1^m} as sets."""
    started = time.perf_counter()
    n = n if n is not None else default_rank(Diamond.ONE_ONE, m)
    log = CheckLog()
    check_f_equals_e(lam.parts, m, n, log)
    f_count = len(highest_weight_vertices((1,) * m, lam.parts, "C", n))
    e_count = len(e_set((1,) * m, lam.parts, n)[0])
    return _cell(lam.parts, (1,) * m, "11", n, str(f_count), str(e_count), log, f_count, started)


def verify_column_coenergy(lam: Partition, m: int, n: Optional[int] = None) -> CellReport:
    """On F_{λ,1^m}: the zigzag sum equals (m − |λ|)/2 and D̄ = D̃ + (m − |λ|)/2."""
    started = time.perf_counter()
    n = n if n is not None else default_rank(Diamond.ONE_ONE, m)
    log = CheckLog()
    check_zigzag(lam.parts, m, n, log)
    check_columns_shift(lam.parts, m, n, log)
    x = x_sum(lam, Partition(parts=(1,) * m), Diamond.ONE_ONE, n)
    return _cell(lam.parts, (1,) * m, "11", n, str(x.value), str(x.value), log, x.vertices, started)


def verify_statistics(lam: Partition, mu: Partition, n: Optional[int] = None) -> CellReport:
    """Commuting split square, θ against its rewriting rules, the three D̄/D̃ relations and |F| = |E|."""
    started = time.perf_counter()
    m = max(lam.length, mu.length, 1)
    n = n if n is not None else default_rank(Diamond.ONE_ONE, m)
    log = CheckLog()
    check_split_square(lam.parts, mu.parts, n, log)
    check_theta_rows(lam.parts, mu.parts, n, log)
    check_d_tilde_constant(lam.parts, mu.parts, n, log)
    check_coenergy_shift(lam.parts, mu.parts, n, log)
    check_d_tilde_restricts(mu.parts, n, log)
    f_count = len(highest_weight_vertices(mu.parts, lam.parts, "C", n))
    e_count = len(e_set(mu.parts, lam.parts, n)[0])
    if f_count != e_count:
        log.fail(f"|F|={f_count} |E|={e_count}")
    return _cell(lam.parts, mu.parts, "11", n, str(f_count), str(e_count), log, f_count, started)


def grid_pairs(max_mu: int, m: int, same_parity: bool = True, min_mu: int = 1):
    """(λ, μ) ∈ P_m × P_m with min_mu ≤ |μ| ≤ max_mu and |λ| ≤ |μ|."""
    for size in range(min_mu, max_mu + 1):
        for mu in partitions_of(size, m):
            for lam_size in range(size, -1, -1):
                if same_parity and (size - lam_size) % 2:
                    continue
                for lam in partitions_of(lam_size, m):
                    yield Partition(parts=lam), Partition(parts=mu)


def columns_grid(max_m: int) -> Sequence:
    out = []
    for m in range(1, max_m + 1):
        for size in range(m, -1, -2):
            for lam in partitions_of(size, m):
                out.append((Partition(parts=lam), m))
    return out
