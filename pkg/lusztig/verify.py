"""Per-cell checks for KL, ∞KL and their relation to K-polynomials and 1-d sums."""

from __future__ import annotations

import logging
import time
from typing import Dict, List, Optional, Sequence

from algebra.qpoly import QPoly
from models.classical_type import ClassicalType, Diamond
from models.exceptions import InvalidInputError
from models.partition import Partition
from models.reports import CellReport
from weights.lattice import hat_pair, is_dominant, norms, pad
from weights.roots import RootSystem, lusztig_weights, root_system

from .kl import kl_poly, stable_kl, translate

logger = logging.getLogger(__name__)

DEFAULT_RANKS: Dict[Diamond, int] = {
    Diamond.EMPTY: 3,
    Diamond.ONE: 2,
    Diamond.TWO: 2,
    Diamond.ONE_ONE: 4,
}


def rank_for(diamond: Diamond, m: int, n: Optional[int] = None) -> int:
    if n is not None:
        if n < m:
            raise InvalidInputError(f"Rank {n} is below m = {m}")
        return n
    return max(DEFAULT_RANKS[diamond], m)


def theorem6_sides(lam: Partition, mu: Partition, diamond: Diamond, n: int,
                   rs: Optional[RootSystem] = None, bump: int = 0):
    """(K̄^⋄_{λ,μ}(q), q^{||μ||+|μ|−|λ|} ∞KL_{λ̂,μ̂}(q^{-1})) at rank n."""
    from kostka.k_polynomials import k_polynomial

    t = ClassicalType(family=diamond.family, n=n)
    rs = rs or lusztig_weights(t)
    lam_hat, mu_hat, _ = hat_pair(lam.parts, mu.parts, n, bump)
    size, mu_norm = norms(mu.parts)
    right = stable_kl(lam_hat, mu_hat, t, rs).bar().shift(2 * (mu_norm + size - lam.size))
    return k_polynomial(lam, mu, diamond), right


def _report(lam: Sequence[int], mu: Sequence[int], kind: str, n: int, left: QPoly, right: QPoly,
            failures: List[str], started: float) -> CellReport:
    lam, mu = list(lam), list(mu)
    logger.debug("cell λ=%s μ=%s %s n=%d took %.3fs", lam, mu, kind, n, time.perf_counter() - started)
    if failures:
        logger.warning("cell λ=%s μ=%s %s n=%d failed: %s", lam, mu, kind, n, "; ".join(failures))
    return CellReport(lam=lam, mu=mu, kind=kind, rank=n, x=str(left), k=str(right),
                      passed=not failures, detail="; ".join(failures[:5]) or None)


def verify_theorem6(lam: Partition, mu: Partition, diamond: Diamond, n: Optional[int] = None) -> CellReport:
    """K̄^⋄ against the barred, shifted ∞KL of the hat pair; repeated with M + 1."""
    started = time.perf_counter()
    n = rank_for(diamond, max(lam.length, mu.length, 1), n)
    left, right = theorem6_sides(lam, mu, diamond, n)
    failures = []
    if left != right:
        failures.append(f"K̄={left} ∞KL side={right}")
    _, bumped = theorem6_sides(lam, mu, diamond, n, bump=1)
    if bumped != right:
        failures.append(f"M+1 gives {bumped}")
    return _report(lam.parts, mu.parts, diamond.value, n, left, right, failures, started)


def verify_corollary7(lam: Partition, mu: Partition, diamond: Diamond, n: Optional[int] = None) -> CellReport:
    """X̄^⋄ = q^{||μ||+|μ|−|λ|} KL_{λ̂,μ̂}(q^{-1}) with the full Weyl group sum."""
    from onedim.sums import default_rank, x_sum

    started = time.perf_counter()
    m = max(lam.length, mu.length, 1)
    n = rank_for(diamond, m, n)
    t = ClassicalType(family=diamond.family, n=n)
    lam_hat, mu_hat, _ = hat_pair(lam.parts, mu.parts, n)
    size, mu_norm = norms(mu.parts)
    right = kl_poly(lam_hat, mu_hat, t, lusztig_weights(t)).bar().shift(2 * (mu_norm + size - lam.size))
    left = x_sum(lam, mu, diamond, default_rank(diamond, m)).value
    failures = [] if left == right else [f"X̄={left} KL side={right}"]
    return _report(lam.parts, mu.parts, diamond.value, n, left, right, failures, started)


def verify_prop5(lam: Sequence[int], mu: Sequence[int], t: ClassicalType,
                 rs: Optional[RootSystem] = None, kmax: int = 4) -> CellReport:
    """KL_{λ+(kⁿ),μ+(kⁿ)} = ∞KL_{λ,μ} for every k from ⌈(|λ|−|μ|)/2⌉ up to kmax."""
    started = time.perf_counter()
    rs = rs or lusztig_weights(t)
    lam, mu = pad(lam, t.n), pad(mu, t.n)
    stable = stable_kl(lam, mu, t, rs)
    threshold = max(0, -((sum(mu) - sum(lam)) // 2))
    failures: List[str] = []
    last = stable
    for k in range(threshold, kmax + 1):
        lam_k, mu_k = translate(lam, k), translate(mu, k)
        if not (is_dominant(lam_k, t) and is_dominant(mu_k, t)):
            continue
        last = kl_poly(lam_k, mu_k, t, rs)
        if last != stable:
            failures.append(f"k={k}: KL={last}")
    return _report(lam, mu, str(t), t.n, stable, last, failures, started)


def negative_control(lam: Partition, mu: Partition, n: int = 2) -> CellReport:
    """K̄^{(1)} against ∞KL on type B: agrees with L(short) = ½, disagrees with L ≡ 1.

    The cell passes when both happen, so it witnesses that the half weight is needed.
    """
    started = time.perf_counter()
    t = ClassicalType(family="B", n=n)
    left, right_half = theorem6_sides(lam, mu, Diamond.ONE, n, lusztig_weights(t))
    _, right_one = theorem6_sides(lam, mu, Diamond.ONE, n, root_system(t))
    failures = []
    if left != right_half:
        failures.append(f"L(short)=1/2 gives {right_half}, K̄={left}")
    if left == right_one:
        failures.append("L≡1 also agrees; not a witness")
    return _report(lam.parts, mu.parts, "1", n, left, right_one, failures, started)


def verify_translation(lam: Sequence[int], mu: Sequence[int], t: ClassicalType,
                       rs: Optional[RootSystem] = None, shifts: Sequence[int] = (-2, -1, 1, 2)) -> CellReport:
    """∞KL_{λ+(kⁿ),μ+(kⁿ)} = ∞KL_{λ,μ}."""
    started = time.perf_counter()
    rs = rs or root_system(t)
    base = stable_kl(lam, mu, t, rs)
    failures = []
    for k in shifts:
        moved = stable_kl(translate(lam, k), translate(mu, k), t, rs)
        if moved != base:
            failures.append(f"k={k}: {moved}")
    return _report(lam, mu, str(t), t.n, base, base, failures, started)


def verify_multiplicity(lam: Sequence[int], mu: Sequence[int], n: int = 2) -> CellReport:
    """KL^{C_n}_{λ,μ}(1) = dim V(λ)_μ counted on the crystal."""
    from crystal.highest_weight import weight_multiplicity

    started = time.perf_counter()
    t = ClassicalType(family="C", n=n)
    lam, mu = pad(lam, n), pad(mu, n)
    value = kl_poly(lam, mu, t)
    count = weight_multiplicity(lam, mu, n)
    failures = [] if value.at_one() == count else [f"KL(1)={value.at_one()} crystal count={count}"]
    return _report(lam, mu, str(t), n, value, QPoly.one() * count,
                   failures, started)
