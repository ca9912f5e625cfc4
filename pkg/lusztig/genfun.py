"""Littlewood's product formulas and the generating function of ∞KL.

The identities checked here are infinite; every comparison is made on a
window bounded by x-degree (Littlewood) or q-degree (generating function).
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from algebra.characters import demazure_E_schur, schur
from algebra.charpoly import CharPoly, Exponent
from algebra.qpoly import QPoly
from models.classical_type import ClassicalType, Diamond
from models.exceptions import InternalArithmeticError, InvalidInputError
from models.reports import CellReport
from weights.lattice import dominance_geq, pad, star
from weights.partitions import decreasing_vectors, diamond_partitions
from weights.roots import RootSystem, lusztig_weights
from weights.weyl import symmetric_group

from .kl import stable_kl

logger = logging.getLogger(__name__)


def _geometric(root: Sequence[int], l_half: int, nvars: int, max_half: Optional[int], max_degree: Optional[int]) -> CharPoly:
    """Σ_t q^{tL} e^{tα}, cut off by q-degree or by x-degree."""
    bounded_q = max_half is not None and l_half > 0
    bounded_x = max_degree is not None and sum(root) > 0
    if not (bounded_q or bounded_x):
        raise InvalidInputError(f"No cutoff bounds the series of root {tuple(root)}")
    terms: Dict[Exponent, QPoly] = {}
    t = 0
    while not (bounded_q and t * l_half > max_half) and not (bounded_x and t * sum(root) > max_degree):
        terms[tuple(t * a for a in root)] = QPoly.monomial(t * l_half)
        t += 1
    return CharPoly(nvars, terms)


def root_product(roots: Sequence[Tuple[Tuple[int, ...], int]], nvars: int, start: Optional[CharPoly] = None,
                 max_half: Optional[int] = None, max_degree: Optional[int] = None) -> CharPoly:
    """start · Π 1/(1 − q^{L(α)} e^α), truncated after every factor."""
    acc = start if start is not None else CharPoly.one(nvars)
    for root, l_half in roots:
        acc = acc * _geometric(root, l_half, nvars, max_half, max_degree)
        if max_half is not None:
            acc = acc.truncate_q(max_half)
        if max_degree is not None:
            acc = acc.truncate_degree(max_degree)
    return acc


def littlewood_sides(diamond: Diamond, n: int, degree_cap: int) -> Tuple[CharPoly, CharPoly]:
    """(Π_{α∉R⁺(A)} 1/(1 − q^{L(α)} e^α), Σ_{γ∈P_n^⋄} q^{|γ|/2} s_γ), both cut at x-degree ≤ degree_cap."""
    if diamond is Diamond.EMPTY:
        one = CharPoly.one(n)
        return one, one
    t = ClassicalType(family=diamond.family, n=n)
    product = root_product(lusztig_weights(t).complement_of_a(), n, max_degree=degree_cap)
    series = CharPoly.zero(n)
    for size in range(degree_cap + 1):
        for gamma in diamond_partitions(size, n, diamond):
            series = series + schur(pad(gamma, n)) * QPoly.monomial(size)
    return product, series


def littlewood_expansion(diamond: Diamond, n: int, degree_cap: int) -> CharPoly:
    """The Littlewood product, after checking it against its Schur sum."""
    product, series = littlewood_sides(diamond, n, degree_cap)
    if product != series:
        raise InternalArithmeticError(f"Littlewood expansion for ⋄={diamond.value}, n={n} disagrees below degree {degree_cap}")
    return product


def verify_littlewood(diamond: Diamond, n: int, degree_cap: int) -> CellReport:
    product, series = littlewood_sides(diamond, n, degree_cap)
    passed = product == series
    detail = None
    if not passed:
        diff = product - series
        lead = max(diff.exponents())
        detail = f"first difference at x^{lead}: {diff.coefficient(lead)}"
        logger.warning("Littlewood ⋄=%s n=%d cap=%d failed: %s", diamond.value, n, degree_cap, detail)
    return CellReport(lam=[], mu=[], kind=diamond.value, rank=n, x=str(len(product)), k=str(len(series)),
                      passed=passed, vertices=len(product), detail=detail)


def reachable_shifts(rs: RootSystem, max_half: int) -> Set[Tuple[int, ...]]:
    """Every sum of positive roots whose total L stays within max_half."""
    frontier = {(0,) * rs.n: 0}
    seen = dict(frontier)
    while frontier:
        nxt: Dict[Tuple[int, ...], int] = {}
        for beta, cost in frontier.items():
            for root, l_half in rs.weighted():
                c = cost + l_half
                if c > max_half:
                    continue
                gamma = tuple(a + b for a, b in zip(beta, root))
                if gamma not in seen or seen[gamma] > c:
                    seen[gamma] = c
                    nxt[gamma] = c
        frontier = nxt
    return set(seen)


def genfun_coefficients(mu: Sequence[int], t: ClassicalType, rs: RootSystem, max_half: int) -> Dict[Exponent, QPoly]:
    """E(e^μ Π_{α∈R⁺} 1/(1 − q^{L(α)} e^α)) in the Schur basis, q-degree ≤ max_half half-units."""
    if any(l <= 0 for l in rs.l_half):
        raise InvalidInputError("The q-degree window needs L > 0 on every root")
    series = root_product(rs.weighted(), t.n, start=CharPoly.monomial(tuple(mu)), max_half=max_half)
    return demazure_E_schur(series)


def gl_coefficient(lam: Sequence[int], gamma: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of s_λ in s_γ · s_ν for rational gl_n weights λ, ν and a partition γ.

    Coefficient extraction from s_γ · a_{ν+ρ} = Σ_λ c^λ_{γν} a_{λ+ρ}.
    """
    n = len(lam)
    s_gamma = schur(pad(gamma, n))
    shifted_lam = [a + n - 1 - i for i, a in enumerate(lam)]
    shifted_nu = [a + n - 1 - i for i, a in enumerate(nu)]
    total = 0
    for w in symmetric_group(n):
        moved = w.act(shifted_nu)
        c = s_gamma.coefficient(tuple(a - b for a, b in zip(shifted_lam, moved)))
        if not c.is_zero():
            total += w.parity * c.at_one()
    return total


def convolution(lam: Sequence[int], mu: Sequence[int], t: ClassicalType) -> QPoly:
    """Σ_{γ∈P^⋄} Σ_ν q^{|γ|/2} c^λ_{γν} ∞KL^{A}_{ν,μ}(q), with ⋄ paired to the family of t."""
    diamond = _diamond_of(t.family)
    n = t.n
    size = sum(lam) - sum(mu)
    if size < 0:
        return QPoly.zero()
    a_type = ClassicalType(family="A", n=n)
    total = QPoly.zero()
    for gamma in diamond_partitions(size, n, diamond):
        for nu in decreasing_vectors(n, lam, min(lam) - size, sum(mu)):
            if not dominance_geq(nu, mu, a_type):
                continue
            c = gl_coefficient(lam, gamma, nu)
            if c:
                total = total + stable_kl(nu, mu, a_type).shift(size) * c
    return total


def _diamond_of(family: str) -> Diamond:
    for d in Diamond:
        if d.family == family:
            return d
    raise InvalidInputError(f"No ⋄ pairs with family {family}")


def genfun_check(mu: Sequence[int], t: ClassicalType, rs: Optional[RootSystem] = None, degree_window: int = 3) -> CellReport:
    """Compare the Schur coefficients of the generating function with ∞KL on a q-degree window.

    Also checks the ⋄-factorized convolution form when L is the Littlewood weighting.
    """
    rs = rs or lusztig_weights(t)
    mu = tuple(mu)
    max_half = 2 * degree_window
    coeffs = genfun_coefficients(mu, t, rs, max_half)
    candidates = {tuple(a + b for a, b in zip(mu, beta)) for beta in reachable_shifts(rs, max_half)}
    candidates = {lam for lam in candidates if all(a >= b for a, b in zip(lam, lam[1:]))}
    candidates |= set(coeffs)
    failures: List[str] = []
    check_conv = rs == lusztig_weights(t)
    for lam in sorted(candidates):
        expected = stable_kl(lam, mu, t, rs).truncate(max_half)
        got = coeffs.get(lam, QPoly.zero())
        if got != expected:
            failures.append(f"λ={lam}: series {got}, ∞KL {expected}")
        if check_conv:
            conv = convolution(lam, mu, t).truncate(max_half)
            if conv != expected:
                failures.append(f"λ={lam}: convolution {conv}, ∞KL {expected}")
    if failures:
        logger.warning("generating function μ=%s %s: %d mismatches", mu, t, len(failures))
    return CellReport(lam=[], mu=list(mu), kind=t.family, rank=t.n, x=str(len(coeffs)), k=str(len(candidates)),
                      passed=not failures, vertices=len(candidates), detail="; ".join(failures[:5]) or None)


def verify_duality(lam: Sequence[int], mu: Sequence[int]) -> CellReport:
    """∞KL^{A}_{λ*,μ*} = ∞KL^{A}_{λ,μ}."""
    t = ClassicalType(family="A", n=len(lam))
    left = stable_kl(lam, mu, t)
    right = stable_kl(star(lam), star(mu), t)
    passed = left == right
    return CellReport(lam=list(lam), mu=list(mu), kind="A", rank=t.n, x=str(left), k=str(right), passed=passed,
                      detail=None if passed else "duality fails")


def duality_pairs(n: int, bound: int):
    """Weakly decreasing (λ, μ) with entries in [−bound, bound], |λ| = |μ| and λ ≥ μ."""
    a_type = ClassicalType(family="A", n=n)
    vectors = [v for total in range(-n * bound, n * bound + 1)
               for v in decreasing_vectors(n, (bound,) * n, -bound, total)]
    for lam in vectors:
        for mu in vectors:
            if sum(lam) == sum(mu) and dominance_geq(lam, mu, a_type):
                yield lam, mu
