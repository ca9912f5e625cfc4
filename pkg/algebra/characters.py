"""Antisymmetrization, the Demazure operator E and rational Schur characters."""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import permutations
from typing import Dict, Optional, Sequence, Tuple

from models.exceptions import InternalArithmeticError, InvalidInputError

from .charpoly import CharPoly, Exponent
from .qpoly import QPoly

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def signed_permutations_of(n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """All permutations of range(n) with their signs."""
    out = []
    for perm in permutations(range(n)):
        out.append((perm, permutation_sign(perm)))
    return tuple(out)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def gl_rho(n: int) -> Exponent:
    return tuple(range(n - 1, -1, -1))


def antisymmetrize(f: CharPoly) -> CharPoly:
    """J(f) = Σ_{w∈S_n} (−1)^{ℓ(w)} w·f, with w permuting exponent vectors."""
    acc: Dict[Exponent, QPoly] = {}
    for exp, c in f.items():
        for perm, sign in signed_permutations_of(f.nvars):
            new = tuple(exp[p] for p in perm)
            term = c if sign == 1 else -c
            acc[new] = acc[new] + term if new in acc else term
    return CharPoly(f.nvars, acc)


@lru_cache(maxsize=None)
def vandermonde(n: int) -> CharPoly:
    """J(x^ρ), the Weyl denominator for gl_n."""
    return antisymmetrize(CharPoly.monomial(gl_rho(n)))


def divide_by_vandermonde(numerator: CharPoly) -> CharPoly:
    """Exact division of an alternant by J(x^ρ) by leading-term elimination.

    Monomials are compared lexicographically (a linear extension of dominance).
    """
    n = numerator.nvars
    rho = gl_rho(n)
    denom = list(vandermonde(n).items())
    remainder: Dict[Exponent, QPoly] = dict(numerator.items())
    if not remainder:
        return CharPoly.zero(n)
    # lead(remainder) never drops below min(numerator) + ρ − w₀ρ when the division is exact
    low = min(remainder)
    floor = tuple(a + r - r_rev for a, r, r_rev in zip(low, rho, reversed(rho)))
    quotient: Dict[Exponent, QPoly] = {}
    while remainder:
        lead = max(remainder)
        if lead < floor:
            raise InternalArithmeticError(
                f"Alternant division left remainder with leading exponent {lead}"
            )
        c = remainder[lead]
        q_exp = tuple(a - r for a, r in zip(lead, rho))
        quotient[q_exp] = c
        for d_exp, d_c in denom:
            exp = tuple(a + b for a, b in zip(q_exp, d_exp))
            term = c * d_c
            if exp in remainder:
                new = remainder[exp] - term
                if new.is_zero():
                    del remainder[exp]
                else:
                    remainder[exp] = new
            else:
                remainder[exp] = -term
    return CharPoly(n, quotient)


def demazure_E(f: CharPoly) -> CharPoly:
    """E(f) = J(x^ρ)^{-1} J(x^ρ f)."""
    shifted = f * CharPoly.monomial(gl_rho(f.nvars))
    return divide_by_vandermonde(antisymmetrize(shifted))


@lru_cache(maxsize=None)
def schur(lam: Tuple[int, ...]) -> CharPoly:
    """Rational Schur character s_λ[X] in len(λ) variables, via E(x^λ)."""
    lam = tuple(lam)
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise InvalidInputError(f"schur needs a weakly decreasing weight, got {lam}")
    if not lam:
        raise InvalidInputError("schur needs at least one variable")
    return demazure_E(CharPoly.monomial(lam))


def straighten(beta: Sequence[int]) -> Optional[Tuple[int, Exponent]]:
    """E(x^β) = sign · s_λ; returns (sign, λ), or None when E(x^β) = 0."""
    n = len(beta)
    shifted = [b + r for b, r in zip(beta, gl_rho(n))]
    if len(set(shifted)) < n:
        return None
    order = sorted(range(n), key=lambda i: -shifted[i])
    sign = permutation_sign(order)
    lam = tuple(shifted[i] - r for i, r in zip(order, gl_rho(n)))
    return sign, lam


def demazure_E_schur(f: CharPoly) -> Dict[Exponent, QPoly]:
    """E(f) written in the Schur basis, {λ: coefficient}, using shifted antisymmetry."""
    acc: Dict[Exponent, QPoly] = {}
    for exp, c in f.items():
        hit = straighten(exp)
        if hit is None:
            continue
        sign, lam = hit
        term = c if sign == 1 else -c
        acc[lam] = acc[lam] + term if lam in acc else term
    return {lam: c for lam, c in acc.items() if not c.is_zero()}


def schur_expand(g: CharPoly) -> Dict[Exponent, QPoly]:
    """Expand a symmetric CharPoly in the Schur basis by peeling leading terms."""
    remainder = g
    out: Dict[Exponent, QPoly] = {}
    while not remainder.is_zero():
        lead = max(remainder.exponents())
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise InternalArithmeticError(f"Leading exponent {lead} is not dominant; input not symmetric")
        c = remainder.coefficient(lead)
        out[lead] = c
        remainder = remainder - schur(lead) * c
    return out


def schur_sum(coeffs: Dict[Exponent, QPoly], nvars: int) -> CharPoly:
    """Σ c_λ s_λ as a CharPoly."""
    total = CharPoly.zero(nvars)
    for lam, c in sorted(coeffs.items()):
        total = total + schur(lam) * c
    return total
