"""Weight transformations: norms, star involution, hat twist, dominance."""

from __future__ import annotations

from typing import Sequence, Tuple

from models.classical_type import ClassicalType
from models.exceptions import InvalidInputError

Vector = Tuple[int, ...]


def norms(mu: Sequence[int]) -> Tuple[int, int]:
    """(|μ|, ||μ||) with ||μ|| = Σ (i−1) μ_i."""
    return sum(mu), sum(i * m for i, m in enumerate(mu))


def star(beta: Sequence[int]) -> Vector:
    """β* = −w₀β: reverse and negate."""
    return tuple(-b for b in reversed(beta))


def pad(parts: Sequence[int], m: int) -> Vector:
    if len(parts) > m:
        raise InvalidInputError(f"{tuple(parts)} has more than {m} parts")
    return tuple(parts) + (0,) * (m - len(parts))


def hat_bound(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Least integer M with M ≥ max(λ₁, μ₁) + (|μ| − |λ|)/2."""
    top = max([0, *lam, *mu])
    diff = sum(mu) - sum(lam)
    return top - ((-diff) // 2)


def hat_pair(lam: Sequence[int], mu: Sequence[int], m: int, bump: int = 0) -> Tuple[Vector, Vector, int]:
    """(λ̂, μ̂, M): λ̂ = (M − λ_m, …, M − λ₁) after zero-padding to m parts.

    bump raises M above the minimal bound (the result is M-independent there).
    """
    lam_p, mu_p = pad(lam, m), pad(mu, m)
    big_m = hat_bound(lam_p, mu_p) + bump
    lam_hat = tuple(big_m + x for x in star(lam_p))
    mu_hat = tuple(big_m + x for x in star(mu_p))
    return lam_hat, mu_hat, big_m


def simple_root_coordinates(diff: Sequence[int], t: ClassicalType):
    """Coefficients of diff in the simple roots of t, or None if not in the root lattice.

    Coefficients may be negative; the caller decides about positivity.
    """
    n = t.n
    if len(diff) != n:
        raise InvalidInputError(f"Vector {tuple(diff)} does not have {n} entries")
    partial = []
    running = 0
    for d in diff:
        running += d
        partial.append(running)
    if t.family == "A":
        if partial[-1] != 0:
            return None
        return tuple(partial[:-1])
    if t.family == "B":
        return tuple(partial)
    if t.family == "C":
        if partial[-1] % 2:
            return None
        return tuple(partial[:-1]) + (partial[-1] // 2,)
    # D: α_{n−1} = ε_{n−1} − ε_n, α_n = ε_{n−1} + ε_n
    s_prev, d_last = partial[-2], diff[-1]
    if (s_prev + d_last) % 2:
        return None
    return tuple(partial[:-2]) + ((s_prev - d_last) // 2, (s_prev + d_last) // 2)


def dominance_geq(lam: Sequence[int], mu: Sequence[int], t: ClassicalType) -> bool:
    """λ ≥ μ iff λ − μ is a nonnegative integer combination of simple roots."""
    if len(lam) != len(mu):
        raise InvalidInputError(f"Length mismatch: {tuple(lam)} vs {tuple(mu)}")
    coords = simple_root_coordinates([a - b for a, b in zip(lam, mu)], t)
    return coords is not None and all(c >= 0 for c in coords)


def is_dominant(v: Sequence[int], t: ClassicalType) -> bool:
    """Dominant for g_n: weakly decreasing, plus the last-coordinate condition of the type."""
    if any(a < b for a, b in zip(v, v[1:])):
        return False
    if t.family in {"B", "C"}:
        return v[-1] >= 0
    if t.family == "D":
        return len(v) < 2 or v[-2] >= abs(v[-1])
    return True
