"""Positive roots, simple roots, ρ and L-values for the classical types."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from models.classical_type import ClassicalType

Vector = Tuple[int, ...]


def _unit(n: int, i: int, sign: int = 1) -> list:
    v = [0] * n
    v[i] = sign
    return v


def _plus(a: list, b: list) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def positive_roots(t: ClassicalType) -> Tuple[Vector, ...]:
    """R⁺(g_n) in ε-coordinates; the A_{n−1} roots ε_i − ε_j come first."""
    n = t.n
    roots = [_plus(_unit(n, i), _unit(n, j, -1)) for i in range(n) for j in range(i + 1, n)]
    if t.family in {"B", "C", "D"}:
        roots += [_plus(_unit(n, i), _unit(n, j)) for i in range(n) for j in range(i + 1, n)]
    if t.family == "B":
        roots += [tuple(_unit(n, i)) for i in range(n)]
    elif t.family == "C":
        roots += [tuple(2 * x for x in _unit(n, i)) for i in range(n)]
    return tuple(roots)


@lru_cache(maxsize=None)
def simple_roots(t: ClassicalType) -> Tuple[Vector, ...]:
    n = t.n
    simple = [_plus(_unit(n, i), _unit(n, i + 1, -1)) for i in range(n - 1)]
    if t.family == "B":
        simple.append(tuple(_unit(n, n - 1)))
    elif t.family == "C":
        simple.append(tuple(2 * x for x in _unit(n, n - 1)))
    elif t.family == "D":
        simple.append(_plus(_unit(n, n - 2), _unit(n, n - 1)))
    return tuple(simple)


@lru_cache(maxsize=None)
def doubled_rho(t: ClassicalType) -> Vector:
    """2ρ as an integer vector (ρ^B has half-integer entries)."""
    n = t.n
    if t.family == "A":
        return tuple(2 * (n - 1 - i) for i in range(n))
    if t.family == "B":
        return tuple(2 * n - 1 - 2 * i for i in range(n))
    if t.family == "C":
        return tuple(2 * (n - i) for i in range(n))
    return tuple(2 * (n - 1 - i) for i in range(n))


def rho(t: ClassicalType) -> Tuple[Fraction, ...]:
    """ρ = half the sum of the positive roots."""
    return tuple(Fraction(x, 2) for x in doubled_rho(t))


def is_short(t: ClassicalType, root: Vector) -> bool:
    """Short roots of B_n are ε_i; C_n and the simply-laced types are treated as uniform."""
    return t.family == "B" and sum(abs(x) for x in root) == 1


@dataclass(frozen=True)
class RootSystem:
    """Positive roots with an L-weight per root, stored in half-units."""
    ctype: ClassicalType
    roots: Tuple[Vector, ...]
    l_half: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.ctype.n

    @property
    def a_roots(self) -> Tuple[Vector, ...]:
        return tuple(r for r in self.roots if sum(r) == 0)

    def complement_of_a(self) -> Tuple[Tuple[Vector, int], ...]:
        """(root, L) for R⁺(g_n) ∖ R⁺(A_{n−1})."""
        return tuple((r, l) for r, l in zip(self.roots, self.l_half) if sum(r) != 0)

    def weighted(self) -> Tuple[Tuple[Vector, int], ...]:
        return tuple(zip(self.roots, self.l_half))


@lru_cache(maxsize=None)
def root_system(t: ClassicalType, uniform_half: int = 2, b_short_half: Optional[int] = None) -> RootSystem:
    """Root system with L ≡ uniform_half/2, except B_n short roots get b_short_half/2 if given.

    uniform_half=2 is L ≡ 1; uniform_half=0 turns P_q into the plain Kostant count.
    """
    roots = positive_roots(t)
    l_half = []
    for r in roots:
        if b_short_half is not None and is_short(t, r):
            l_half.append(b_short_half)
        else:
            l_half.append(uniform_half)
    return RootSystem(ctype=t, roots=roots, l_half=tuple(l_half))


def lusztig_weights(t: ClassicalType, half_on_short: bool = True) -> RootSystem:
    """The L used for stable 1-d sums: ½ on the short roots of B_n, 1 elsewhere."""
    return root_system(t, 2, 1 if half_on_short else None)
