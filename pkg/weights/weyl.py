"""Weyl groups of classical types as signed permutations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence, Tuple

from algebra.characters import permutation_sign
from models.classical_type import ClassicalType


@dataclass(frozen=True)
class WeylElement:
    """w(v)[perm[i]] = signs[i] · v[i]; parity is (−1)^{ℓ(w)} = det(w)."""
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]
    parity: int

    def act(self, v: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * len(v)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * v[i]
        return tuple(out)

    @property
    def is_permutation(self) -> bool:
        return all(s == 1 for s in self.signs)


def weyl_group(t: ClassicalType) -> Iterator[WeylElement]:
    """Every element of W(t) exactly once. Each call returns a fresh iterator."""
    n = t.n
    for perm in permutations(range(n)):
        psign = permutation_sign(perm)
        if t.family == "A":
            yield WeylElement(perm, (1,) * n, psign)
            continue
        for signs in product((1, -1), repeat=n):
            negatives = signs.count(-1)
            if t.family == "D" and negatives % 2:
                continue
            yield WeylElement(perm, signs, psign * (-1) ** negatives)


def symmetric_group(n: int) -> Iterator[WeylElement]:
    """The parabolic S_n = W(A_{n−1}) inside any classical W."""
    for perm in permutations(range(n)):
        yield WeylElement(perm, (1,) * n, permutation_sign(perm))


def weyl_order(t: ClassicalType) -> int:
    from math import factorial

    n = t.n
    if t.family == "A":
        return factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return 2 ** n * factorial(n)
