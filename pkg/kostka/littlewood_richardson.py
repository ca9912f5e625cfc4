"""Littlewood–Richardson coefficients by coefficient extraction from Schur characters."""

from __future__ import annotations

import logging
from typing import Dict, Tuple

from algebra.characters import schur
from models.partition import Partition
from weights.lattice import pad
from weights.partitions import contains
from weights.weyl import symmetric_group

logger = logging.getLogger(__name__)

Key = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


def lr_coefficient(lam: Partition, gamma: Partition, nu: Partition) -> int:
    """c^ν_{λγ}, the multiplicity of s_ν in s_λ · s_γ.

    Uses s_γ · a_{λ+ρ} = Σ_ν c^ν_{λγ} a_{ν+ρ} in ℓ(ν) variables, which is
    enough since c^ν_{λγ} vanishes unless λ, γ ⊆ ν.
    """
    if nu.size != lam.size + gamma.size:
        return 0
    if not (contains(nu.parts, lam.parts) and contains(nu.parts, gamma.parts)):
        return 0
    n = nu.length
    if n == 0:
        return 1
    s_gamma = schur(pad(gamma.parts, n))
    shifted_nu = [a + n - 1 - i for i, a in enumerate(nu.parts)]
    shifted_lam = [a + n - 1 - i for i, a in enumerate(pad(lam.parts, n))]
    total = 0
    for w in symmetric_group(n):
        moved = w.act(shifted_lam)
        c = s_gamma.coefficient(tuple(a - b for a, b in zip(shifted_nu, moved)))
        if not c.is_zero():
            total += w.parity * c.at_one()
    return total


class LRTable:
    """Lazily filled c^ν_{λγ}; one table per process."""

    def __init__(self) -> None:
        self._values: Dict[Key, int] = {}

    def __call__(self, lam: Partition, gamma: Partition, nu: Partition) -> int:
        key = (lam.parts, gamma.parts, nu.parts)
        hit = self._values.get(key)
        if hit is None:
            hit = lr_coefficient(lam, gamma, nu)
            self._values[key] = hit
        return hit

    def __len__(self) -> int:
        return len(self._values)


default_table = LRTable()
