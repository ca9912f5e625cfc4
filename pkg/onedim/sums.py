"""Stable one-dimensional sums X̄^⋄ for the kinds ∅ (type A) and (1,1) (type C)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from algebra.qpoly import QPoly
from crystal.highest_weight import highest_weight_vertices
from crystal.tensor import TensorVertex
from energy.coenergy import coenergy_D
from models.classical_type import Diamond
from models.exceptions import InvalidInputError
from models.partition import Partition

logger = logging.getLogger(__name__)

_KIND_FAMILY = {Diamond.EMPTY: "A", Diamond.ONE_ONE: "C"}


@dataclass(frozen=True)
class OneDimSum:
    lam: Partition
    mu: Partition
    kind: Diamond
    rank: int
    value: QPoly
    vertices: int


def crystal_family(kind: Diamond) -> str:
    try:
        return _KIND_FAMILY[kind]
    except KeyError as exc:
        raise InvalidInputError(f"1-d sums of kind {kind.value} are not computed here") from exc


def default_rank(kind: Diamond, m: int) -> int:
    """n = m + 1, the least rank where both the F- and E-sides make sense.

    Kind (1,1) also needs the D† side, so never below 3.
    """
    if kind is Diamond.ONE_ONE:
        return max(m + 1, 3)
    return max(m + 1, 2)


def coenergy_table(lam: Sequence[int], mu: Sequence[int], kind: Diamond, n: int) -> List[Tuple[TensorVertex, int]]:
    """[(b, D̄(b)) for b ∈ F_{λ,μ}]."""
    family = crystal_family(kind)
    return [(b, coenergy_D(b, family, n)) for b in highest_weight_vertices(mu, lam, family, n)]


def x_sum(lam: Partition, mu: Partition, kind: Diamond, n: int) -> OneDimSum:
    """X̄_{λ,μ}(q) = Σ_{b∈F_{λ,μ}} q^{D̄(b)}."""
    m = max(lam.length, mu.length)
    crystal_family(kind)
    if n < max(m, 2):
        raise InvalidInputError(f"Rank {n} too small for λ={lam}, μ={mu}")
    if mu.length == 0:
        value = QPoly.one() if lam.length == 0 else QPoly.zero()
        return OneDimSum(lam, mu, kind, n, value, 1 if lam.length == 0 else 0)
    table = coenergy_table(lam.parts, mu.parts, kind, n)
    counts: Dict[int, int] = {}
    for _, d in table:
        counts[2 * d] = counts.get(2 * d, 0) + 1
    logger.debug("X̄ %s λ=%s μ=%s n=%d: %d vertices", kind.value, lam, mu, n, len(table))
    return OneDimSum(lam, mu, kind, n, QPoly(counts), len(table))
