"""L-weighted q-analogue of the Kostant partition function."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from algebra.qpoly import QPoly
from models.exceptions import InvalidInputError
from weights.roots import RootSystem

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _lead(root: Sequence[int]) -> int:
    for i, x in enumerate(root):
        if x:
            return i
    raise InvalidInputError("The zero vector is not a root")


class PartitionFunctionCache:
    """P_q^L(β) = Σ over multisets of positive roots summing to β of q^{Σ L(α)}.

    Roots are processed by increasing leading index; every positive root has a
    positive leading coordinate, so once the roots leading at i are done the
    residual must vanish at i. Memo is per instance.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        ordered = sorted(rs.weighted(), key=lambda rl: (_lead(rl[0]), rl[0]))
        self._roots: List[Vector] = [r for r, _ in ordered]
        self._l_half: List[int] = [l for _, l in ordered]
        self._leads: List[int] = [_lead(r) for r in self._roots]
        self._memo: Dict[Tuple[int, Vector], QPoly] = {}

    def __call__(self, beta: Sequence[int]) -> QPoly:
        beta = tuple(beta)
        if len(beta) != self.rs.n:
            raise InvalidInputError(f"β={beta} does not have {self.rs.n} entries")
        return self._count(0, beta)

    def __len__(self) -> int:
        return len(self._memo)

    def _count(self, k: int, residual: Vector) -> QPoly:
        if k == len(self._roots):
            return QPoly.one() if not any(residual) else QPoly.zero()
        lead = self._leads[k]
        if any(residual[:lead]) or residual[lead] < 0:
            return QPoly.zero()
        key = (k, residual)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        root, l_half = self._roots[k], self._l_half[k]
        acc: Dict[int, int] = {}
        current = residual
        t = 0
        while current[lead] >= 0:
            sub = self._count(k + 1, current)
            for e, c in sub.items():
                acc[e + t * l_half] = acc.get(e + t * l_half, 0) + c
            t += 1
            current = tuple(a - b for a, b in zip(current, root))
        value = QPoly(acc)
        self._memo[key] = value
        return value


@lru_cache(maxsize=None)
def partition_cache(rs: RootSystem) -> PartitionFunctionCache:
    return PartitionFunctionCache(rs)


def partition_function(beta: Sequence[int], rs: RootSystem) -> QPoly:
    return partition_cache(rs)(beta)
