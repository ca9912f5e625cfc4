"""Combinatorial R-matrices B_l ⊗ B_k → B_k ⊗ B_l by the multiplicity-free component method.

B_l ⊗ B_k has at most one highest weight vertex per weight. Its highest weight
vertices are, with a + b ≤ min(k, l):

    A:  1^l ⊗ 2^b 1^{k−b}
    C:  1^l ⊗ 1̄^a 2^b 1^{k−a−b}
    D†: n̄^l ⊗ n^a (n−1)‾^b n̄^{k−a−b}

so the isomorphism is: raise to the hw, swap (l, k), lower along the same path.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from crystal.highest_weight import tensor_crystal
from crystal.letters import RowWord
from crystal.tensor import TensorVertex, word_str
from models.exceptions import CrystalStructureError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HwClass:
    """Parameters of a highest weight vertex of B_l ⊗ B_k (a is always 0 in type A)."""
    l: int
    k: int
    a: int
    b: int

    def swapped(self) -> "HwClass":
        return HwClass(self.k, self.l, self.a, self.b)


def hw_vertex(cls: HwClass, family: str, n: int) -> TensorVertex:
    l, k, a, b = cls.l, cls.k, cls.a, cls.b
    if a < 0 or b < 0 or a + b > min(k, l):
        raise InvalidInputError(f"No highest weight vertex with parameters {cls}")
    if family == "A":
        if a:
            raise InvalidInputError(f"Type A classes have a = 0, got {cls}")
        return ((1,) * l, (2,) * b + (1,) * (k - b))
    if family == "C":
        return ((1,) * l, (-1,) * a + (2,) * b + (1,) * (k - a - b))
    if family == "D":
        return ((-n,) * l, (n,) * a + (-(n - 1),) * b + (-n,) * (k - a - b))
    raise InvalidInputError(f"No R-matrix for type {family}")


def classify_hw(v: TensorVertex, family: str, n: int) -> HwClass:
    """Read (l, k; a, b) off a highest weight vertex of B_l ⊗ B_k."""
    if len(v) != 2:
        raise InvalidInputError(f"Expected a two-fold tensor, got {word_str(v)}")
    first, second = v
    l, k = len(first), len(second)
    if family == "A":
        a, b = 0, second.count(2)
    elif family == "C":
        a, b = second.count(-1), second.count(2)
    elif family == "D":
        a, b = second.count(n), second.count(-(n - 1))
    else:
        raise InvalidInputError(f"No R-matrix for type {family}")
    cls = HwClass(l, k, a, b)
    if a + b > min(k, l) or hw_vertex(cls, family, n) != v:
        raise CrystalStructureError(f"{family}{n} highest weight vertex {word_str(v)} is not in the class list")
    return cls


@lru_cache(maxsize=None)
def component_class(pair: Tuple[RowWord, RowWord], family: str, n: int) -> Tuple[HwClass, Tuple[int, ...]]:
    """(class of the component of b, raising path from b to its hw)."""
    crystal = tensor_crystal(family, n)
    hw, path = crystal.raise_to_highest(pair)
    return classify_hw(hw, family, n), path


@lru_cache(maxsize=None)
def rmatrix(pair: Tuple[RowWord, RowWord], family: str, n: int) -> Tuple[RowWord, RowWord]:
    """σ(b) for b ∈ B_l ⊗ B_k; identity when l = k."""
    pair = (tuple(pair[0]), tuple(pair[1]))
    if len(pair[0]) == len(pair[1]):
        return pair
    cls, path = component_class(pair, family, n)
    image = tensor_crystal(family, n).lower_along(hw_vertex(cls.swapped(), family, n), path)
    return image[0], image[1]
