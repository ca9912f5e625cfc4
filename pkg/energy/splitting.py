"""Splitting embeddings S_δ : B_δ → B_1^{⊗|δ|}."""

from __future__ import annotations

import logging
from typing import List

from crystal.letters import RowWord
from crystal.tensor import TensorVertex

from .rmatrix import rmatrix

logger = logging.getLogger(__name__)


def split(b: TensorVertex, family: str, n: int, chop_all: bool = True) -> TensorVertex:
    """S_δ(b) ∈ B_{1^{|δ|}}.

    Let k be the first factor longer than one letter. If k is the first factor
    it is split: all at once when chop_all, else one letter off the left.
    Otherwise it is switched with the single letter on its left by ψ.
    """
    factors: List[RowWord] = [tuple(w) for w in b]
    while True:
        k = next((idx for idx, w in enumerate(factors) if len(w) > 1), None)
        if k is None:
            return tuple(factors)
        if k == 0:
            head = factors[0]
            if chop_all:
                factors[0:1] = [(x,) for x in head]
            else:
                factors[0:1] = [head[:1], head[1:]]
            continue
        left, right = rmatrix((factors[k - 1], factors[k]), family, n)
        factors[k - 1], factors[k] = left, right
