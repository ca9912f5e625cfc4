"""The A_{n−1}-crystal isomorphism θ from the n̄n-free part of B_μ^{C_n} onto B_μ^{D_n}."""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence

from models.exceptions import CrystalStructureError

from .highest_weight import tensor_crystal
from .letters import RowWord
from .tensor import TensorVertex


def in_hat(word: Sequence[int], n: int) -> bool:
    """True when the type-C row contains no n̄n pair."""
    return not (n in word and -n in word)


@lru_cache(maxsize=None)
def theta_row(word: RowWord, n: int) -> RowWord:
    """θ_s on one row: raise to v^C_{α,β} = n̄^α 1^β, jump to v^D_{α,β} = 1^β n̄^α, lower back."""
    if not in_hat(word, n):
        raise CrystalStructureError(f"Row {word} contains both {n} and {n}~; outside the A-subcrystal")
    c_crystal = tensor_crystal("C", n)
    d_crystal = tensor_crystal("D", n)
    hw, path = c_crystal.raise_to_highest((word,), c_crystal.a_colors)
    (top,) = hw
    alpha = top.count(-n)
    beta = top.count(1)
    if alpha + beta != len(top) or top != (-n,) * alpha + (1,) * beta:
        raise CrystalStructureError(f"A-highest weight row {top} is not of the form n~^a 1^b")
    image = d_crystal.lower_along(((1,) * beta + (-n,) * alpha,), path)
    return image[0]


def theta(b: TensorVertex, n: int) -> TensorVertex:
    """θ_δ = θ_{δ₁} ⊗ ⋯ ⊗ θ_{δ_m}."""
    return tuple(theta_row(tuple(w), n) for w in b)


def theta_by_rewriting(word: Sequence[int], n: int) -> RowWord:
    """Independent θ on one row: push unbarred letters left past barred ones.

    q̄p ↦ pq̄ for p ≠ q and p̄p ↦ (p+1)(p+1)‾ for p ≠ n, always at the leftmost
    barred-then-unbarred adjacency.
    """
    if not in_hat(word, n):
        raise CrystalStructureError(f"Row {tuple(word)} is outside the A-subcrystal")
    letters: List[int] = list(word)
    while True:
        for k in range(len(letters) - 1):
            left, right = letters[k], letters[k + 1]
            if left < 0 < right:
                if -left != right:
                    letters[k], letters[k + 1] = right, left
                elif right != n:
                    letters[k], letters[k + 1] = right + 1, -(right + 1)
                else:
                    raise CrystalStructureError(f"Met n~n while rewriting {tuple(word)}")
                break
        else:
            break
    if not tensor_crystal("D", n).letters.is_row_word(letters):
        raise CrystalStructureError(f"Rewriting {tuple(word)} ended in {tuple(letters)}, which is not a D row")
    return tuple(letters)
