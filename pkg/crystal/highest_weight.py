"""Highest weight vertices: the sets F_{λ,μ}, F_μ^{A}, E_{λ,μ} and weight multiplicities."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from models.exceptions import InvalidInputError

from .letters import Letter
from .tensor import TensorCrystal, TensorVertex, flatten

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def tensor_crystal(family: str, n: int) -> TensorCrystal:
    return TensorCrystal(family, n)


def hw_alphabet(m: int, n: int) -> FrozenSet[Letter]:
    """Letters 1..m and (m−1)‾..1̄: all that hw vertices of a type-C m-fold tensor use."""
    top = min(m, n)
    return frozenset(list(range(1, top + 1)) + [-j for j in range(1, min(m - 1, n) + 1)])


def enumerate_highest_weight(
    crystal: TensorCrystal,
    shape: Sequence[int],
    weight: Optional[Sequence[int]] = None,
    colors: Optional[Sequence[int]] = None,
    alphabet: Optional[FrozenSet[Letter]] = None,
) -> List[TensorVertex]:
    """Highest weight vertices of B_shape, grown factor by factor.

    b ⊗ b' is highest weight iff b is and φ_i(b) ≥ ε_i(b') for every color i.
    """
    use = tuple(colors if colors is not None else crystal.colors)
    n = crystal.n
    target = tuple(weight) + (0,) * (n - len(weight)) if weight is not None else None
    if target is not None and len(target) != n:
        raise InvalidInputError(f"Weight {tuple(weight)} has more than {n} entries")
    rows = [crystal.letters.row_words(s, alphabet) for s in shape]
    remaining = [sum(shape[k:]) for k in range(len(shape) + 1)]
    found: List[TensorVertex] = []

    def reachable(wt: Tuple[int, ...], left: int) -> bool:
        if target is None:
            return True
        gap = [t - w for t, w in zip(target, wt)]
        dist = sum(abs(g) for g in gap)
        return dist <= left and (left - sum(gap)) % 2 == 0

    def grow(k: int, prefix: TensorVertex, letters: Tuple[Letter, ...], wt: Tuple[int, ...], phis):
        if k == len(shape):
            if target is None or wt == target:
                found.append(prefix)
            return
        for word in rows[k]:
            ok = True
            for i, ph in zip(use, phis):
                if len(crystal.signature(word, i)[0]) > ph:
                    ok = False
                    break
            if not ok:
                continue
            new_wt = list(wt)
            for x in word:
                new_wt[abs(x) - 1] += 1 if x > 0 else -1
            new_wt = tuple(new_wt)
            if not reachable(new_wt, remaining[k + 1]):
                continue
            new_letters = letters + word
            new_phis = [len(crystal.signature(new_letters, i)[1]) for i in use]
            grow(k + 1, prefix + (word,), new_letters, new_wt, new_phis)

    grow(0, (), (), (0,) * n, [0] * len(use))
    logger.debug("%s shape %s weight %s: %d hw vertices", crystal, tuple(shape), target, len(found))
    return found


def highest_weight_vertices(mu: Sequence[int], lam: Sequence[int], family: str, n: int) -> List[TensorVertex]:
    """F_{λ,μ}: classical highest weight vertices of B_μ with weight λ (types A, C, D†)."""
    _check_shape(mu)
    if len([p for p in lam if p]) > n:
        raise InvalidInputError(f"Rank {n} too small for weight {tuple(lam)}")
    crystal = tensor_crystal(family, n)
    alphabet = hw_alphabet(len(mu), n) if family == "C" else None
    return enumerate_highest_weight(crystal, mu, lam, alphabet=alphabet)


def a_highest_weight_vertices(mu: Sequence[int], n: int) -> List[TensorVertex]:
    """F_μ^{A_{n−1}}: every A_{n−1}-highest weight vertex of B_μ^{A}, any weight."""
    _check_shape(mu)
    return enumerate_highest_weight(tensor_crystal("A", n), mu)


def classical_component_hw(b: TensorVertex, family: str, n: int):
    """(highest weight vertex of b's classical component, raising path)."""
    return tensor_crystal(family, n).raise_to_highest(b)


def e_set(
    mu: Sequence[int], lam: Sequence[int], n: int
) -> Tuple[List[TensorVertex], Dict[TensorVertex, List[TensorVertex]]]:
    """E_{λ,μ} ⊂ B_μ^{D_n} and its split into E_{λ,μ,b}, b ∈ F_μ^{A_{n−1}}.

    A D†-component lies in the image of Ψ iff it holds an all-unbarred
    A-highest weight vertex; components are matched through their D†-hw.
    """
    _check_shape(mu)
    if len(mu) >= n:
        raise InvalidInputError(f"E-set needs length(μ) = {len(mu)} < n = {n}")
    d_crystal = tensor_crystal("D", n)
    owners: Dict[TensorVertex, TensorVertex] = {}
    parts: Dict[TensorVertex, List[TensorVertex]] = {}
    for b in a_highest_weight_vertices(mu, n):
        hw, _ = d_crystal.raise_to_highest(b)
        owners[hw] = b
        parts[b] = []
    members: List[TensorVertex] = []
    for c in enumerate_highest_weight(d_crystal, mu, lam, colors=d_crystal.a_colors):
        hw, _ = d_crystal.raise_to_highest(c)
        owner = owners.get(hw)
        if owner is not None:
            members.append(c)
            parts[owner].append(c)
    return members, parts


def weight_multiplicity(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    """dim V^{C_n}(λ)_μ, counted in the component of the unique hw vertex of weight λ in B_λ."""
    shape = tuple(p for p in lam if p)
    if not shape:
        return 1 if not any(mu) else 0
    hw = highest_weight_vertices(shape, lam, "C", n)
    if len(hw) != 1:
        raise InvalidInputError(f"Expected a unique hw vertex of weight {tuple(lam)}, found {len(hw)}")
    crystal = tensor_crystal("C", n)
    target = tuple(mu) + (0,) * (n - len(mu))
    return sum(1 for v in crystal.component(hw[0]) if crystal.weight(v) == target)


def all_unbarred(b: TensorVertex) -> bool:
    return all(x > 0 for x in flatten(b))


def _check_shape(mu: Sequence[int]) -> None:
    if not mu or any(p < 1 for p in mu):
        raise InvalidInputError(f"Shape entries must be positive, got {tuple(mu)}")
