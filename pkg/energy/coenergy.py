"""Local coenergy H̄ and H̃, coenergy D̄ by R-matrix moves, and D̃."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence, Tuple

from crystal.highest_weight import tensor_crystal
from crystal.letters import Letter, RowWord
from crystal.tensor import TensorVertex
from models.exceptions import InvalidInputError

from .rmatrix import component_class, rmatrix
from .splitting import split


@lru_cache(maxsize=None)
def local_coenergy(pair: Tuple[RowWord, RowWord], family: str, n: int) -> int:
    """H̄ on B_l ⊗ B_k, constant on classical components.

    Type C: H̄(v_{l,k;a,b}) = 2a + b. Type A: H̄(v_{l,k;b}) = b, since inserting
    2^b 1^{k−b} into the row 1^l leaves a first row of length l + k − b.
    """
    if family not in {"A", "C"}:
        raise InvalidInputError(f"Local coenergy is defined here for types A and C, not {family}")
    cls, _ = component_class((tuple(pair[0]), tuple(pair[1])), family, n)
    return 2 * cls.a + cls.b if family == "C" else cls.b


def coenergy_D(b: TensorVertex, family: str, n: int) -> int:
    """D̄(b) = Σ_{i<j} H̄(b_i ⊗ b_j^{(i+1)}), b_j^{(i)} being b_j moved left to slot i by R-matrices."""
    total = 0
    for j in range(1, len(b)):
        moved = tuple(b[j])
        for i in range(j - 1, -1, -1):
            total += local_coenergy((tuple(b[i]), moved), family, n)
            if i > 0:
                moved = rmatrix((tuple(b[i]), moved), family, n)[0]
    return total


def energy_D(b: TensorVertex, family: str, n: int) -> int:
    """Energy convention: the negative of the coenergy."""
    return -coenergy_D(b, family, n)


def h_tilde(x: Letter, y: Letter, n: int) -> int:
    """H̃(x ⊗ y) in the D_n order: 0 if x ≥ y, 2 if (x, y) = (n̄, n), else 1."""
    order = tensor_crystal("D", n).letters
    if order.geq(x, y):
        return 0
    if x == -n and y == n:
        return 2
    return 1


def h_small(x: Letter, y: Letter, n: int) -> int:
    """h̄(x ⊗ y): 0 if x ≥ y in the C_n order, else 1."""
    return 0 if tensor_crystal("C", n).letters.geq(x, y) else 1


def path_statistic(letters: Sequence[Letter], local) -> int:
    """Σ_{i=1}^{m−1} (m − i) · local(x_i, x_{i+1})."""
    m = len(letters)
    return sum((m - 1 - i) * local(letters[i], letters[i + 1]) for i in range(m - 1))


def coenergy_D_tilde(b: TensorVertex, n: int) -> int:
    """D̃ on B_μ^{D_n}: split to single letters with S^D, then the path statistic with H̃."""
    letters = [w[0] for w in split(b, "D", n)]
    return path_statistic(letters, lambda x, y: h_tilde(x, y, n))
