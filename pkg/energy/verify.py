"""Structural checks on R-matrices, coenergy and splitting over whole crystals."""

from __future__ import annotations

import logging
import time
from typing import List, Sequence

from crystal.highest_weight import tensor_crystal
from crystal.tensor import TensorVertex, word_str
from models.reports import CellReport

from .coenergy import coenergy_D, local_coenergy
from .rmatrix import HwClass, hw_vertex, rmatrix
from .splitting import split

logger = logging.getLogger(__name__)


def _swap(b: TensorVertex, i: int, family: str, n: int) -> TensorVertex:
    left, right = rmatrix((b[i], b[i + 1]), family, n)
    return b[:i] + (left, right) + b[i + 2:]


def coenergy_moving_right(b: TensorVertex, family: str, n: int) -> int:
    """D̄ with the other parenthesization: b_i is carried right to slot j − 1."""
    total = 0
    for i in range(len(b) - 1):
        moved = tuple(b[i])
        for j in range(i + 1, len(b)):
            total += local_coenergy((moved, tuple(b[j])), family, n)
            if j < len(b) - 1:
                moved = rmatrix((moved, tuple(b[j])), family, n)[1]
    return total


def _cell(shape: Sequence[int], kind: str, n: int, checked: int, failures: List[str], started: float) -> CellReport:
    logger.debug("%s shape=%s n=%d: %d vertices in %.3fs", kind, tuple(shape), n, checked, time.perf_counter() - started)
    if failures:
        logger.warning("%s shape=%s n=%d failed: %s", kind, tuple(shape), n, failures[0])
    return CellReport(lam=[], mu=list(shape), kind=kind, rank=n, x=str(checked), k=str(len(failures)),
                      passed=not failures, vertices=checked, detail="; ".join(failures[:5]) or None)


def verify_yang_baxter(shape: Sequence[int], family: str, n: int) -> CellReport:
    """R₁R₂R₁ = R₂R₁R₂ on B_{δ₁} ⊗ B_{δ₂} ⊗ B_{δ₃}."""
    started = time.perf_counter()
    failures: List[str] = []
    checked = 0
    for b in tensor_crystal(family, n).vertices(shape):
        left = _swap(_swap(_swap(b, 0, family, n), 1, family, n), 0, family, n)
        right = _swap(_swap(_swap(b, 1, family, n), 0, family, n), 1, family, n)
        checked += 1
        if left != right:
            failures.append(f"{word_str(b)}: {word_str(left)} vs {word_str(right)}")
    return _cell(shape, f"yangbaxter-{family}", n, checked, failures, started)


def verify_involution(l: int, k: int, family: str, n: int) -> CellReport:
    """σ ∘ σ = id on B_l ⊗ B_k."""
    started = time.perf_counter()
    failures: List[str] = []
    checked = 0
    for b in tensor_crystal(family, n).vertices((l, k)):
        checked += 1
        back = rmatrix(rmatrix(b, family, n), family, n)
        if back != tuple(b):
            failures.append(f"{word_str(b)} returns as {word_str(back)}")
    return _cell((l, k), f"involution-{family}", n, checked, failures, started)


def verify_splitting(shape: Sequence[int], family: str, n: int) -> CellReport:
    """D̄(b) = D̄(S(b)), the one-letter split agrees with the full chop, and both parenthesizations agree."""
    started = time.perf_counter()
    failures: List[str] = []
    checked = 0
    for b in tensor_crystal(family, n).vertices(shape):
        checked += 1
        image = split(b, family, n)
        d_bar = coenergy_D(b, family, n)
        if coenergy_D(image, family, n) != d_bar:
            failures.append(f"{word_str(b)}: D̄={d_bar}, D̄(S)={coenergy_D(image, family, n)}")
        if split(b, family, n, chop_all=False) != image:
            failures.append(f"{word_str(b)}: split order matters")
        if coenergy_moving_right(b, family, n) != d_bar:
            failures.append(f"{word_str(b)}: parenthesization changes D̄")
    return _cell(shape, f"split-{family}", n, checked, failures, started)


def expected_split(cls: HwClass) -> TensorVertex:
    """1^{k+l−a−b} ⊗ 2^b ⊗ 1̄^a as single letters."""
    letters = [1] * (cls.k + cls.l - cls.a - cls.b) + [2] * cls.b + [-1] * cls.a
    return tuple((x,) for x in letters)


def verify_hw_classes(l: int, k: int, n: int = 3) -> CellReport:
    """For every v_{l,k;a,b} in type C: the split form, H̄ = 2a + b and D̄(S(v)) = 2a + b."""
    started = time.perf_counter()
    failures: List[str] = []
    checked = 0
    for a in range(min(l, k) + 1):
        for b in range(min(l, k) - a + 1):
            cls = HwClass(l, k, a, b)
            v = hw_vertex(cls, "C", n)
            checked += 1
            image = split(v, "C", n)
            if image != expected_split(cls):
                failures.append(f"S({word_str(v)}) = {word_str(image)}")
            if local_coenergy(v, "C", n) != 2 * a + b:
                failures.append(f"H̄({word_str(v)}) = {local_coenergy(v, 'C', n)}")
            if coenergy_D(image, "C", n) != 2 * a + b:
                failures.append(f"D̄(S({word_str(v)})) = {coenergy_D(image, 'C', n)}")
    return _cell((l, k), "hwclass-C", n, checked, failures, started)
