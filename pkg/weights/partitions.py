"""Enumeration of partitions, dominant boxes and ⋄-tileable shapes."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from models.classical_type import Diamond

Vector = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions_of(total: int, max_parts: int, max_part: Optional[int] = None) -> Tuple[Vector, ...]:
    """Partitions of total with at most max_parts parts, in reverse lex order."""
    if max_part is None:
        max_part = total
    if total == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out: List[Vector] = []
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(max_size: int, max_parts: int) -> Iterator[Vector]:
    for total in range(max_size + 1):
        yield from partitions_of(total, max_parts)


def conjugate(lam: Sequence[int]) -> Vector:
    if not lam or lam[0] == 0:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Partition dominance λ ⊵ μ (same size assumed by the caller)."""
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return sum(lam) == sum(mu)


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    """Young-diagram containment small ⊆ big."""
    for i, s in enumerate(small):
        if s > (big[i] if i < len(big) else 0):
            return False
    return True


def in_diamond_family(gamma: Sequence[int], diamond: Diamond) -> bool:
    """γ ∈ P^⋄: ∅ → only ∅; (1) → all; (2) → even rows; (1,1) → even columns."""
    parts = [p for p in gamma if p]
    if diamond is Diamond.EMPTY:
        return not parts
    if diamond is Diamond.ONE:
        return True
    if diamond is Diamond.TWO:
        return all(p % 2 == 0 for p in parts)
    return all(c % 2 == 0 for c in conjugate(parts))


def diamond_partitions(size: int, max_parts: int, diamond: Diamond) -> Tuple[Vector, ...]:
    return tuple(g for g in partitions_of(size, max_parts) if in_diamond_family(g, diamond))


def decreasing_vectors(n: int, upper: Sequence[int], lower: int, total: int) -> Iterator[Vector]:
    """Weakly decreasing v ∈ ℤⁿ with lower ≤ v_i ≤ upper[i] and Σv = total."""

    def rec(i: int, prev: int, remaining: int, acc: List[int]):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        slots = n - i - 1
        top = min(prev, upper[i])
        for v in range(top, lower - 1, -1):
            rest = remaining - v
            # the remaining slots take values in [lower, v]
            if rest > v * slots or rest < lower * slots:
                continue
            acc.append(v)
            yield from rec(i + 1, v, rest, acc)
            acc.pop()

    if n == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, max(upper), total, [])
