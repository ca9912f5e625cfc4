"""Semistandard tableaux and the charge statistic on words of partition weight."""

from __future__ import annotations

import logging
from typing import Iterator, List, Sequence, Tuple

from models.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

Tableau = Tuple[Tuple[int, ...], ...]


def _horizontal_strips(inner: Tuple[int, ...], outer: Sequence[int], size: int) -> Iterator[Tuple[int, ...]]:
    """Shapes ν with inner ⊆ ν ⊆ outer, |ν/inner| = size, and ν/inner a horizontal strip."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))

    def rec(i: int, remaining: int, acc: List[int]):
        if i == rows:
            if remaining == 0:
                yield tuple(acc)
            return
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for v in range(min(cap, inner[i] + remaining), inner[i] - 1, -1):
            acc.append(v)
            yield from rec(i + 1, remaining - (v - inner[i]), acc)
            acc.pop()

    yield from rec(0, size, [])


def ssyt(shape: Sequence[int], weight: Sequence[int]) -> List[Tableau]:
    """All semistandard tableaux of the given shape and content."""
    shape = tuple(p for p in shape if p)
    if sum(shape) != sum(weight):
        return []
    out: List[Tableau] = []

    def rec(letter: int, current: Tuple[int, ...], rows: List[List[int]]):
        if letter == len(weight):
            if tuple(p for p in current if p) == shape:
                out.append(tuple(tuple(r) for r in rows if r))
            return
        for nxt in _horizontal_strips(current, shape, weight[letter]):
            added = [list(r) for r in rows]
            for i, (a, b) in enumerate(zip(current + (0,) * (len(nxt) - len(current)), nxt)):
                added[i].extend([letter + 1] * (b - a))
            rec(letter + 1, nxt, added)

    rec(0, (0,) * len(shape), [[] for _ in shape])
    return out


def reading_word(tableau: Tableau) -> Tuple[int, ...]:
    """Rows read left to right, from the bottom row up."""
    return tuple(x for row in reversed(tableau) for x in row)


def _standard_charge(word: Sequence[int]) -> int:
    """Charge of a word with each of 1..k exactly once."""
    pos = {x: i for i, x in enumerate(word)}
    index = total = 0
    for r in range(2, len(word) + 1):
        if pos[r] > pos[r - 1]:
            index += 1
        total += index
    return total


def charge(word: Sequence[int]) -> int:
    """Charge of a word whose content is a partition.

    Standard subwords are peeled off one at a time: from the right end, scan
    leftwards cyclically for a 1, then from there leftwards cyclically for a
    2, and so on up to the largest letter left.
    """
    letters = list(word)
    counts = [letters.count(r) for r in range(1, max(letters, default=0) + 1)]
    if any(a < b for a, b in zip(counts, counts[1:])) or (counts and counts[-1] == 0):
        raise InvalidInputError(f"Word {tuple(word)} does not have partition content")
    total = 0
    remaining = list(enumerate(letters))
    while remaining:
        top = max(x for _, x in remaining)
        picked: List[int] = []
        start = len(remaining)
        for r in range(1, top + 1):
            found = None
            for step in range(1, len(remaining) + 1):
                idx = (start - step) % len(remaining)
                if remaining[idx][1] == r:
                    found = idx
                    break
            picked.append(found)
            start = found
        sub = [remaining[i] for i in sorted(picked)]
        total += _standard_charge([x for _, x in sub])
        chosen = set(picked)
        remaining = [p for i, p in enumerate(remaining) if i not in chosen]
    return total
