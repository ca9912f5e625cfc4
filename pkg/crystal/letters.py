"""Letter crystals B_1 for types A_{n−1}, C_n and D_n^†, and their row words B_s.

Letters are non-zero ints: ``i`` is the unbarred letter i, ``-i`` is ī.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from models.exceptions import CrystalStructureError, InvalidInputError

logger = logging.getLogger(__name__)

Letter = int
RowWord = Tuple[Letter, ...]

CRYSTAL_FAMILIES = ("A", "C", "D")


def letter_str(x: Letter) -> str:
    return f"{-x}~" if x < 0 else str(x)


def parse_letter(text: str) -> Letter:
    raw = text.strip()
    try:
        if raw.endswith("~"):
            return -int(raw[:-1])
        return int(raw)
    except ValueError as exc:
        raise InvalidInputError(f"Not a letter: {text!r}") from exc


def letter_weight(x: Letter, n: int) -> Tuple[int, ...]:
    v = [0] * n
    v[abs(x) - 1] = 1 if x > 0 else -1
    return tuple(v)


def _dagger_simple_root(color: int, n: int) -> Tuple[int, ...]:
    v = [0] * n
    if color == 0:
        v[0] = v[1] = -1
    else:
        v[color - 1], v[color] = 1, -1
    return tuple(v)


def _standard_simple_root(family: str, color: int, n: int) -> Tuple[int, ...]:
    v = [0] * n
    if color < n:
        v[color - 1], v[color] = 1, -1
    elif family == "C":
        v[n - 1] = 2
    return tuple(v)


class LetterCrystal:
    """The crystal graph of B_1 with its partial order ≤^g.

    Built once per (family, n) and never mutated afterwards.
    """

    def __init__(self, family: str, n: int):
        if family not in CRYSTAL_FAMILIES:
            raise InvalidInputError(f"No letter crystal of type {family}")
        if n < 2 or (family == "D" and n < 3):
            raise InvalidInputError(f"Rank {n} too small for type {family}")
        self.family = family
        self.n = n
        self.letters: Tuple[Letter, ...] = self._letters()
        self.f: Dict[int, Dict[Letter, Letter]] = self._arrows()
        self.e: Dict[int, Dict[Letter, Letter]] = {
            c: {dst: src for src, dst in arrows.items()} for c, arrows in self.f.items()
        }
        self._rank = self._order_ranks()
        self._check_weights()

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(sorted(self.f))

    @property
    def a_colors(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n))

    @property
    def highest_letter(self) -> Letter:
        return -self.n if self.family == "D" else 1

    def _letters(self) -> Tuple[Letter, ...]:
        n = self.n
        if self.family == "A":
            return tuple(range(1, n + 1))
        return tuple(range(1, n + 1)) + tuple(-j for j in range(n, 0, -1))

    def _arrows(self) -> Dict[int, Dict[Letter, Letter]]:
        n = self.n
        if self.family == "A":
            return {i: {i: i + 1} for i in range(1, n)}
        if self.family == "C":
            arrows = {i: {i: i + 1, -(i + 1): -i} for i in range(1, n)}
            arrows[n] = {n: -n}
            return arrows
        # standard D_n, then colors i ↦ n − i and letters j ↦ (n+1−j)‾, j̄ ↦ n+1−j
        standard = {i: {i: i + 1, -(i + 1): -i} for i in range(1, n)}
        standard[n] = {n - 1: -n, n: -(n - 1)}

        def relabel(x: Letter) -> Letter:
            return -(n + 1 - x) if x > 0 else n + 1 + x

        return {
            n - i: {relabel(src): relabel(dst) for src, dst in arrows.items()}
            for i, arrows in standard.items()
        }

    def _order_ranks(self) -> Dict[Letter, int]:
        n = self.n
        if self.family == "A":
            return {x: x for x in self.letters}
        if self.family == "C":
            return {x: x if x > 0 else 2 * n + 1 + x for x in self.letters}
        # n̄ < … < 2̄ < {1, 1̄} < 2 < … < n
        ranks = {}
        for x in self.letters:
            if x < 0:
                ranks[x] = n + x
            else:
                ranks[x] = n - 2 + x if x > 1 else n - 1
        return ranks

    def _check_weights(self) -> None:
        for color, arrows in self.f.items():
            if self.family == "D":
                root = _dagger_simple_root(color, self.n)
            else:
                root = _standard_simple_root(self.family, color, self.n)
            for src, dst in arrows.items():
                change = tuple(
                    b - a for a, b in zip(letter_weight(src, self.n), letter_weight(dst, self.n))
                )
                if change != tuple(-r for r in root):
                    raise CrystalStructureError(
                        f"{self.family}{self.n} arrow {color}: {src}->{dst} changes weight by {change}"
                    )

    # ---- order ------------------------------------------------------

    def order_rank(self, x: Letter) -> int:
        return self._rank[x]

    def geq(self, x: Letter, y: Letter) -> bool:
        """x ≥^g y; in type D the letters 1 and 1̄ are incomparable."""
        return x == y or self._rank[x] > self._rank[y]

    def is_row_word(self, word: Sequence[Letter]) -> bool:
        if any(x not in self._rank for x in word):
            return False
        return all(self.geq(a, b) for a, b in zip(word, word[1:]))

    def row_words(self, s: int, alphabet: Optional[FrozenSet[Letter]] = None) -> Tuple[RowWord, ...]:
        """All decreasing words of length s (the vertices of B_s), optionally over a sub-alphabet."""
        return _row_words(self.family, self.n, s, alphabet)

    def __repr__(self) -> str:
        return f"LetterCrystal({self.family}, {self.n})"


@lru_cache(maxsize=None)
def letter_crystal(family: str, n: int) -> LetterCrystal:
    return LetterCrystal(family, n)


@lru_cache(maxsize=None)
def _row_words(family: str, n: int, s: int, alphabet: Optional[FrozenSet[Letter]]) -> Tuple[RowWord, ...]:
    lc = letter_crystal(family, n)
    letters = [x for x in lc.letters if alphabet is None or x in alphabet]
    if family != "D":
        chains = [sorted(letters, key=lc.order_rank, reverse=True)]
    else:
        # two maximal chains: drop 1̄ or drop 1
        chains = [
            sorted((x for x in letters if x != drop), key=lc.order_rank, reverse=True)
            for drop in (-1, 1)
        ]
    words = set()
    for chain in chains:
        words.update(combinations_with_replacement(chain, s))
    ordered = sorted(words, key=lambda w: tuple(-lc.order_rank(x) for x in w) + w)
    return tuple(ordered)
