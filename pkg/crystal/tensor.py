"""Tensor products of row crystals: Kashiwara operators by the signature rule.

A vertex of B_μ is a tuple of row words. Operators act on the concatenated
letters x₁ ⊗ x₂ ⊗ ⋯ and the result is regrouped by the original shape.
With f̃_i(b ⊗ b') = f̃_i(b) ⊗ b' when φ_i(b) > ε_i(b'), a '+' of an earlier
letter cancels a '−' of a later one; f̃ takes the leftmost free '+' and ẽ the
rightmost free '−'.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from models.exceptions import CrystalStructureError, InvalidInputError

from .letters import Letter, LetterCrystal, RowWord, letter_crystal, letter_str, parse_letter

TensorVertex = Tuple[RowWord, ...]
RaisingPath = Tuple[int, ...]


def shape_of(b: TensorVertex) -> Tuple[int, ...]:
    return tuple(len(w) for w in b)


def flatten(b: TensorVertex) -> Tuple[Letter, ...]:
    return tuple(x for w in b for x in w)


def regroup(letters: Sequence[Letter], shape: Sequence[int]) -> TensorVertex:
    out = []
    pos = 0
    for s in shape:
        out.append(tuple(letters[pos:pos + s]))
        pos += s
    return tuple(out)


def word_str(b: TensorVertex) -> str:
    """"1 1 2|3~ 1": factors split by '|', letters by spaces, bars as '~'."""
    return "|".join(" ".join(letter_str(x) for x in w) for w in b)


def parse_vertex(text: str) -> TensorVertex:
    factors = []
    for chunk in text.split("|"):
        letters = tuple(parse_letter(tok) for tok in chunk.split())
        if not letters:
            raise InvalidInputError(f"Empty tensor factor in {text!r}")
        factors.append(letters)
    return tuple(factors)


class TensorCrystal:
    """Crystal operators on B_μ = B_{μ₁} ⊗ ⋯ ⊗ B_{μ_m} over one letter crystal."""

    def __init__(self, family: str, n: int):
        self.letters: LetterCrystal = letter_crystal(family, n)

    @property
    def family(self) -> str:
        return self.letters.family

    @property
    def n(self) -> int:
        return self.letters.n

    @property
    def colors(self) -> Tuple[int, ...]:
        return self.letters.colors

    @property
    def a_colors(self) -> Tuple[int, ...]:
        return self.letters.a_colors

    def _check_color(self, i: int) -> None:
        if i not in self.letters.f:
            raise InvalidInputError(f"Color {i} is not valid for {self.letters}")

    # ---- signature rule ----------------------------------------------

    def signature(self, letters: Sequence[Letter], i: int) -> Tuple[List[int], List[int]]:
        """Positions of the uncancelled '−' and '+' for color i."""
        f_i, e_i = self.letters.f[i], self.letters.e[i]
        minus: List[int] = []
        plus: List[int] = []
        for pos, x in enumerate(letters):
            if x in e_i:
                if plus:
                    plus.pop()
                else:
                    minus.append(pos)
            if x in f_i:
                plus.append(pos)
        return minus, plus

    def epsilon(self, b: TensorVertex, i: int) -> int:
        self._check_color(i)
        return len(self.signature(flatten(b), i)[0])

    def phi(self, b: TensorVertex, i: int) -> int:
        self._check_color(i)
        return len(self.signature(flatten(b), i)[1])

    def f(self, b: TensorVertex, i: int) -> Optional[TensorVertex]:
        self._check_color(i)
        letters = list(flatten(b))
        _, plus = self.signature(letters, i)
        if not plus:
            return None
        pos = plus[0]
        letters[pos] = self.letters.f[i][letters[pos]]
        return self._regroup_checked(letters, b)

    def e(self, b: TensorVertex, i: int) -> Optional[TensorVertex]:
        self._check_color(i)
        letters = list(flatten(b))
        minus, _ = self.signature(letters, i)
        if not minus:
            return None
        pos = minus[-1]
        letters[pos] = self.letters.e[i][letters[pos]]
        return self._regroup_checked(letters, b)

    def _regroup_checked(self, letters: Sequence[Letter], like: TensorVertex) -> TensorVertex:
        out = regroup(letters, shape_of(like))
        for w in out:
            if not self.letters.is_row_word(w):
                raise CrystalStructureError(f"Operator produced a non-row factor {w} in {out}")
        return out

    # ---- weights, hw ---------------------------------------------------

    def weight(self, b: TensorVertex) -> Tuple[int, ...]:
        v = [0] * self.n
        for x in flatten(b):
            v[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(v)

    def is_highest_weight(self, b: TensorVertex, colors: Optional[Iterable[int]] = None) -> bool:
        letters = flatten(b)
        for i in colors if colors is not None else self.colors:
            if self.signature(letters, i)[0]:
                return False
        return True

    def raise_to_highest(
        self, b: TensorVertex, colors: Optional[Sequence[int]] = None
    ) -> Tuple[TensorVertex, RaisingPath]:
        """Apply ẽ_i, smallest applicable color first, until none applies."""
        use = tuple(sorted(colors if colors is not None else self.colors))
        path: List[int] = []
        current = b
        while True:
            for i in use:
                up = self.e(current, i)
                if up is not None:
                    current = up
                    path.append(i)
                    break
            else:
                return current, tuple(path)

    def lower_along(self, hw: TensorVertex, path: RaisingPath) -> TensorVertex:
        """Undo a raising path: apply f̃ in reverse order of the recorded ẽ's."""
        current = hw
        for i in reversed(path):
            down = self.f(current, i)
            if down is None:
                raise CrystalStructureError(f"f_{i} undefined on {word_str(current)} while replaying a path")
            current = down
        return current

    # ---- enumeration ---------------------------------------------------

    def vertices(self, shape: Sequence[int]) -> Iterator[TensorVertex]:
        """Every vertex of B_shape."""
        return product(*(self.letters.row_words(s) for s in shape))

    def component(self, b: TensorVertex, colors: Optional[Sequence[int]] = None) -> Set[TensorVertex]:
        use = tuple(colors if colors is not None else self.colors)
        seen = {b}
        queue = deque([b])
        while queue:
            v = queue.popleft()
            for i in use:
                for w in (self.f(v, i), self.e(v, i)):
                    if w is not None and w not in seen:
                        seen.add(w)
                        queue.append(w)
        return seen

    def edges(self, shape: Sequence[int], colors: Optional[Sequence[int]] = None):
        use = tuple(colors if colors is not None else self.colors)
        for v in self.vertices(shape):
            for i in use:
                w = self.f(v, i)
                if w is not None:
                    yield v, i, w

    def __repr__(self) -> str:
        return f"TensorCrystal({self.family}, {self.n})"
