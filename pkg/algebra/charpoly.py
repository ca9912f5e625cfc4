"""Multivariate Laurent polynomials in x_1..x_n with QPoly coefficients."""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from models.exceptions import InvalidInputError

from .qpoly import QPoly

Exponent = Tuple[int, ...]


class CharPoly:
    """Element of the rational gl_n character ring tensored with ℤ[q^{±1/2}]."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], QPoly]] = None):
        self.nvars = nvars
        clean: Dict[Exponent, QPoly] = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise InvalidInputError(f"Exponent {exp} does not have {nvars} entries")
                if isinstance(coeff, int):
                    coeff = QPoly({0: coeff})
                if not coeff.is_zero():
                    clean[exp] = coeff
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "CharPoly":
        return cls(nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Union[int, QPoly] = 1) -> "CharPoly":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def one(cls, nvars: int) -> "CharPoly":
        return cls.monomial((0,) * nvars)

    # ---- inspection ---------------------------------------------------

    def items(self) -> Iterator[Tuple[Exponent, QPoly]]:
        return iter(self._terms.items())

    def exponents(self) -> Iterable[Exponent]:
        return self._terms.keys()

    def coefficient(self, exp: Sequence[int]) -> QPoly:
        return self._terms.get(tuple(exp), QPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # ---- arithmetic ---------------------------------------------------

    def _check(self, other: "CharPoly") -> None:
        if other.nvars != self.nvars:
            raise InvalidInputError(f"Variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "CharPoly") -> "CharPoly":
        self._check(other)
        acc = dict(self._terms)
        for exp, c in other._terms.items():
            acc[exp] = acc[exp] + c if exp in acc else c
        return CharPoly(self.nvars, acc)

    def __neg__(self) -> "CharPoly":
        return CharPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "CharPoly") -> "CharPoly":
        return self + (-other)

    def __mul__(self, other: Union["CharPoly", QPoly, int]) -> "CharPoly":
        if isinstance(other, (QPoly, int)):
            return CharPoly(self.nvars, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        acc: Dict[Exponent, QPoly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                acc[exp] = acc[exp] + prod if exp in acc else prod
        return CharPoly(self.nvars, acc)

    __rmul__ = __mul__

    def map_exponents(self, fn: Callable[[Exponent], Exponent], sign: int = 1) -> "CharPoly":
        acc: Dict[Exponent, QPoly] = {}
        for exp, c in self._terms.items():
            new = tuple(fn(exp))
            term = c if sign == 1 else c * sign
            acc[new] = acc[new] + term if new in acc else term
        return CharPoly(self.nvars, acc)

    def truncate_degree(self, cap: int) -> "CharPoly":
        """Keep monomials of total x-degree at most cap."""
        return CharPoly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) <= cap})

    def truncate_q(self, max_half: int) -> "CharPoly":
        """Drop q-powers above max_half half-units in every coefficient."""
        return CharPoly(self.nvars, {e: c.truncate(max_half) for e, c in self._terms.items()})

    def at_q_one(self) -> Dict[Exponent, int]:
        return {e: c.at_one() for e, c in self._terms.items() if c.at_one()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"CharPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(exp) if a
            ) or "1"
            parts.append(f"({self._terms[exp]})*{mono}")
        return " + ".join(parts)
