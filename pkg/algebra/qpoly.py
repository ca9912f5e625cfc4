"""Laurent polynomials in q with exponents in ½ℤ and integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

Scalar = Union[int, "QPoly"]


class QPoly:
    """Immutable polynomial; exponents stored as integer counts of half-units.

    ``QPoly({2: 1, 4: 1})`` is q + q².
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        clean: Dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = dict(sorted(clean.items()))
        self._hash: Optional[int] = None

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "QPoly":
        return _ONE

    @classmethod
    def monomial(cls, half_units: int, coeff: int = 1) -> "QPoly":
        return cls({half_units: coeff})

    @classmethod
    def q(cls, power: Union[int, Fraction] = 1) -> "QPoly":
        """q^power for an integer or half-integer power."""
        doubled = Fraction(power) * 2
        if doubled.denominator != 1:
            raise ValueError(f"q-power must lie in ½ℤ, got {power}")
        return cls({int(doubled): 1})

    @classmethod
    def sum(cls, polys: Iterable["QPoly"]) -> "QPoly":
        acc: Dict[int, int] = {}
        for p in polys:
            for e, c in p._terms.items():
                acc[e] = acc.get(e, 0) + c
        return cls(acc)

    # ---- inspection ---------------------------------------------------

    def items(self) -> Iterator[Tuple[int, int]]:
        """(half_units, coeff) pairs in ascending exponent order."""
        return iter(self._terms.items())

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def coefficient(self, half_units: int) -> int:
        return self._terms.get(half_units, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_half(self) -> Optional[int]:
        return next(iter(self._terms), None)

    def max_half(self) -> Optional[int]:
        return next(reversed(self._terms), None) if self._terms else None

    def at_one(self) -> int:
        return sum(self._terms.values())

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def is_integral(self) -> bool:
        """True when every exponent is an integer (no q^{k/2} with odd k)."""
        return all(e % 2 == 0 for e in self._terms)

    # ---- arithmetic ---------------------------------------------------

    def __add__(self, other: Scalar) -> "QPoly":
        other = _coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return QPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "QPoly":
        return _coerce(other) - self

    def __mul__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._terms.items()})
        acc: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return QPoly(acc)

    __rmul__ = __mul__

    def shift(self, half_units: int) -> "QPoly":
        """q^{half_units/2} · self."""
        return QPoly({e + half_units: c for e, c in self._terms.items()})

    def bar(self) -> "QPoly":
        """The involution q ↦ q^{-1}."""
        return QPoly({-e: c for e, c in self._terms.items()})

    def truncate(self, max_half: int) -> "QPoly":
        """Drop every term of exponent above max_half half-units."""
        return QPoly({e: c for e, c in self._terms.items() if e <= max_half})

    # ---- equality / rendering ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def __str__(self) -> str:
        return self._render(_plain_power)

    def to_latex(self) -> str:
        return self._render(_latex_power)

    def _render(self, power) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = (str(mag) if mag != 1 else "") + power(e)
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def _plain_power(half: int) -> str:
    if half % 2:
        return f"q^{{{half}/2}}"
    e = half // 2
    return "q" if e == 1 else f"q^{e}"


def _latex_power(half: int) -> str:
    if half % 2:
        return f"q^{{{half}/2}}"
    e = half // 2
    return "q" if e == 1 else f"q^{{{e}}}"


def _coerce(value: Scalar) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly({0: value})
    raise TypeError(f"Cannot combine QPoly with {type(value).__name__}")


_ZERO = QPoly()
_ONE = QPoly({0: 1})
