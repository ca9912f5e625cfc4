from enum import Enum
from pydantic import Field, model_validator
from typing import Literal, Tuple

from .base import FrozenModel


class ClassicalType(FrozenModel):
    """A classical Lie algebra g_n: family A (meaning A_{n-1} / gl_n), B, C or D."""
    family: Literal["A", "B", "C", "D"]
    n: int = Field(ge=2)

    @model_validator(mode="after")
    def _check_rank(self):
        if self.family == "D" and self.n < 3:
            raise ValueError(f"Type D needs n >= 3, got {self.n}")
        return self

    @classmethod
    def parse(cls, family: str, n: int) -> "ClassicalType":
        return cls(family=family.strip().upper(), n=n)

    def __str__(self) -> str:
        if self.family == "A":
            return f"A{self.n - 1}"
        return f"{self.family}{self.n}"


class Diamond(str, Enum):
    """Kind of stable 1-d sum: a partition of size at most two."""
    EMPTY = "empty"
    ONE = "1"
    TWO = "2"
    ONE_ONE = "11"

    @property
    def partition(self) -> Tuple[int, ...]:
        return _DIAMOND_PARTS[self]

    @property
    def family(self) -> str:
        """Root system paired with this kind: ∅ → A, (1) → B, (2) → C, (1,1) → D."""
        return _DIAMOND_FAMILY[self]

    @classmethod
    def parse(cls, text: str) -> "Diamond":
        key = text.strip().replace(",", "")
        if key in {"", "0", "empty"}:
            return cls.EMPTY
        try:
            return cls(key)
        except ValueError as exc:
            raise ValueError(f"Unknown kind {text!r}; expected empty, 1, 2 or 11") from exc


_DIAMOND_PARTS = {
    Diamond.EMPTY: (),
    Diamond.ONE: (1,),
    Diamond.TWO: (2,),
    Diamond.ONE_ONE: (1, 1),
}

_DIAMOND_FAMILY = {
    Diamond.EMPTY: "A",
    Diamond.ONE: "B",
    Diamond.TWO: "C",
    Diamond.ONE_ONE: "D",
}
