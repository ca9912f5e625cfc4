from pydantic import Field, field_validator
from typing import List, Tuple

from .base import FrozenModel


def parse_parts(text: str) -> Tuple[int, ...]:
    """Parse "3,1,1" into a tuple. "" and "0" both mean the empty partition."""
    raw = text.strip()
    if raw in {"", "0"}:
        return ()
    try:
        return tuple(int(p) for p in raw.split(","))
    except ValueError as exc:
        raise ValueError(f"Not a comma-separated integer list: {text!r}") from exc


class Partition(FrozenModel):
    """A partition; trailing zeros are normalized away."""
    parts: Tuple[int, ...] = Field(default_factory=tuple)

    @field_validator("parts", mode="before")
    @classmethod
    def _normalize(cls, value):
        if isinstance(value, str):
            value = parse_parts(value)
        parts = [int(p) for p in value]
        for p in parts:
            if p < 0:
                raise ValueError(f"Partition parts must be nonnegative, got {p}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return tuple(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(parts=parse_parts(text))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, m: int) -> Tuple[int, ...]:
        """Zero-pad to exactly m parts."""
        if self.length > m:
            raise ValueError(f"Partition {self} has more than {m} parts")
        return self.parts + (0,) * (m - self.length)

    def as_list(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


class DominantWeight(FrozenModel):
    """Weakly decreasing integer vector; entries may be negative."""
    coords: Tuple[int, ...]

    @field_validator("coords", mode="before")
    @classmethod
    def _check_decreasing(cls, value):
        if isinstance(value, str):
            value = parse_parts(value)
        coords = tuple(int(c) for c in value)
        for a, b in zip(coords, coords[1:]):
            if a < b:
                raise ValueError(f"Dominant weight must be weakly decreasing: {coords}")
        return coords

    @property
    def n(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)
