from pydantic import Field
from typing import List, Optional

from .base import BaseOneDimModel


class CellReport(BaseOneDimModel):
    """Outcome of one (λ, μ) cell of a verification grid."""

    lam: List[int] = Field(alias="lambda")
    mu: List[int]
    kind: str
    rank: int = Field(ge=0)
    x: str
    k: str
    passed: bool = Field(alias="pass")
    vertices: int = Field(0, ge=0)
    detail: Optional[str] = None

    def sort_key(self):
        return (self.lam, self.mu, self.kind, self.rank)


class SuiteReport(BaseOneDimModel):
    """A whole verification run: the JSON document written by `verify`."""

    suite: str
    passed: bool = Field(alias="pass")
    cells: List[CellReport] = Field(default_factory=list)

    @classmethod
    def assemble(cls, suite: str, cells: List[CellReport]) -> "SuiteReport":
        ordered = sorted(cells, key=CellReport.sort_key)
        return cls(suite=suite, passed=all(c.passed for c in ordered), cells=ordered)

    def failures(self) -> List[CellReport]:
        return [c for c in self.cells if not c.passed]
