import hashlib
from pathlib import Path
from pydantic import ConfigDict, Field, field_validator
from typing import List, Literal, Optional

from .base import BaseOneDimModel
from .classical_type import Diamond
from .partition import DominantWeight, Partition

OutputFormat = Literal["table", "json", "latex"]


class RunConfig(BaseOneDimModel):
    """Validated bundle of one command-line invocation."""
    model_config = ConfigDict(extra="forbid")

    command: Literal["x", "kostka", "kl", "verify", "graph"]
    suite: Optional[str] = None
    lam: Partition = Field(default_factory=Partition)
    mu: Partition = Field(default_factory=Partition)
    lam_weight: Optional[DominantWeight] = None
    mu_weight: Optional[DominantWeight] = None
    diamond: Optional[Diamond] = None
    family: Optional[Literal["A", "B", "C", "D"]] = None
    rank: Optional[int] = Field(None, ge=2)
    ranks: List[int] = Field(default_factory=list)
    colors: List[int] = Field(default_factory=list)
    max_mu: int = Field(4, ge=0, le=8)
    m: Optional[int] = Field(None, ge=1, le=6)
    nvars: int = Field(3, ge=1, le=6)
    degree_cap: int = Field(6, ge=0, le=12)
    kmax: int = Field(4, ge=0, le=8)
    stable: bool = False
    l_short: Optional[int] = Field(None, ge=0, le=4)
    route: Literal["kl", "charge", "onedim"] = "kl"
    output_format: OutputFormat = "table"
    out: Optional[Path] = None
    workers: int = Field(1, ge=1, le=64)
    cache_dir: Optional[Path] = None

    @field_validator("lam", "mu", mode="before")
    @classmethod
    def _coerce_partition(cls, value):
        if value is None:
            return Partition()
        if isinstance(value, (str, list, tuple)):
            return Partition(parts=value)
        return value

    @field_validator("lam_weight", "mu_weight", mode="before")
    @classmethod
    def _coerce_weight(cls, value):
        if isinstance(value, (str, list, tuple)):
            return DominantWeight(coords=value)
        return value

    @field_validator("ranks")
    @classmethod
    def _ranks_at_least_two(cls, value: List[int]) -> List[int]:
        for r in value:
            if r < 2:
                raise ValueError(f"Every rank must be >= 2, got {r}")
        return sorted(set(value))

    @field_validator("colors")
    @classmethod
    def _colors_positive(cls, value: List[int]) -> List[int]:
        for c in value:
            if c < 0:
                raise ValueError(f"Colors are nonnegative, got {c}")
        return sorted(set(value))

    def cache_key(self) -> str:
        """Hash of everything that changes the report; output options excluded."""
        payload = self.model_dump_json(
            exclude={"out", "workers", "cache_dir", "output_format"}
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]
