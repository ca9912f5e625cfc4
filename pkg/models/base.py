from pydantic import BaseModel, ConfigDict, ValidationError
from typing import Type, TypeVar

from .exceptions import InvalidInputError

RecordT = TypeVar("RecordT", bound="BaseOneDimModel")


class BaseOneDimModel(BaseModel):
    """Mutable record written to and read back from JSON.

    Aliased fields (``lambda``, ``pass``) use the alias on disk and the
    Python name in code; both are accepted on input.
    """
    model_config = ConfigDict(validate_assignment=True, populate_by_name=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)

    @classmethod
    def from_json(cls: Type[RecordT], text: str) -> RecordT:
        try:
            return cls.model_validate_json(text)
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(p) for p in first["loc"]) or cls.__name__
            raise InvalidInputError(f"{cls.__name__} {where}: {first['msg']}") from exc


class FrozenModel(BaseModel):
    """Immutable, hashable value objects (partitions, types)."""
    model_config = ConfigDict(frozen=True)
