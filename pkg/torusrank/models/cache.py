"""Persistent expansion cache record."""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCHEMA_VERSION = 1


class CacheRecord(BaseModel):
    """One JSONL line: {"schema_version", "key", "preperiod", "period"}.

    key is the canonical (a, b, c, d, conjugate) tuple.
    """
    model_config = ConfigDict(frozen=True)

    schema_version: int = SCHEMA_VERSION
    key: Tuple[int, int, int, int, int]
    preperiod: List[int] = Field(default_factory=list)
    period: List[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_key(self) -> "CacheRecord":
        _, b, c, d, conj = self.key
        if b <= 0 or c <= 0 or d < 2 or conj not in (0, 1):
            raise ValueError(f"non-canonical cache key {self.key}")
        return self
