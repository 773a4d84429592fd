"""Configuration management for torusrank.

This module handles loading and validation of environment variables using Pydantic Settings.
"""
from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

PACKAGE_ROOT = Path(__file__).resolve().parent
DEFAULT_TABLE1_WINDOWS = PACKAGE_ROOT.parent / "table1_windows.json"


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Expansion cache
    cache_path: Path = Field(
        Path("./cfrac-cache.jsonl"),
        description="Append-only JSONL expansion cache",
        alias="TORUSRANK_CACHE"
    )

    # Complexity search
    window_max: int = Field(
        10**6,
        ge=1,
        description="Largest radicand D' = b^2 x scanned by the complexity search",
        alias="TORUSRANK_WINDOW_MAX"
    )
    workers: int = Field(
        4,
        ge=1,
        description="Threads used by the window scan; 1 runs single-threaded",
        alias="TORUSRANK_WORKERS"
    )

    # Input limits
    max_radicand: int = Field(
        2**63,
        ge=2,
        description="The CLI rejects radicands above this bound",
        alias="TORUSRANK_MAX_RADICAND"
    )

    cache_verify: bool = Field(
        False,
        description="Re-expand every cache hit and fail on a mismatching record",
        alias="TORUSRANK_CACHE_VERIFY"
    )

    # Logging
    log_level: str = Field(
        "WARNING",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
        alias="TORUSRANK_LOG_LEVEL"
    )

    # per-prime window overrides for the rank table
    table1_windows_path: Path = Field(
        DEFAULT_TABLE1_WINDOWS,
        description="Checked-in JSON file with per-prime window overrides",
        alias="TORUSRANK_TABLE1_WINDOWS"
    )

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        populate_by_name=True
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings, loaded on first use."""
    return Settings()
