"""Environment-driven defaults for the command line."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)


def env_bool(name: str, default: bool) -> bool:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


def env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except (TypeError, ValueError):
        logger.warning("Ignoring non-integer %s=%r", name, raw)
        return default


def env_str(name: str, default: Optional[str] = None) -> Optional[str]:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    return raw.strip()


@dataclass(frozen=True)
class Settings:
    cache_dir: Optional[Path]
    workers: int
    degree_cap: int
    log_level: str


def load_settings(dotenv: bool = True) -> Settings:
    if dotenv and env_bool("ONEDIM_LOAD_DOTENV", True):
        load_dotenv()
    cache = env_str("ONEDIM_CACHE_DIR")
    return Settings(
        cache_dir=Path(cache) if cache else None,
        workers=max(1, env_int("ONEDIM_WORKERS", 1)),
        degree_cap=env_int("ONEDIM_DEGREE_CAP", 6),
        log_level=(env_str("ONEDIM_LOG_LEVEL", "WARNING") or "WARNING").upper(),
    )


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(levelname)s [%(name)s] %(message)s",
    )
