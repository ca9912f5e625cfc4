"""JSON report cache keyed by suite name and the hash of the run configuration."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Optional

from models.exceptions import InvalidInputError, ReportCacheError
from models.reports import SuiteReport
from models.run_config import RunConfig

logger = logging.getLogger(__name__)


class ReportCache:
    def __init__(self, directory: Optional[Path]) -> None:
        self._directory = Path(directory) if directory else None

    @property
    def enabled(self) -> bool:
        return self._directory is not None

    def path_for(self, config: RunConfig) -> Path:
        if self._directory is None:
            raise ReportCacheError("Report cache is disabled")
        return self._directory / f"{config.suite or config.command}-{config.cache_key()}.json"

    def read(self, config: RunConfig) -> SuiteReport:
        path = self.path_for(config)
        try:
            report = SuiteReport.from_json(path.read_text(encoding="utf-8"))
        except (OSError, InvalidInputError) as exc:
            raise ReportCacheError(f"Unreadable cache file {path}: {exc}") from exc
        if report.suite != config.suite:
            raise ReportCacheError(f"Cache file {path} holds suite {report.suite!r}, expected {config.suite!r}")
        return report

    def load(self, config: RunConfig) -> Optional[SuiteReport]:
        """Cached report, or None on a miss or a bad file."""
        if not self.enabled or not self.path_for(config).exists():
            return None
        try:
            report = self.read(config)
        except ReportCacheError as exc:
            logger.warning("Ignoring report cache: %s", exc)
            return None
        logger.debug("Report cache hit: %s", self.path_for(config))
        return report

    def store(self, config: RunConfig, report: SuiteReport) -> Optional[Path]:
        if not self.enabled:
            return None
        path = self.path_for(config)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(report.to_json() + "\n", encoding="utf-8")
        os.replace(tmp, path)
        logger.debug("Stored report %s", path)
        return path
