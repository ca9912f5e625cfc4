"""Runs a named suite end to end: cache lookup, grid fan-out, report assembly."""

from __future__ import annotations

import logging
import time
from typing import Optional

from models.exceptions import InvalidInputError
from models.reports import SuiteReport
from models.run_config import RunConfig

from .grid import GridRunner
from .report_cache import ReportCache
from .suites import get_suite

logger = logging.getLogger(__name__)


class VerificationService:
    def __init__(self, runner: Optional[GridRunner] = None, cache: Optional[ReportCache] = None) -> None:
        self._runner = runner or GridRunner()
        self._cache = cache or ReportCache(None)

    def run(self, config: RunConfig) -> SuiteReport:
        if config.command != "verify" or not config.suite:
            raise InvalidInputError("VerificationService needs a verify command with a suite name")
        suite = get_suite(config.suite)
        cached = self._cache.load(config)
        if cached is not None:
            logger.info("suite %s: using cached report (%d cells)", suite.name, len(cached.cells))
            return cached
        started = time.perf_counter()
        jobs = suite.build(config)
        logger.info("suite %s: %d cells", suite.name, len(jobs))
        report = SuiteReport.assemble(suite.name, self._runner.run(jobs))
        logger.info(
            "suite %s: %s, %d failing cells, %.2fs",
            suite.name,
            "pass" if report.passed else "FAIL",
            len(report.failures()),
            time.perf_counter() - started,
        )
        self._cache.store(config, report)
        return report
