"""Fan grid cells out to a worker pool and collect their reports."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, List, Sequence, Tuple

from models.reports import CellReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Job:
    """One grid cell: a module-level function and its arguments (both picklable)."""
    fn: Callable[..., CellReport]
    args: Tuple[Any, ...]

    def __call__(self) -> CellReport:
        return self.fn(*self.args)


def _run(job: Job) -> CellReport:
    return job()


class GridRunner:
    def __init__(self, workers: int = 1, chunksize: int = 4) -> None:
        self._workers = max(1, workers)
        self._chunksize = max(1, chunksize)

    @property
    def workers(self) -> int:
        return self._workers

    def run(self, jobs: Sequence[Job]) -> List[CellReport]:
        """Evaluate every job; order of the result is the order of jobs."""
        if not jobs:
            return []
        if self._workers == 1 or len(jobs) == 1:
            logger.info("Running %d cells inline", len(jobs))
            return [job() for job in jobs]
        logger.info("Running %d cells on %d workers", len(jobs), self._workers)
        with ProcessPoolExecutor(max_workers=self._workers) as pool:
            return list(pool.map(_run, jobs, chunksize=self._chunksize))
