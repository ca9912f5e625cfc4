from .grid import GridRunner, Job
from .report_cache import ReportCache
from .suites import SUITES, Suite, get_suite
from .verification_service import VerificationService

__all__ = [
    "GridRunner",
    "Job",
    "ReportCache",
    "SUITES",
    "Suite",
    "VerificationService",
    "get_suite",
]
