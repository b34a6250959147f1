"""
Verify worker - Background job for verification suites
Runs a suite on the scheduler's thread pool and keeps the report in memory
"""
import enum
import logging
import threading
import uuid
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from utils.errors import LatticeSymError
from workers.suites import check_bounds, run_suite

logger = logging.getLogger(__name__)


class JobStatus(str, enum.Enum):
    """Verification job status"""
    QUEUED = 'QUEUED'
    RUNNING = 'RUNNING'
    DONE = 'DONE'
    FAILED = 'FAILED'


class VerifyJobStore:
    """Thread-safe in-memory record of verification jobs"""

    def __init__(self):
        self._jobs: Dict[str, Dict[str, Any]] = {}
        self._lock = threading.Lock()

    def create(self, suite: str, max_n: int, jobs: int, long: bool) -> str:
        job_id = f'verify-{uuid.uuid4().hex[:12]}'
        with self._lock:
            self._jobs[job_id] = {
                'job_id': job_id,
                'status': JobStatus.QUEUED.value,
                'suite': suite,
                'max_n': max_n,
                'jobs': jobs,
                'long': long,
                'created_at': datetime.now(timezone.utc).isoformat(),
                'finished_at': None,
                'report': None,
                'error': None
            }
        return job_id

    def update(self, job_id: str, **fields):
        with self._lock:
            if job_id in self._jobs:
                self._jobs[job_id].update(fields)

    def get(self, job_id: str) -> Optional[Dict[str, Any]]:
        with self._lock:
            job = self._jobs.get(job_id)
            return dict(job) if job else None

    def clear(self):
        with self._lock:
            self._jobs.clear()


# Global job store instance
job_store = VerifyJobStore()


def execute_verify_job(job_id: str, suite: str, max_n: int, jobs: int = 1, long: bool = False):
    """
    Background job to run one verification suite

    Args:
        job_id: Job identifier from the job store
        suite: Suite name
        max_n: Size bound, already validated
        jobs: Worker threads for the suite
        long: Lift the theoremA cap
    """
    logger.info(f"🔄 [Job {job_id}] Starting suite {suite} (max_n={max_n})")
    job_store.update(job_id, status=JobStatus.RUNNING.value)

    try:
        report = run_suite(suite, max_n, jobs=jobs, long=long, job_id=job_id)
        job_store.update(
            job_id,
            status=JobStatus.DONE.value,
            report=report.to_dict(include_timing=True),
            finished_at=datetime.now(timezone.utc).isoformat()
        )
        logger.info(f"✅ [Job {job_id}] Suite {suite} finished: {report.status.value}")

    except LatticeSymError as e:
        job_store.update(job_id, status=JobStatus.FAILED.value, error=e.to_dict(),
                         finished_at=datetime.now(timezone.utc).isoformat())
        logger.error(f"❌ [Job {job_id}] Suite {suite} rejected: {e.message}")

    except Exception as e:
        job_store.update(job_id, status=JobStatus.FAILED.value,
                         error={'code': 'INTERNAL_ERROR', 'message': str(e), 'details': {}},
                         finished_at=datetime.now(timezone.utc).isoformat())
        logger.error(f"❌ [Job {job_id}] Suite {suite} crashed: {str(e)}", exc_info=True)


def submit_verify_job(suite: str, max_n: Optional[int] = None, jobs: int = 1,
                      long: bool = False, run_inline: bool = False) -> str:
    """
    Validate bounds, record the job and hand it to the scheduler

    Raises:
        UnknownSuiteError, BoundTooLargeError: before anything is queued
    """
    from workers.scheduler import schedule_verify_run

    max_n = check_bounds(suite, max_n, long)
    job_id = job_store.create(suite, max_n, jobs, long)
    if run_inline:
        execute_verify_job(job_id, suite, max_n, jobs, long)
    elif not schedule_verify_run(execute_verify_job, job_id, job_id=job_id, suite=suite,
                                      max_n=max_n, jobs=jobs, long=long):
        job_store.update(job_id, status=JobStatus.FAILED.value,
                         error={'code': 'SCHEDULER_ERROR', 'message': 'Could not schedule job',
                                'details': {}})
    return job_id
