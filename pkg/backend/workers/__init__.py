"""
Workers package - Verification suites, background jobs and scheduler
"""
from workers.scheduler import scheduler, init_scheduler, shutdown_scheduler, schedule_verify_run
from workers.suites import SUITE_CAPS, SUITE_DEFAULTS, run_suite
from workers.verify_worker import JobStatus, execute_verify_job, job_store, submit_verify_job

__all__ = [
    'scheduler',
    'init_scheduler',
    'shutdown_scheduler',
    'schedule_verify_run',
    'SUITE_CAPS',
    'SUITE_DEFAULTS',
    'run_suite',
    'JobStatus',
    'execute_verify_job',
    'job_store',
    'submit_verify_job'
]
