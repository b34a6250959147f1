"""
Background scheduler for verification runs submitted through the API
APScheduler with an in-memory job store; runs fire once, right after submission
"""
import logging
from datetime import datetime, timedelta, timezone

from apscheduler.executors.pool import ThreadPoolExecutor
from apscheduler.jobstores.memory import MemoryJobStore
from apscheduler.schedulers.background import BackgroundScheduler

logger = logging.getLogger(__name__)

# Suites are CPU bound; two concurrent runs at most
VERIFY_RUN_SLOTS = 2

scheduler = BackgroundScheduler(
    jobstores={'default': MemoryJobStore()},
    executors={'default': ThreadPoolExecutor(max_workers=VERIFY_RUN_SLOTS)},
    job_defaults={'coalesce': False, 'max_instances': 1, 'misfire_grace_time': 60},
    timezone='UTC'
)


def init_scheduler() -> bool:
    try:
        scheduler.start()
        logger.info(f"✅ Verification scheduler started ({VERIFY_RUN_SLOTS} slots)")
        return True
    except Exception as e:
        logger.error(f"❌ Failed to start verification scheduler: {str(e)}")
        return False


def shutdown_scheduler() -> bool:
    """Stop the scheduler, letting running suites finish"""
    if not scheduler.running:
        return True
    try:
        scheduler.shutdown(wait=True)
        logger.info("✅ Verification scheduler stopped")
        return True
    except Exception as e:
        logger.error(f"❌ Failed to stop verification scheduler: {str(e)}")
        return False


def schedule_verify_run(func, run_id: str, delay_seconds: float = 1.0, **kwargs) -> bool:
    """
    Queue one verification run

    Args:
        func: Callable executing the run
        run_id: Job id, reused as the APScheduler job id
        delay_seconds: Start offset from now
        **kwargs: Passed through to func
    """
    run_date = datetime.now(timezone.utc) + timedelta(seconds=delay_seconds)
    try:
        scheduler.add_job(func=func, trigger='date', run_date=run_date, id=run_id,
                          kwargs=kwargs, replace_existing=True)
        logger.info(f"🔄 Verification run {run_id} queued for {run_date.isoformat()}")
        return True
    except Exception as e:
        logger.error(f"❌ Failed to queue verification run {run_id}: {str(e)}")
        return False


__all__ = [
    'scheduler',
    'init_scheduler',
    'shutdown_scheduler',
    'schedule_verify_run'
]
