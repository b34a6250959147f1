"""
Structured logging utilities
JSON logging with context (suite, job_id, meta)
"""
import os
import sys
import json
import logging
from datetime import datetime, timezone
from typing import Optional, Dict, Any


class StructuredLogger:
    """Structured JSON logger for verification runs and API jobs"""

    def __init__(self, name: str = 'latticesym'):
        self.logger = logging.getLogger(name)
        level = os.getenv('LATTICESYM_LOG_LEVEL', 'INFO').upper()

        # stdout carries reports, so logs go to stderr; module loggers
        # (logging.getLogger(__name__)) share the handler through the root
        root = logging.getLogger()
        if not root.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(self._json_formatter())
            root.addHandler(handler)
        root.setLevel(level)
        self.logger.setLevel(level)

    def _json_formatter(self):
        """Create JSON log formatter"""
        class JSONFormatter(logging.Formatter):
            def format(self, record):
                log_data = {
                    'timestamp': datetime.now(timezone.utc).isoformat(),
                    'level': record.levelname,
                    'message': record.getMessage(),
                    'module': record.module,
                    'function': record.funcName,
                }

                # Add extra fields if present
                if hasattr(record, 'suite'):
                    log_data['suite'] = record.suite
                if hasattr(record, 'job_id'):
                    log_data['job_id'] = record.job_id
                if hasattr(record, 'meta'):
                    log_data['meta'] = record.meta

                return json.dumps(log_data, default=str)

        return JSONFormatter()

    def set_level(self, level: str):
        """Change the level at runtime (CLI --verbose)"""
        self.logger.setLevel(level.upper())
        logging.getLogger().setLevel(level.upper())

    def _extra(self, suite: Optional[str], job_id: Optional[str],
               meta: Optional[Dict[str, Any]]) -> Dict[str, Any]:
        extra = {}
        if suite:
            extra['suite'] = suite
        if job_id:
            extra['job_id'] = job_id
        if meta:
            extra['meta'] = meta
        return extra

    def debug(self, message: str, suite: Optional[str] = None,
              job_id: Optional[str] = None, meta: Optional[Dict[str, Any]] = None):
        """Log debug level message"""
        self.logger.debug(message, extra=self._extra(suite, job_id, meta))

    def info(self, message: str, suite: Optional[str] = None,
             job_id: Optional[str] = None, meta: Optional[Dict[str, Any]] = None):
        """Log info level message"""
        self.logger.info(message, extra=self._extra(suite, job_id, meta))

    def error(self, message: str, suite: Optional[str] = None,
              job_id: Optional[str] = None, meta: Optional[Dict[str, Any]] = None):
        """Log error level message"""
        self.logger.error(message, extra=self._extra(suite, job_id, meta))

    def warn(self, message: str, suite: Optional[str] = None,
             job_id: Optional[str] = None, meta: Optional[Dict[str, Any]] = None):
        """Log warning level message"""
        self.logger.warning(message, extra=self._extra(suite, job_id, meta))


# Global logger instance
logger = StructuredLogger('latticesym')
