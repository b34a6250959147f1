"""
Report export - writes verification reports as JSON or as an Excel sheet
"""
import json
import logging
from pathlib import Path
from typing import List

import pandas as pd

from models.report import VerifySuiteReport

logger = logging.getLogger(__name__)


class ReportExporter:
    """Serializes VerifySuiteReport for standard output or a file"""

    COLUMNS = [
        'suite',
        'max_n',
        'property',
        'passed',
        'failed',
        'counterexample'
    ]

    def __init__(self, include_timing: bool = False):
        self.include_timing = include_timing

    def to_json_text(self, report: VerifySuiteReport) -> str:
        return json.dumps(report.to_dict(include_timing=self.include_timing),
                          ensure_ascii=False, sort_keys=True, indent=2)

    def to_frame(self, report: VerifySuiteReport) -> pd.DataFrame:
        """One row per property"""
        rows: List[list] = []
        for prop in report.properties:
            rows.append([
                report.suite,
                report.max_n,
                prop.name,
                prop.passed,
                prop.failed,
                json.dumps(prop.counterexample, ensure_ascii=False, sort_keys=True)
                if prop.counterexample is not None else ''
            ])
        return pd.DataFrame(rows, columns=self.COLUMNS)

    def write(self, report: VerifySuiteReport, path: str) -> str:
        """
        Write the report to path

        Args:
            report: finished suite report
            path: '.xlsx' gives a spreadsheet, anything else JSON

        Returns:
            The path written
        """
        target = Path(path)
        try:
            if target.suffix.lower() == '.xlsx':
                frame = self.to_frame(report)
                if self.include_timing:
                    frame['duration_seconds'] = round(report.duration_seconds, 3)
                frame.to_excel(target, index=False, engine='openpyxl')
            else:
                target.write_text(self.to_json_text(report) + '\n', encoding='utf-8')
            logger.info(f"📊 Report written: {target}")
            return str(target)
        except Exception as e:
            logger.error(f"❌ Report export failed: {str(e)}")
            raise
