"""
Verification report models
"""
import enum
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


class ReportStatus(str, enum.Enum):
    """Outcome of a verification run"""
    PASSED = 'PASSED'
    FAILED = 'FAILED'


@dataclass
class PropertyResult:
    """Pass/fail counts of one checked property"""
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self):
        """Convert to dictionary for reports"""
        return {
            'name': self.name,
            'passed': self.passed,
            'failed': self.failed,
            'counterexample': self.counterexample
        }


@dataclass
class VerifySuiteReport:
    """Outcome of one suite run at fixed bounds"""
    suite: str
    max_n: int
    properties: List[PropertyResult] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def status(self) -> ReportStatus:
        return ReportStatus.PASSED if all(p.ok for p in self.properties) else ReportStatus.FAILED

    @property
    def passed(self) -> int:
        return sum(p.passed for p in self.properties)

    @property
    def failed(self) -> int:
        return sum(p.failed for p in self.properties)

    @property
    def counterexample(self) -> Optional[Dict[str, Any]]:
        """First counterexample in property order"""
        for p in self.properties:
            if p.counterexample is not None:
                return {'property': p.name, **p.counterexample}
        return None

    def to_dict(self, include_timing: bool = False):
        """
        Convert to dictionary for reports

        The wall-clock duration is left out unless include_timing is set, so
        reruns at the same bounds serialize identically.
        """
        data = {
            'suite': self.suite,
            'max_n': self.max_n,
            'status': self.status.value,
            'passed': self.passed,
            'failed': self.failed,
            'properties': [p.to_dict() for p in self.properties],
            'counterexample': self.counterexample
        }
        if include_timing:
            data['duration_seconds'] = round(self.duration_seconds, 3)
        return data
