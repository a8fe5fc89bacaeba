"""
Check results and reports

JSON output is sorted and carries no timing, so two runs on the same input
give byte-identical documents. The text rendering adds elapsed time.
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from torichms.defaults import EXIT_CHECK_FAILURE, EXIT_PASS, REPORT_SCHEMA_VERSION

PASS = 'pass'
FAIL = 'fail'


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one named check

    Example:
        CheckResult.failed('affine.a_vs_b', {'pair': [[1, [0]], [2, [1]]], 'parity': 'odd', 'weight': 3})
    """
    name: str
    status: str
    counterexample: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def passed(cls, name: str, **details: Any) -> 'CheckResult':
        return cls(name, PASS, None, details)

    @classmethod
    def failed(cls, name: str, counterexample: Optional[Dict[str, Any]] = None, **details: Any) -> 'CheckResult':
        return cls(name, FAIL, counterexample or {}, details)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def prefixed(self, prefix: str) -> 'CheckResult':
        return CheckResult(f"{prefix}.{self.name}", self.status, self.counterexample, self.details)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'name': self.name, 'status': self.status}
        if self.counterexample is not None:
            data['counterexample'] = self.counterexample
        if self.details:
            data['details'] = self.details
        return data


@dataclass
class HmsReport:
    input: Dict[str, Any]
    checks: List[CheckResult] = field(default_factory=list)
    topology: Optional[Dict[str, int]] = None
    timing: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def exit_code(self) -> int:
        return EXIT_PASS if self.passed else EXIT_CHECK_FAILURE

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.ok]

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)

    def extend(self, checks: Sequence[CheckResult], prefix: Optional[str] = None) -> None:
        for check in checks:
            self.checks.append(check.prefixed(prefix) if prefix else check)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'schema': REPORT_SCHEMA_VERSION,
            'input': self.input,
            'checks': [check.to_dict() for check in self.checks],
        }
        if self.topology is not None:
            data['topology'] = self.topology
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    def to_text(self) -> str:
        lines = [f"input: {json.dumps(self.input, sort_keys=True)}"]
        width = max((len(c.name) for c in self.checks), default=0)
        for check in self.checks:
            lines.append(f"  {check.name.ljust(width)}  {check.status.upper()}")
            if check.counterexample:
                lines.append(f"      counterexample: {json.dumps(check.counterexample, sort_keys=True)}")
        if self.topology is not None:
            shown = ', '.join(f"{key}={value}" for key, value in sorted(self.topology.items()))
            lines.append(f"topology: {shown}")
        verdict = 'PASS' if self.passed else f"FAIL ({len(self.failures())} of {len(self.checks)} checks)"
        lines.append(f"result: {verdict}")
        if self.timing is not None:
            lines.append(f"time: {self.timing:.3f}s")
        return '\n'.join(lines) + '\n'

    def render(self, format_type: str) -> str:
        return self.to_json() if format_type == 'json' else self.to_text()
