# models/reports.py
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class CheckResult(BaseModel):
    """One comparison in a report; serialised with the key `pass`."""
    model_config = ConfigDict(populate_by_name=True)

    name: str
    expected: str
    actual: str
    passed: bool = Field(..., alias="pass")


class Report(BaseModel):
    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    runtime_ms: int = 0
    watermark: Optional[str] = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, name: str, expected: Any, actual: Any, passed: Optional[bool] = None) -> CheckResult:
        ok = (str(expected) == str(actual)) if passed is None else passed
        check = CheckResult(name=name, expected=str(expected), actual=str(actual), passed=ok)
        self.checks.append(check)
        return check

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True)
