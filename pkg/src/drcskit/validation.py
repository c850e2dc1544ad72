from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class ValidationReport:
    """Verdict of a structural check; truthy iff the check passed."""

    check: str
    ok: bool
    message: str = ""
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        return f"{self.check}: {status}" + (f" ({self.message})" if self.message else "")
