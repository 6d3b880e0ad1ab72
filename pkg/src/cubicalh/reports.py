from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ValidationReport:
    """Failures found by a validator; ``ok`` iff there are none."""

    subject: str
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def fail(self, check: str, location, detail: str):
        self.failures.append({"check": check, "location": None if location is None else str(location),
                              "detail": detail})

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)

    def checks_failed(self) -> set:
        return {f["check"] for f in self.failures}

    def merge(self, other: "ValidationReport", prefix: str = ""):
        for f in other.failures:
            self.failures.append({**f, "check": prefix + f["check"]})
        for n in other.notes:
            self.note(n)

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok, "failures": list(self.failures),
                "notes": list(self.notes)}
