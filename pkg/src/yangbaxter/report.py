"""Pass/fail reports shared by the axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def as_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": None if self.witness is None else [str(w) for w in self.witness],
            "detail": self.detail,
        }


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness=None, detail=""):
        self.checks.append(Check(name, bool(passed), witness, detail))
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        return {"title": self.title, "ok": self.ok, "checks": [c.as_dict() for c in self.checks]}

    def __str__(self):
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            extra = f" witness={c.witness}" if c.witness is not None else ""
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}{extra} {c.detail}".rstrip())
        return "\n".join(lines)
