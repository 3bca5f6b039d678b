"""Named pass/fail checks collected by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail and not self.ok else "")


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def expect_equal(self, name: str, got, want) -> bool:
        ok = list(got) == list(want)
        detail = "" if ok else f"got {_fmt(got)}, want {_fmt(want)}"
        return self.add(name, ok, detail)

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _fmt(seq) -> str:
    items = [_fmt(v) if isinstance(v, (list, tuple)) else str(v) for v in seq]
    if len(items) > 12:
        items = items[:12] + ["..."]
    return "[" + ", ".join(items) + "]"
