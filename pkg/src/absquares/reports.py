"""Report objects shared by the verification and reproduction commands."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
UNRESOLVED = "UNRESOLVED"

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_UNRESOLVED = 3


@dataclass
class ReportLine:
    label: str
    status: str
    expected: object = None
    computed: object = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"label": self.label, "status": self.status}
        if self.expected is not None:
            out["expected"] = self.expected
        if self.computed is not None:
            out["computed"] = self.computed
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    lines: list[ReportLine] = field(default_factory=list)

    def add(self, *args, **kwargs) -> ReportLine:
        line = ReportLine(*args, **kwargs)
        self.lines.append(line)
        return line

    @property
    def status(self) -> str:
        statuses = {line.status for line in self.lines}
        if FAIL in statuses:
            return FAIL
        if UNRESOLVED in statuses:
            return UNRESOLVED
        return PASS

    @property
    def exit_code(self) -> int:
        return {PASS: EXIT_OK, FAIL: EXIT_FAIL, UNRESOLVED: EXIT_UNRESOLVED}[self.status]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "status": self.status,
            "lines": [line.to_dict() for line in self.lines],
        }

    def format_text(self, color: bool = False) -> str:
        out = [self.title]
        for line in self.lines:
            status = line.status
            if color:
                code = {PASS: "32", FAIL: "31", UNRESOLVED: "33"}[status]
                status = f"\x1b[{code}m{status}\x1b[0m"
            parts = [f"{status:<10} {line.label}"]
            if line.expected is not None or line.computed is not None:
                parts.append(f"expected={line.expected} computed={line.computed}")
            if line.detail:
                parts.append(line.detail)
            out.append("  " + "  ".join(parts))
        out.append(f"overall: {self.status}")
        return "\n".join(out)
