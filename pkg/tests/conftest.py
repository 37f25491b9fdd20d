"""Shared fixtures and the acceptance-criterion summary hook."""

import pytest

_CRITERIA: list[tuple[str, bool, str]] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    """Register an acceptance-criterion outcome for the terminal summary."""
    _CRITERIA.append((name, ok, detail))
    assert ok, f"{name}: {detail}"


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name}"
        if detail:
            line += f"  -- {detail}"
        terminalreporter.write_line(line)
