"""Shared test plumbing: the acceptance-line reporter and the slow gate."""

import pytest

# one line per end-to-end criterion, printed after the run so the summary
# survives output capture
_criteria = {}


def record_criterion(key: str, ok: bool, detail: str) -> None:
    _criteria[key] = (ok, detail)


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="run tests marked slow (long exact solves)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    if "slow" in (config.getoption("-m") or ""):
        return
    skip = pytest.mark.skip(reason="slow; run with --run-slow or -m slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(_criteria):
        ok, detail = _criteria[key]
        tag = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{key}: {tag} - {detail}")
