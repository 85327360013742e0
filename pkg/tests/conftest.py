"""Terminal summary: one pass/fail line per acceptance criterion."""

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance_results[name] = "PASSED" if report.passed else "FAILED"
    elif report.when == "setup" and report.skipped:
        _acceptance_results[name] = "SKIPPED"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in _acceptance_results.items():
        label = name.replace("test_", "", 1)
        terminalreporter.write_line(f"ACCEPTANCE {label}: {outcome}")
