import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criteria PASS/FAIL lines after the test summary,
    since pytest captures the prints made inside the tests themselves."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "_PRINTED", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
