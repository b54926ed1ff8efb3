import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion, regardless of capture."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid or getattr(rep, "when", "call") != "call":
                continue
            m = re.search(r"test_criterion_(\d+)_(\w+)", nodeid)
            if m:
                results[(int(m.group(1)), m.group(2))] = status
    if not results:
        return
    tw = terminalreporter
    tw.section("acceptance criteria")
    for (num, name), status in sorted(results.items()):
        verdict = "PASS" if status == "passed" else "FAIL"
        tw.write_line(f"criterion {num:2d} [{name}]: {verdict}")
