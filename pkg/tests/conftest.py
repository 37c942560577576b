def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(RESULTS):
        checks = RESULTS[k]
        bad = [name for name, ok in checks.items() if not ok]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {k}: {status} ({len(checks) - len(bad)}/{len(checks)} sub-checks)"
        if bad:
            line += " failing: " + "; ".join(bad)
        tr.write_line(line)
