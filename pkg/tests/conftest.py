import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, elapsed, limit, note in sorted(ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {number:2d} {name}: {elapsed:.2f}s (limit {limit}s)"
        if note:
            line += f" - {note}"
        terminalreporter.write_line(line)
