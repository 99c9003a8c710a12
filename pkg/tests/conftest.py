from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=100
)
settings.load_profile("default")

import sys
import time

_START = time.perf_counter()
SUITE_BUDGET_S = 300


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name, (ok, detail) in acc.RESULTS.items():
        tr.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    elapsed = time.perf_counter() - _START
    ok = elapsed < SUITE_BUDGET_S
    tr.write_line(f"{'PASS' if ok else 'FAIL'} 4 total suite runtime: {elapsed:.1f}s "
                  f"(budget {SUITE_BUDGET_S}s)")
