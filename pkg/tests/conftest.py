import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from weights.fincat import load_monoidal

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "weights" / "fixtures"

# derandomized so verdicts, including the rare bimonoid interchange failure, are reproducible
settings.register_profile("default", max_examples=200, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=30, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def load(name: str):
    return load_monoidal(FIXTURES / f"{name}.json")


@pytest.fixture(scope="session")
def cats():
    return {n: load(n) for n in ["z2", "chain-max", "chain-min", "nonthin", "z2-cocycle"]}


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        ok, detail = module.RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {module.TITLES[n]}: {detail}")
