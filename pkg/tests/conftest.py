from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# Criterion id -> (passed, detail), filled by the acceptance tests.
ACCEPTANCE_LINES: dict[str, tuple[bool, str]] = {}


def small_rationals(bound: int = 30, den: int = 12):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, den))


def nonzero_rationals(bound: int = 30, den: int = 12):
    return small_rationals(bound, den).filter(lambda x: x != 0)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k.split("-")[1])):
        ok, detail = ACCEPTANCE_LINES[key]
        line = f"{key} {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(line + (f"  {detail}" if detail else ""))


@pytest.fixture
def rng():
    import random

    return random.Random(20240611)
