import random

import pytest

from fdpi import InvalidFieldError, make_biquadratic


def random_fields(rng: random.Random, count: int, bound: int = 10**4):
    """``count`` valid biquadratic fields with ``|a|, |b| <= bound``."""
    fields = []
    while len(fields) < count:
        try:
            fields.append(make_biquadratic(rng.randint(-bound, bound), rng.randint(-bound, bound)))
        except InvalidFieldError:
            continue
    return fields


@pytest.fixture
def field_36():
    """a = 50, b = 155."""
    return make_biquadratic(50, 155)


@pytest.fixture
def field_43():
    """a = -4, b = 6."""
    return make_biquadratic(-4, 6)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines, key=lambda x: int(x[0].split("_")[2])):
            terminalreporter.write_line(f"{status}  {name}")
