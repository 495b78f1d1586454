from pathlib import Path

import pytest

from tricontinuants.monoid_ring import Polynomial

DATA = Path(__file__).parent


def load_golden_r() -> dict[int, Polynomial]:
    out = {}
    for line in (DATA / "golden_r.txt").read_text().splitlines():
        k, text = line.split(":", 1)
        out[int(k)] = Polynomial.parse(text)
    return out


GOLDEN_P = {
    0: "b0",
    1: "-1 + b0 + b1 b0 + a1",
    2: "-1 + a2 b0 + b1 b0 + a1 - b2 + b2 b0 + b2 b1 b0 + b2 a1",
}


@pytest.fixture(scope="session")
def golden_r():
    return load_golden_r()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
