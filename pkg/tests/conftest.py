from pathlib import Path

import pytest

from overpartitions.crank import load_crank_spec

REPO = Path(__file__).resolve().parent.parent
WAGNER_PATH = REPO / "cranks" / "wagner_3_2_mod7"


@pytest.fixture(scope="session")
def wagner():
    return load_crank_spec(WAGNER_PATH)


def brute_partitions(n: int, largest: int | None = None) -> int:
    """Count partitions of n into parts <= largest by direct recursion."""
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(brute_partitions(n - part, part) for part in range(1, min(n, largest) + 1))


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
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
