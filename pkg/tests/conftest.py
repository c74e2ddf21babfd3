import random

import pytest

from hkbetti import examples
from hkbetti.diamond import HodgeDiamond


@pytest.fixture(params=examples.NAMES)
def example(request):
    return examples.load_example(request.param)


@pytest.fixture
def hilb3():
    return examples.load_diamond("Hilb3-K3")


def random_symmetric_diamond(rng: random.Random, n: int, top: int = 500) -> HodgeDiamond:
    """Random diamond with Hodge symmetry and Serre duality imposed by construction."""
    size = 2 * n + 1
    table = [[None] * size for _ in range(size)]
    for p in range(size):
        for q in range(size):
            if table[p][q] is None:
                v = rng.randint(0, top)
                for a, b in ((p, q), (q, p), (2 * n - p, 2 * n - q), (2 * n - q, 2 * n - p)):
                    table[a][b] = v
    table[0][0] = table[2 * n][2 * n] = 1
    return HodgeDiamond(n, tuple(tuple(r) for r in table))


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(rep.user_properties)
            if "criterion" in props and rep.when == "call":
                rows.append((props["criterion"], outcome.upper()[:4], props.get("title", "")))
    if rows:
        terminalreporter.section("acceptance criteria")
        for num, status, title in sorted(rows):
            terminalreporter.write_line(f"criterion {num:>2}: {status} {title}")
