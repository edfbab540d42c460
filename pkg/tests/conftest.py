import random

import pytest

from qaknots.tait_graph import SignedTaitGraph, is_connected

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None and rep.when == "call":
        _criteria.append((mark.args[0], mark.args[1], rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, duration in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{num:<3} {verdict}  {title}  ({duration:.2f}s)")


def random_graph(rng, max_vertices=6, max_edges=12, signs=(1, -1), loops=True,
                 connected=True, min_vertices=1):
    """A random signed multigraph, retried until connected when asked."""
    while True:
        n = rng.randint(min_vertices, max_vertices)
        m = rng.randint(max(n - 1, 0), max_edges)
        edges = []
        for _ in range(m):
            u = rng.randrange(n)
            v = rng.randrange(n) if loops else rng.choice([x for x in range(n) if x != u] or [u])
            edges.append((u, v, rng.choice(signs)))
        g = SignedTaitGraph(n, rng.randrange(n), tuple(edges))
        if not connected or is_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture
def trefoil():
    return SignedTaitGraph(2, 0, ((0, 1, -1),) * 3)


# alternating braid words: generator i always carries sign (-1)**(i + 1)
BRAID_CORPUS = [
    ([1] * 2, 2), ([1] * 3, 2), ([1] * 4, 2), ([1] * 5, 2), ([1] * 6, 2), ([1] * 7, 2),
    ([1, -2] * 2, 3), ([1, -2] * 3, 3), ([1, -2] * 4, 3),
    ([1, 1, -2], 3), ([1, 1, -2, -2], 3), ([1, 1, 1, -2], 3), ([1, 1, 1, -2, -2], 3),
    ([1, 1, -2, 1, -2], 3), ([1, -2, -2, -2, 1, -2], 3),
    ([1, -2, 3] * 2, 4), ([1, 1, -2, 3, 3], 4), ([1, -2, 3, -2], 4),
    ([1, -2, 1, 3, -2, 3], 4), ([1, 1, -2, -2, 3, 3, -2], 4),
]


def burau_det(word, strands):
    """|Alexander polynomial at -1| of a braid closure, via the reduced Burau matrix."""
    import sympy

    t = sympy.symbols("t")
    n = strands - 1
    M = sympy.eye(n)
    for g in word:
        i = abs(g) - 1
        S = sympy.eye(n)
        S[i, i] = -t
        if i > 0:
            S[i, i - 1] = t
        if i < n - 1:
            S[i, i + 1] = 1
        M = M * (S if g > 0 else S.inv())
    num = sympy.cancel((sympy.eye(n) - M).det() * (1 - t))
    alex = sympy.cancel(num / (1 - t ** strands))
    return abs(sympy.nsimplify(alex.subs(t, -1)))
