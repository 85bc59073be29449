import itertools
import random
import sys

import pytest

from polyadic import hypergraph_from_relations, sc_from_relations
from polyadic.convert import hypergraph_to_graph

# authors a1..a4 -> 0..3; papers p1..p4
TOY_PAPERS = [(0, 1), (1, 3), (0, 1, 2), (2, 3)]
TOY_MAXIMAL = ((0, 1, 2), (1, 3), (2, 3))
TOY_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]

# The line choice depends on the previous station only, so an order-2 HON
# (one station of context) separates the lines at D.
SUBWAY_PATHS = [["B", "D", "H"]] * 3 + [["C", "D", "F"]] * 3
# Four-station routes: the lines only part after E, which needs two stations
# of context (order 3) to tell them apart.
SUBWAY_LONG_PATHS = [["B", "D", "E", "H"]] * 3 + [["C", "D", "E", "F"]] * 3


@pytest.fixture
def toy_hg():
    return hypergraph_from_relations(4, TOY_PAPERS)


@pytest.fixture
def toy_sc():
    return sc_from_relations(4, TOY_PAPERS)


@pytest.fixture
def toy_graph(toy_hg):
    return hypergraph_to_graph(toy_hg)


def random_edges(rng: random.Random, n: int, p: float):
    return [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]


def random_relations(rng: random.Random, n: int, count: int, max_size: int = 4):
    rels = []
    for _ in range(count):
        k = rng.randint(1, min(max_size, n))
        rels.append(tuple(sorted(rng.sample(range(n), k))))
    return rels


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
