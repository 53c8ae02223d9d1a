import random

import pytest

from irrcolor.graphs import Graph, component_count, from_edge_list
from irrcolor.cli import _asset_graphs


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    return from_edge_list(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def tree7() -> Graph:
    return from_edge_list(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (4, 6)])


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_connected(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if component_count(g) == 1:
            return g


@pytest.fixture(scope="session")
def connected_le6():
    return _asset_graphs("connected_le6.g6")


@pytest.fixture(scope="session")
def bipartite_le7():
    return _asset_graphs("bipartite_connected_le7.g6")
