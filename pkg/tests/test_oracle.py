import random

import pytest

from irrcolor.errors import ParameterError, SizeCapError
from irrcolor.graphs import from_edge_list
from irrcolor.oracle import (
    cross_check,
    independent_partitions,
    irc_partition_exists,
    oracle_invariant,
)

from conftest import complete, complete_bipartite, cycle, random_connected, tree7


def bell_numbers(limit):
    """B(1)..B(limit) by the Bell triangle, independent of the cursor."""
    row = [1]
    out = [1]
    for _ in range(limit - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[-1])
    return out


def test_partition_counts():
    assert len(list(independent_partitions(complete(3), 3))) == 1
    assert len(list(independent_partitions(cycle(4), 2))) == 1
    for n in (2, 4, 5):
        g = cycle(n) if n > 2 else complete(2)
        assert len(list(independent_partitions(g, g.n))) == 1
    with pytest.raises(ParameterError):
        list(independent_partitions(complete(3), 0))
    with pytest.raises(ParameterError):
        list(independent_partitions(complete(3), 4))


def test_partition_totals_on_edgeless_graphs_are_bell_numbers():
    bells = bell_numbers(6)  # 1, 2, 5, 15, 52, 203
    assert bells == [1, 2, 5, 15, 52, 203]
    for n in range(1, 7):
        g = from_edge_list(n, [])
        total = sum(len(list(independent_partitions(g, k))) for k in range(1, n + 1))
        assert total == bells[n - 1]


def test_partitions_are_proper_surjective_canonical():
    rng = random.Random(3)
    for _ in range(20)        :
        g = random_connected(rng, rng.randint(2, 6))
        for k in range(1, g.n + 1):
            for col in independent_partitions(g, k):
                assert col.k == k
                assert col.canonical() == col
                for u, v in g.edges():
                    assert col.color_of[u] != col.color_of[v]


def test_oracle_values():
    assert oracle_invariant(cycle(4), "chi_irc").value == 2
    assert oracle_invariant(tree7(), "chi_i").value == 3
    assert oracle_invariant(complete(4), "ir").value == 1
    assert oracle_invariant(cycle(5), "irc_colorable").value is False
    assert oracle_invariant(complete_bipartite(3, 3), "chi_i").value == 2


def test_size_cap():
    big = from_edge_list(9, [(i, i + 1) for i in range(8)])
    with pytest.raises(SizeCapError):
        oracle_invariant(big, "chi")
    assert oracle_invariant(big, "chi", size_cap=9).value == 2


def test_irc_partition_exists():
    assert irc_partition_exists(cycle(4), 2)
    assert not irc_partition_exists(cycle(4), 3)
    assert not irc_partition_exists(cycle(5), 2)


def test_cross_check_examples():
    rep = cross_check(cycle(5))
    assert rep.ok
    fetched = {e.invariant: e for e in rep.entries}
    assert fetched["irc_colorable"].fast is False
    assert fetched["chi_irc"].fast is None
    rep = cross_check(complete_bipartite(3, 3))
    assert rep.ok
    assert {e.invariant: e.fast for e in rep.entries}["chi_i"] == 2


def test_cross_check_random_graphs():
    rng = random.Random(7)
    for _ in range(25):
        g = random_connected(rng, rng.randint(1, 7))
        assert cross_check(g).ok
