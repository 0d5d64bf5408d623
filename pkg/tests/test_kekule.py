import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from altans.altan import altan, iterated_altan
from altans.builders import (
    NanotubeSpec,
    catalog_benzenoid,
    corannulene_cap,
    cycle,
    half_dodecahedron,
    helicene,
    nanotube,
)
from altans.errors import LimitExceededError, SizeGuardError
from altans.graph import PeripheralRoot, RootedGraph, build_graph, cycle_graph
from altans.kekule import (
    count_perfect_matchings,
    doubling_report_json,
    enumerate_perfect_matchings,
    nanotube_count,
    verify_doubling,
)
from altans.plane import degree2_root

from oracles import brute_force_matchings, small_graphs, to_networkx


def rooted(p):
    return RootedGraph(p.graph, degree2_root(p))


def is_perfect(g, matching):
    ends = [v for e in matching for v in g.edges[e]]
    return len(ends) == g.n and len(set(ends)) == g.n


def test_small_counts():
    assert count_perfect_matchings(cycle_graph(6)) == 2
    assert count_perfect_matchings(cycle_graph(5)) == 0
    assert count_perfect_matchings(build_graph(2, [(0, 1)])) == 1
    assert count_perfect_matchings(build_graph(0, [])) == 1


def test_parallel_edges_multiply_and_loops_ignored():
    assert count_perfect_matchings(build_graph(2, [(0, 1), (0, 1), (0, 0)])) == 2


@pytest.mark.parametrize(
    "name,expected",
    [("benzene", 2), ("naphthalene", 3), ("anthracene", 4), ("phenanthrene", 5), ("phenalene", 0)],
)
def test_catalog_benzenoids(name, expected):
    g = catalog_benzenoid(name).graph
    assert count_perfect_matchings(g) == expected
    assert brute_force_matchings(g) == expected


def test_helicenes_follow_fibonacci():
    assert [count_perfect_matchings(helicene(r).graph) for r in (5, 6, 7)] == [13, 21, 34]


def test_caps():
    assert count_perfect_matchings(corannulene_cap().graph) == 11
    assert count_perfect_matchings(half_dodecahedron().graph) == 0


def test_enumeration_small():
    assert enumerate_perfect_matchings(build_graph(2, [(0, 1)])) == [(0,)]
    c6 = cycle_graph(6)
    ms = enumerate_perfect_matchings(c6)
    assert ms == [(0, 2, 4), (1, 3, 5)]


def test_enumeration_naphthalene(naphthalene):
    g = naphthalene.graph
    ms = enumerate_perfect_matchings(g)
    assert len(ms) == 3 == brute_force_matchings(g)
    assert all(is_perfect(g, m) for m in ms)
    assert len(set(ms)) == 3


@settings(max_examples=150)
@given(small_graphs(max_n=8, max_m=12, loops=True))
def test_count_matches_brute_force(g):
    assert count_perfect_matchings(g) == brute_force_matchings(g)


@settings(max_examples=80)
@given(small_graphs(max_n=8, max_m=12))
def test_enumeration_matches_networkx_on_simple_graphs(g):
    ms = enumerate_perfect_matchings(g)
    assert len(ms) == count_perfect_matchings(g)
    h = to_networkx(g)
    for m in ms:
        assert nx.is_perfect_matching(h, {g.edges[e] for e in m})


@settings(max_examples=80)
@given(small_graphs(max_n=10, max_m=16, loops=True))
def test_heuristic_does_not_change_count(g):
    assert count_perfect_matchings(g, "first") == count_perfect_matchings(g, "min-degree")


def test_unknown_heuristic():
    with pytest.raises(ValueError):
        count_perfect_matchings(cycle_graph(4), "random")


def test_doubling_benzene():
    steps = verify_doubling(rooted(cycle(6)), 3)
    assert [s.count for s in steps] == [2, 4, 8, 16]
    assert all(s.passed for s in steps)


def test_doubling_corannulene():
    steps = verify_doubling(rooted(corannulene_cap()), 3)
    assert [s.count for s in steps] == [11, 22, 44, 88]


def test_doubling_zero_stays_zero():
    steps = verify_doubling(rooted(half_dodecahedron()), 2)
    assert [s.count for s in steps] == [0, 0, 0]
    assert all(s.passed for s in steps)


def test_doubling_report_format():
    steps = verify_doubling(rooted(cycle(6)), 2)
    data = json.loads(doubling_report_json(steps))
    assert data == [
        {"j": 0, "count": "2", "expected": "2", "pass": True},
        {"j": 1, "count": "4", "expected": "4", "pass": True},
        {"j": 2, "count": "8", "expected": "8", "pass": True},
    ]


@pytest.mark.parametrize("k", range(3, 9))
def test_nanotube_counts_ignore_circumference(k):
    assert [nanotube_count(k, s) for s in range(1, 5)] == [4, 8, 16, 32]


def test_nanotube_named_values():
    assert nanotube_count(5, 1) == 4
    assert nanotube_count(3, 3) == 16


def test_doubling_independent_of_root():
    rng = random.Random(11)
    for g in (catalog_benzenoid("naphthalene").graph, corannulene_cap().graph, cycle_graph(7)):
        base = count_perfect_matchings(g)
        for _ in range(50):
            size = rng.randint(1, g.n)
            root = rng.sample(range(g.n), size)
            res = altan(RootedGraph(g, PeripheralRoot(tuple(root))))
            assert count_perfect_matchings(res.graph) == 2 * base


def test_spokes_never_matched(naphthalene):
    res = altan(rooted(naphthalene))
    spokes = set(res.attachment_edges)
    for m in enumerate_perfect_matchings(res.graph):
        assert not spokes & set(m)


def test_large_iterate_counts_exactly():
    res = iterated_altan(rooted(corannulene_cap()), 5)
    assert count_perfect_matchings(res.graph) == 11 * 2**5


def test_size_guards():
    with pytest.raises(SizeGuardError):
        count_perfect_matchings(cycle_graph(202))
    with pytest.raises(SizeGuardError):
        enumerate_perfect_matchings(cycle_graph(42))
    with pytest.raises(LimitExceededError):
        enumerate_perfect_matchings(nanotube(NanotubeSpec(4, 3)).graph, limit=10)
