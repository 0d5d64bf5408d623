from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altans.altan import (
    adjacent_root_pentagon,
    altan,
    altan_patch,
    black_altan,
    gap_lengths,
    iterated_altan,
    iterated_altan_patch,
    ring_face_lengths,
    white_altan,
)
from altans.boundary import benzenoid_from_code, boundary_edges_code
from altans.builders import (
    BENZENOID_CELLS,
    NanotubeSpec,
    catalog_benzenoid,
    corannulene_cap,
    cycle,
    half_dodecahedron,
    helicene,
    nanotube,
)
from altans.errors import InvalidGraphError, InvalidPatchError
from altans.graph import PeripheralRoot, RootedGraph, bipartition, build_graph, cycle_graph
from altans.isomorphism import is_isomorphic
from altans.plane import degree2_root, perimeter

from oracles import small_graphs, to_networkx


def rooted(g, root):
    return RootedGraph(g, PeripheralRoot(tuple(root)))


@st.composite
def rooted_graphs(draw, max_n=8):
    g = draw(small_graphs(min_n=1, max_n=max_n, max_m=12, loops=False))
    root = draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=g.n, unique=True))
    return rooted(g, root)


def exists_monochromatic_colouring(g, root):
    """Exhaustive: some proper 2-colouring gives every root vertex the same colour."""
    for c in product((0, 1), repeat=g.n):
        if all(c[u] != c[v] for u, v in g.edges) and len({c[v] for v in root}) == 1:
            return True
    return False


def test_benzene_altan_labels_and_counts():
    res = altan(rooted(cycle_graph(6), range(6)))
    g = res.graph
    assert (g.n, g.m) == (18, 24)
    assert res.s0 == (6, 7, 8, 9, 10, 11)
    assert res.s1 == res.root.vertices == (12, 13, 14, 15, 16, 17)
    cyc = [g.edges[e] for e in res.cycle_edges]
    walk = [6, 12, 7, 13, 8, 14, 9, 15, 10, 16, 11, 17, 6]
    assert cyc == list(zip(walk, walk[1:]))
    assert [g.edges[e] for e in res.attachment_edges] == [(i, 6 + i) for i in range(6)]
    assert bipartition(g) is None


def test_k2_altan_has_pentagon():
    rg = rooted(build_graph(2, [(0, 1)]), (0, 1))
    res = altan(rg)
    assert (res.graph.n, res.graph.m) == (6, 7)
    assert bipartition(res.graph) is None
    pent = adjacent_root_pentagon(rg, res)
    assert pent == (0, 1, 3, 4, 2)
    assert all(res.graph.has_edge(pent[i], pent[(i + 1) % 5]) for i in range(5))


def test_bipartite_altan_when_root_is_one_colour_class():
    # claw with its three leaves as root
    claw = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    res = altan(rooted(claw, (1, 2, 3)))
    assert bipartition(res.graph) is not None


def test_single_root_vertex_gives_double_edge():
    res = altan(rooted(cycle_graph(3), (0,)))
    g = res.graph
    assert (g.n, g.m) == (5, 6)
    assert g.multiplicity(3, 4) == 2
    assert res.root.vertices == (4,)


def test_empty_root_rejected():
    with pytest.raises(InvalidGraphError):
        altan(rooted(cycle_graph(3), ()))


def test_iterate_zero_is_identity():
    rg = rooted(cycle_graph(6), range(6))
    res = iterated_altan(rg, 0)
    assert res.rooted == rg


def test_second_altan_of_benzene():
    res = iterated_altan(rooted(cycle_graph(6), range(6)), 2)
    assert (res.graph.n, res.graph.m) == (30, 42)
    assert res.root.vertices == tuple(range(24, 30))


@settings(max_examples=150)
@given(rooted_graphs())
def test_size_law(rg):
    res = altan(rg)
    n, m, k = rg.graph.n, rg.graph.m, len(rg.root)
    assert (res.graph.n, res.graph.m) == (n + 2 * k, m + 3 * k)
    for v in range(n):
        bump = 1 if v in rg.root.vertices else 0
        assert res.graph.degree(v) == rg.graph.degree(v) + bump
    assert all(res.graph.degree(v) == 3 for v in res.s0)
    assert all(res.graph.degree(v) == 2 for v in res.s1)


@settings(max_examples=200)
@given(rooted_graphs())
def test_bipartite_iff_root_monochromatic(rg):
    expected = exists_monochromatic_colouring(rg.graph, rg.root)
    a1 = altan(rg).graph
    assert nx.is_bipartite(nx.Graph(to_networkx(a1))) == expected
    assert (bipartition(a1) is not None) == expected


@settings(max_examples=60)
@given(rooted_graphs(max_n=7), st.integers(1, 4))
def test_iterates_keep_bipartiteness(rg, n):
    first = bipartition(altan(rg).graph) is not None
    assert (bipartition(iterated_altan(rg, n).graph) is not None) == first


def test_black_altan_of_even_cycle_is_ring_of_hexagons():
    for k in range(3, 9):
        res = black_altan(cycle(2 * k))
        assert is_isomorphic(res.graph, nanotube(NanotubeSpec(k, 1)).graph)
        assert bipartition(res.graph) is not None


def test_black_altan_of_benzene():
    res = black_altan(catalog_benzenoid("benzene"))
    assert res.graph.n == 12
    assert bipartition(res.graph) is not None


def test_black_and_white_altans_of_naphthalene(naphthalene):
    b, w = black_altan(naphthalene), white_altan(naphthalene)
    assert bipartition(b.graph) is not None
    assert bipartition(w.graph) is not None
    expected = nx.is_isomorphic(to_networkx(b.graph), to_networkx(w.graph))
    assert is_isomorphic(b.graph, w.graph) == expected


@pytest.mark.parametrize("name", ["anthracene", "phenanthrene", "phenalene"])
def test_black_white_isomorphism_agrees_with_networkx(name):
    p = catalog_benzenoid(name)
    if bipartition(p.graph) is None:
        pytest.skip("not bipartite")
    b, w = black_altan(p), white_altan(p)
    expected = nx.is_isomorphic(to_networkx(b.graph), to_networkx(w.graph))
    assert is_isomorphic(b.graph, w.graph) == expected


def test_colour_altan_needs_bipartite_patch():
    with pytest.raises(InvalidGraphError):
        black_altan(cycle(5))


def patches():
    out = {name: catalog_benzenoid(name) for name in BENZENOID_CELLS}
    out.update(
        helicene=helicene(6),
        corannulene=corannulene_cap(),
        half_dodecahedron=half_dodecahedron(),
        c5=cycle(5),
        c3=cycle(3),
        tube=nanotube(NanotubeSpec(5, 2)),
    )
    out["24334"] = benzenoid_from_code([2, 4, 3, 3, 4])
    out["144144"] = benzenoid_from_code([1, 4, 4, 1, 4, 4])
    return out


def test_benzene_altan_patch_ring_of_pentagons(benzene):
    a = altan_patch(benzene)
    assert ring_face_lengths(benzene, a) == [5] * 6
    assert sorted(a.interior_face_lengths()) == [5] * 6 + [6]


@pytest.mark.parametrize("name,p", patches().items())
def test_altan_patch_matches_abstract_altan(name, p):
    a = altan_patch(p)
    res = altan(RootedGraph(p.graph, degree2_root(p)))
    assert a.graph == res.graph
    assert degree2_root(a).vertices == res.s1


@pytest.mark.parametrize("name,p", patches().items())
def test_ring_face_law(name, p):
    a = altan_patch(p)
    gaps = gap_lengths(p)
    k = len(gaps)
    ring = ring_face_lengths(p, a)
    assert sorted(ring) == sorted(t + 4 for t in gaps)
    assert min(ring) >= 5
    assert len(a.interior_faces()) == len(p.interior_faces()) + k
    assert boundary_edges_code(a).entries == (2,) * k
    assert perimeter(a) == [v for i in range(k) for v in (a.graph.n - 2 * k + i, a.graph.n - k + i)]


@pytest.mark.parametrize("name,p", patches().items())
def test_old_faces_survive(name, p):
    a = altan_patch(p)
    old = sorted(p.interior_face_lengths())
    new_inner = sorted(
        a.plane.face_length(f) for f in a.interior_faces()
        if all(v < p.graph.n for v in a.plane.face_vertices(f))
    )
    assert new_inner == old


def test_iterated_patch_rings_are_hexagons_after_first(benzene):
    chain = iterated_altan_patch(benzene, 3)
    for old, new in zip(chain[1:], chain[2:]):
        assert ring_face_lengths(old, new) == [6] * 6


def test_altan_patch_with_colour_root_builds_hexagon_ring():
    c = cycle(8)
    a = altan_patch(c, (0, 2, 4, 6))
    assert ring_face_lengths(c, a) == [6] * 4


def test_altan_patch_rejects_out_of_order_root():
    with pytest.raises(InvalidPatchError):
        altan_patch(cycle(6), (0, 2, 1))
    with pytest.raises(InvalidPatchError):
        altan_patch(catalog_benzenoid("naphthalene"), (4,))


def test_root_start_does_not_change_altan_up_to_isomorphism(naphthalene):
    root = degree2_root(naphthalene).vertices
    base = altan(RootedGraph(naphthalene.graph, PeripheralRoot(root))).graph
    for i in range(1, len(root)):
        turned = root[i:] + root[:i]
        g = altan(RootedGraph(naphthalene.graph, PeripheralRoot(turned))).graph
        assert is_isomorphic(base, g)


@pytest.mark.parametrize("name", sorted(BENZENOID_CELLS))
def test_benzenoid_altan_not_bipartite_with_pentagon(name):
    p = catalog_benzenoid(name)
    rg = RootedGraph(p.graph, degree2_root(p))
    res = altan(rg)
    assert bipartition(res.graph) is None
    pent = adjacent_root_pentagon(rg, res)
    assert pent is not None and len(set(pent)) == 5
    assert all(res.graph.has_edge(pent[i], pent[(i + 1) % 5]) for i in range(5))
    assert p.graph.has_edge(pent[0], pent[1])
