import warnings

import pytest

from altans.altan import altan_patch, ring_face_lengths
from altans.boundary import boundary_edges_code, classify
from altans.builders import (
    CATALOG,
    NanotubeSpec,
    attach_hexagon,
    build_named,
    catalog_benzenoid,
    corannulene_cap,
    cycle,
    half_dodecahedron,
    helicene,
    nanotube,
)
from altans.errors import InvalidGraphError, InvalidPatchError
from altans.kekule import count_perfect_matchings
from altans.plane import perimeter


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_entries_are_patches(name):
    p = build_named(name)
    assert p.graph.is_connected()
    assert set(p.graph.degree_sequence()) <= {2, 3}


@pytest.mark.parametrize(
    "name,n,m,hexagons",
    [
        ("benzene", 6, 6, 1),
        ("naphthalene", 10, 11, 2),
        ("anthracene", 14, 16, 3),
        ("phenanthrene", 14, 16, 3),
        ("phenalene", 13, 15, 3),
    ],
)
def test_benzenoid_sizes(name, n, m, hexagons):
    p = catalog_benzenoid(name)
    assert (p.graph.n, p.graph.m) == (n, m)
    assert p.interior_face_lengths() == [6] * hexagons


def test_unknown_names():
    with pytest.raises(KeyError):
        catalog_benzenoid("coronene")
    with pytest.raises(KeyError):
        build_named("buckyball")


def test_parametrised_names():
    assert build_named("cycle:7").graph.n == 7
    assert build_named("helicene:4").graph.n == 18
    assert build_named("nanotube:5,2").graph.n == 30
    assert boundary_edges_code(build_named("code:2,4,3,3,4")).entries == (2, 4, 3, 3, 4)


@pytest.mark.parametrize("rings", range(1, 9))
def test_helicene_sizes(rings):
    p = helicene(rings)
    assert p.graph.n == 4 * rings + 2
    assert p.interior_face_lengths() == [6] * rings


def test_attach_hexagon_needs_valence_two_ends(naphthalene):
    walk = perimeter(naphthalene)
    i = next(i for i, v in enumerate(walk) if naphthalene.graph.degree(v) == 3)
    with pytest.raises(InvalidPatchError):
        attach_hexagon(naphthalene, walk[i], walk[(i + 1) % len(walk)])
    with pytest.raises(InvalidPatchError):
        attach_hexagon(naphthalene, walk[1], walk[0])


@pytest.mark.parametrize("k,s", [(3, 1), (4, 2), (5, 3), (8, 1)])
def test_nanotube_shape(k, s):
    p = nanotube(NanotubeSpec(k, s))
    assert p.graph.n == 2 * k * (s + 1)
    assert sorted(p.interior_face_lengths()) == sorted([6] * (k * s) + [2 * k])
    assert boundary_edges_code(p).entries == (2,) * k


def test_nanotube_spec_validation():
    with pytest.raises(ValueError):
        NanotubeSpec(2, 1)
    with pytest.raises(ValueError):
        NanotubeSpec(4, 0)


def test_half_dodecahedron():
    p = half_dodecahedron()
    assert p.graph.n == 15
    assert p.interior_face_lengths() == [5] * 6
    assert count_perfect_matchings(p.graph) == 0
    assert classify(p).convex


def test_corannulene_cap():
    p = corannulene_cap()
    assert p.graph.n == 20
    assert sorted(p.interior_face_lengths()) == [5] + [6] * 5
    a = altan_patch(p)
    assert sorted(ring_face_lengths(p, a)).count(5) == 5
    assert sorted(a.interior_face_lengths()).count(5) == 6


def test_small_cycles_warn():
    with pytest.warns(UserWarning):
        loop = cycle(1)
    assert loop.graph.edges == ((0, 0),)
    with pytest.warns(UserWarning):
        digon = cycle(2)
    assert digon.graph.multiplicity(0, 1) == 2
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        tri = cycle(3)
    assert tri.interior_face_lengths() == [3]
    with pytest.raises(InvalidGraphError):
        cycle(0)
