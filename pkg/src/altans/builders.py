"""Catalog structures: cycles, small benzenoids, helicenes, nanotubes and caps.

Labelling is fixed so serialized outputs are byte-stable:

* ``cycle(n)``: vertices in perimeter order, outer walk ``0 -> 1 -> ...``.
* lattice benzenoids: boundary clockwise from the top-left corner, then
  interior vertices top to bottom.
* caps: central pentagon ``0..4``, spoke ends ``5..9``, rim ``10..``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

from .altan import altan_patch, color_root
from .boundary import BoundaryEdgesCode, benzenoid_from_code
from .errors import InvalidGraphError, InvalidPatchError
from .graph import BLACK, build_graph, cycle_graph
from .lattice import from_axial, patch_from_cells
from .plane import Patch, PlaneGraph, dart_tail, patch_from_coordinates


def cycle(n: int) -> Patch:
    """The cycle ``C_n`` as a patch with two faces; ``n = 1, 2`` give a loop / digon."""
    if n < 1:
        raise InvalidGraphError("cycle length must be positive")
    if n < 3:
        warnings.warn(f"cycle({n}) is a degenerate multigraph patch", stacklevel=2)
    g = cycle_graph(n)
    rotation = tuple((2 * i, 2 * ((i - 1) % n) + 1) for i in range(n))
    plane = PlaneGraph(g, rotation)
    coords = tuple((math.cos(-2 * math.pi * i / n), math.sin(-2 * math.pi * i / n)) for i in range(n))
    return Patch(plane, plane.face_of_dart[0], coords)


BENZENOID_CELLS = {
    "benzene": [(0, 0)],
    "naphthalene": [(0, 0), (1, 0)],
    "anthracene": [(0, 0), (1, 0), (2, 0)],
    "phenanthrene": [(0, 0), (1, 0), (1, 1)],
    "phenalene": [(0, 0), (1, 0), (0, 1)],
}


def catalog_benzenoid(name: str) -> Patch:
    try:
        axial = BENZENOID_CELLS[name]
    except KeyError:
        raise KeyError(f"unknown benzenoid {name!r}; known: {sorted(BENZENOID_CELLS)}") from None
    return patch_from_cells(from_axial(q, r) for q, r in axial)


def attach_hexagon(p: Patch, u: int, v: int) -> Patch:
    """Fuse a new hexagon onto the boundary edge ``u -> v`` (perimeter direction).

    Adds the path ``u, n, n+1, n+2, n+3, v``; both ends must have valence 2.
    """
    g = p.graph
    walk = p.outer_darts()
    j = next((i for i, d in enumerate(walk) if dart_tail(g, d) == u and g.edges[d >> 1][1 - (d & 1)] == v), None)
    if j is None:
        raise InvalidPatchError(f"{u} -> {v} is not a perimeter edge in walk direction")
    if g.degree(u) != 2 or g.degree(v) != 2:
        raise InvalidPatchError("hexagon must be fused onto an edge between valence-2 vertices")
    n, m = g.n, g.m
    d = walk[j]
    x = walk[j - 1] ^ 1
    rotation = [list(r) for r in p.plane.rotation]
    rotation[u].insert(rotation[u].index(x), 2 * m)
    rotation[v].insert(rotation[v].index(d ^ 1), 2 * (m + 4) + 1)
    for i in range(4):
        rotation.append([2 * (m + i) + 1, 2 * (m + i + 1)])
    path = [u, n, n + 1, n + 2, n + 3, v]
    g1 = g.add(4, zip(path, path[1:]))
    plane = PlaneGraph(g1, tuple(tuple(r) for r in rotation))
    return Patch(plane, plane.face_of_dart[2 * m])


def helicene(rings: int) -> Patch:
    """``[rings]``-helicene: hexagons fused angularly, always turning the same way.

    From six rings on the ends collide when laid on the hexagonal lattice.
    """
    if rings < 1:
        raise ValueError("need at least one ring")
    p = cycle(6)
    u, v = 0, 1
    for _ in range(rings - 1):
        n = p.graph.n
        p = attach_hexagon(p, u, v)
        u, v = n + 2, n + 3
    return p


@dataclass(frozen=True)
class NanotubeSpec:
    k: int
    s: int

    def __post_init__(self) -> None:
        if self.k < 3 or self.s < 1:
            raise ValueError(f"nanotube needs k >= 3 and s >= 1, got ({self.k}, {self.s})")


def nanotube(spec: NanotubeSpec) -> Patch:
    """The ``(k, s)``-nanotube as a plane annulus.

    The first ring is the black altan of ``C_2k``; each further ring is one
    more altan. The original cycle remains as an inner ``2k``-gonal face.
    """
    base = cycle(2 * spec.k)
    tube = altan_patch(base, color_root(base, BLACK).vertices)
    for _ in range(spec.s - 1):
        tube = altan_patch(tube)
    expected = sorted([6] * (spec.k * spec.s) + [2 * spec.k])
    if sorted(tube.interior_face_lengths()) != expected:
        raise AssertionError("nanotube ring structure broken")
    return tube


def _pentagon_cap(rim_per_sector: int) -> Patch:
    # central pentagon 0..4, spoke ends 5..9, rim vertices 10.. (rim_per_sector per sector)
    r = rim_per_sector
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    coords = []
    for i in range(5):
        a = math.pi / 2 - 2 * math.pi * i / 5
        coords.append((math.cos(a), math.sin(a)))
    for i in range(5):
        a = math.pi / 2 - 2 * math.pi * i / 5
        coords.append((2 * math.cos(a), 2 * math.sin(a)))
    for i in range(5):
        chain = [5 + i] + [10 + r * i + j for j in range(r)] + [5 + (i + 1) % 5]
        edges += list(zip(chain, chain[1:]))
        for j in range(r):
            a = math.pi / 2 - 2 * math.pi * (i + (j + 1) / (r + 1)) / 5
            coords.append((2.6 * math.cos(a), 2.6 * math.sin(a)))
    return patch_from_coordinates(build_graph(10 + 5 * r, edges), coords)


def half_dodecahedron() -> Patch:
    """Central pentagon ringed by five pentagons: 15 vertices, 6 pentagons."""
    return _pentagon_cap(1)


def corannulene_cap() -> Patch:
    """Central pentagon ringed by five hexagons (half buckyball): 20 vertices."""
    return _pentagon_cap(2)


def _parse_ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


CATALOG: dict[str, Callable[[], Patch]] = {
    **{name: (lambda name=name: catalog_benzenoid(name)) for name in BENZENOID_CELLS},
    "helicene": lambda: helicene(6),
    "corannulene": corannulene_cap,
    "half-dodecahedron": half_dodecahedron,
}


def build_named(name: str) -> Patch:
    """Catalog lookup, plus parametrised ids ``cycle:N``, ``helicene:N``,
    ``nanotube:K,S`` and ``code:2,4,3,3,4``."""
    if name in CATALOG:
        return CATALOG[name]()
    kind, _, arg = name.partition(":")
    if kind == "cycle" and arg:
        return cycle(int(arg))
    if kind == "helicene" and arg:
        return helicene(int(arg))
    if kind == "nanotube" and arg:
        k, s = _parse_ints(arg)
        return nanotube(NanotubeSpec(k, s))
    if kind == "code" and arg:
        return benzenoid_from_code(BoundaryEdgesCode.parse(arg))
    raise KeyError(f"unknown structure {name!r}; known: {sorted(CATALOG)} or cycle:N, "
                   "helicene:N, nanotube:K,S, code:C1,C2,...")
