"""Rotation-system embeddings, face tracing and patches.

Each edge ``e = (u, v)`` has two darts: ``2e`` leaves ``u`` and ``2e + 1``
leaves ``v`` (for a loop both leave the same vertex). A rotation lists, for
every vertex, the darts leaving it in counterclockwise order.

Faces are traced with ``next(d) = rotation-predecessor of reverse(d)``, so
every face walk keeps its face on the left. Interior faces of a drawn patch
run counterclockwise and the outer face runs clockwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import InvalidGraphError, InvalidPatchError
from .graph import Graph, PeripheralRoot


def dart_tail(g: Graph, d: int) -> int:
    return g.edges[d >> 1][d & 1]


def dart_head(g: Graph, d: int) -> int:
    return g.edges[d >> 1][1 - (d & 1)]


@dataclass(frozen=True)
class PlaneGraph:
    """A connected multigraph with a rotation system (sphere embedding)."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    face_of_dart: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _where: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = self.graph
        rotation = tuple(tuple(r) for r in self.rotation)
        object.__setattr__(self, "rotation", rotation)
        if len(rotation) != g.n:
            raise InvalidGraphError(f"rotation covers {len(rotation)} vertices, graph has {g.n}")
        where: list[Optional[tuple[int, int]]] = [None] * (2 * g.m)
        for v, darts in enumerate(rotation):
            for i, d in enumerate(darts):
                if not (0 <= d < 2 * g.m):
                    raise InvalidGraphError(f"rotation at {v} names unknown dart {d}")
                if where[d] is not None:
                    raise InvalidGraphError(f"dart {d} appears twice in the rotation")
                if dart_tail(g, d) != v:
                    raise InvalidGraphError(f"dart {d} does not leave vertex {v}")
                where[d] = (v, i)
        if any(w is None for w in where):
            missing = [d for d, w in enumerate(where) if w is None]
            raise InvalidGraphError(f"darts missing from rotation: {missing}")
        object.__setattr__(self, "_where", tuple(where))  # type: ignore[arg-type]
        faces, face_of = self._trace()
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "face_of_dart", face_of)
        if not g.is_connected():
            raise InvalidGraphError("plane graphs must be connected")
        if g.n - g.m + len(faces) != 2:
            raise InvalidGraphError(
                f"rotation is not a sphere embedding: n - m + f = {g.n - g.m + len(faces)}"
            )

    def next_dart(self, d: int) -> int:
        """The dart following ``d`` along the face on its left."""
        v, i = self._where[d ^ 1]
        darts = self.rotation[v]
        return darts[(i - 1) % len(darts)]

    def rotation_successor(self, d: int) -> int:
        v, i = self._where[d]
        darts = self.rotation[v]
        return darts[(i + 1) % len(darts)]

    def _trace(self):
        m2 = 2 * self.graph.m
        face_of = [-1] * m2
        faces = []
        for start in range(m2):
            if face_of[start] >= 0:
                continue
            walk = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(faces)
                walk.append(d)
                d = self.next_dart(d)
            faces.append(tuple(walk))
        if self.graph.n == 1 and self.graph.m == 0:
            faces.append(())
        return tuple(faces), tuple(face_of)

    def face_vertices(self, f: int) -> list[int]:
        return [dart_tail(self.graph, d) for d in self.faces[f]]

    def face_edges(self, f: int) -> list[int]:
        return [d >> 1 for d in self.faces[f]]

    def face_length(self, f: int) -> int:
        return len(self.faces[f])


def trace_faces(p: PlaneGraph) -> list[list[int]]:
    """Face walks of ``p`` as vertex sequences, in dart order of discovery."""
    return [p.face_vertices(f) for f in range(len(p.faces))]


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices of a multigraph, by iterative low-point DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    t = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent_edge, it = stack[-1]
            descended = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(g.adjacency[w])))
                    descended = True
                    break
                low[u] = min(low[u], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if p == root:
                    root_children += 1
                elif low[u] >= disc[p]:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_biconnected(g: Graph) -> bool:
    return g.is_connected() and not articulation_points(g)


@dataclass(frozen=True)
class Patch:
    """A 2-connected plane graph with valences 2 and 3 and a chosen outer face.

    ``coords`` optionally carries drawing or lattice coordinates; they play no
    role in any computation.
    """

    plane: PlaneGraph
    outer_face: int
    coords: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        g = self.plane.graph
        if not (0 <= self.outer_face < len(self.plane.faces)):
            raise InvalidPatchError(f"outer face {self.outer_face} does not exist")
        bad = [v for v in range(g.n) if g.degree(v) not in (2, 3)]
        if bad:
            raise InvalidPatchError(f"vertices of valence other than 2 or 3: {bad}")
        cuts = articulation_points(g)
        if cuts:
            raise InvalidPatchError(f"not 2-connected, cut vertices {sorted(cuts)}")

    @property
    def graph(self) -> Graph:
        return self.plane.graph

    def interior_faces(self) -> list[int]:
        return [f for f in range(len(self.plane.faces)) if f != self.outer_face]

    def interior_face_lengths(self) -> list[int]:
        return [self.plane.face_length(f) for f in self.interior_faces()]

    def outer_darts(self) -> list[int]:
        """Outer face walk starting with the dart leaving the lowest boundary vertex."""
        walk = list(self.plane.faces[self.outer_face])
        g = self.graph
        i = min(range(len(walk)), key=lambda j: dart_tail(g, walk[j]))
        return walk[i:] + walk[:i]

    def boundary_vertices(self) -> set[int]:
        return set(perimeter(self))


def perimeter(p: Patch) -> list[int]:
    """Boundary walk of the outer face, outer face on the left, from the lowest vertex."""
    return [dart_tail(p.graph, d) for d in p.outer_darts()]


def degree2_root(p: Patch) -> PeripheralRoot:
    """Valence-2 boundary vertices in perimeter order.

    The walk starts at the lowest-labelled boundary vertex and the root
    starts at the first valence-2 vertex reached from there.
    """
    g = p.graph
    verts = [v for v in perimeter(p) if g.degree(v) == 2]
    if not verts:
        raise InvalidPatchError("patch has no valence-2 boundary vertex")
    return PeripheralRoot(tuple(verts))


def plane_from_coordinates(g: Graph, coords: Sequence[Sequence[float]]) -> tuple[PlaneGraph, int]:
    """Embed ``g`` using a straight-line drawing; returns the plane graph and outer face.

    Darts around each vertex are ordered by angle, so the drawing must be
    planar. The outer face is the unique face of negative signed area.
    """
    rotation = []
    for v in range(g.n):
        darts = [2 * e + (0 if g.edges[e][0] == v else 1) for _, e in g.adjacency[v]]
        for _, e in g.adjacency[v]:
            if g.edges[e][0] == g.edges[e][1]:
                raise InvalidGraphError("loops cannot be embedded from coordinates")
        x0, y0 = coords[v]

        def angle(d: int) -> float:
            x1, y1 = coords[dart_head(g, d)]
            return math.atan2(y1 - y0, x1 - x0)

        rotation.append(tuple(sorted(darts, key=angle)))
    plane = PlaneGraph(g, tuple(rotation))
    negative = []
    for f in range(len(plane.faces)):
        pts = [coords[v] for v in plane.face_vertices(f)]
        area = sum(
            pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1]
            for i in range(len(pts))
        )
        if area < 0:
            negative.append(f)
    if len(negative) != 1:
        raise InvalidGraphError(f"drawing is not planar: {len(negative)} clockwise faces")
    return plane, negative[0]


def patch_from_coordinates(g: Graph, coords: Sequence[Sequence[float]]) -> Patch:
    plane, outer = plane_from_coordinates(g, coords)
    return Patch(plane, outer, tuple(tuple(c) for c in coords))


def face_containing(plane: PlaneGraph, edges: Sequence[int]) -> int:
    """Index of the face whose edge walk matches ``edges`` up to rotation.

    Falls back to comparing edge multisets when the walk order differs.
    """
    target = list(edges)
    k = len(target)
    candidates = []
    for f in range(len(plane.faces)):
        fe = plane.face_edges(f)
        if len(fe) != k:
            continue
        if any(fe[i:] + fe[:i] == target for i in range(k)):
            return f
        if sorted(fe) == sorted(target):
            candidates.append(f)
    if len(candidates) == 1:
        return candidates[0]
    raise InvalidGraphError(f"no unique face with edges {target}")


def rotation_from_edge_lists(g: Graph, rot: Mapping[int, Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Convert per-vertex edge-index lists into dart rotations.

    A loop's index appears twice; its first occurrence becomes dart ``2e``.
    """
    rotation = []
    for v in range(g.n):
        darts = []
        used_first: set[int] = set()
        for e in rot.get(v, ()):
            e = int(e)
            if not (0 <= e < g.m):
                raise InvalidGraphError(f"rotation at {v} names unknown edge {e}")
            a, b = g.edges[e]
            if a == b:
                darts.append(2 * e + (1 if e in used_first else 0))
                used_first.add(e)
            elif a == v:
                darts.append(2 * e)
            elif b == v:
                darts.append(2 * e + 1)
            else:
                raise InvalidGraphError(f"edge {e} is not incident to vertex {v}")
        rotation.append(tuple(darts))
    return tuple(rotation)


def rotation_to_edge_lists(p: PlaneGraph) -> dict[int, list[int]]:
    return {v: [d >> 1 for d in darts] for v, darts in enumerate(p.rotation)}
