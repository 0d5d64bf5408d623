"""Hexagonal-lattice geometry: turtle walks, benzenoid placement and construction.

Points of the triangular lattice are integer pairs ``(a, b)`` meaning
``a*e0 + b*e1`` with ``e0`` at 0 degrees and ``e1`` at 60 degrees. Points with
``(a - b) % 3 == 0`` are hexagon centres; the others are honeycomb vertices.
Heading ``h`` is the unit step at ``60*h`` degrees. Everything is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import CodeWalkError, InvalidPatchError
from .graph import build_graph
from .plane import Patch, dart_head, dart_tail, plane_from_coordinates

DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

Point = tuple[int, int]


def step(p: Point, h: int) -> Point:
    da, db = DIRS[h % 6]
    return (p[0] + da, p[1] + db)


def direction(p: Point, q: Point) -> int:
    return DIRS.index((q[0] - p[0], q[1] - p[1]))


def cartesian(p: Point) -> tuple[float, float]:
    return (p[0] + p[1] / 2, p[1] * math.sqrt(3) / 2)


def is_center(p: Point) -> bool:
    return (p[0] - p[1]) % 3 == 0


def cell_vertices(c: Point) -> list[Point]:
    """Corners of the hexagon centred at ``c``, counterclockwise."""
    return [step(c, h) for h in range(6)]


def right_cell(p: Point, q: Point) -> Point:
    """Centre of the hexagon to the right of the directed lattice edge ``p -> q``."""
    return step(q, direction(p, q) + 1 + 3)


def left_cell(p: Point, q: Point) -> Point:
    return step(p, direction(p, q) - 2 + 3)


def to_axial(c: Point) -> tuple[int, int]:
    """Axial hex coordinates ``(q, r)`` of a centre; neighbours differ by unit axial steps."""
    r = (c[1] - c[0]) // 3
    return (c[0] + r, r)


def from_axial(q: int, r: int) -> Point:
    return (q - r, q + 2 * r)


def turtle_walk(turns: Sequence[int], start: Point = (1, 0), heading: int = 0) -> list[Point]:
    """Walk one edge per turn, turning by ``turns[i]`` sixths at the vertex reached.

    Returns the visited vertices including the start. Raises
    :class:`CodeWalkError` if the walk does not close with its initial
    heading or revisits a vertex.
    """
    pos = start
    h = heading
    seen = {start}
    points = [start]
    for i, t in enumerate(turns):
        pos = step(pos, h)
        h = (h + t) % 6
        if i == len(turns) - 1:
            break
        if pos in seen:
            raise CodeWalkError(f"walk revisits lattice vertex {pos} at step {i + 1}")
        seen.add(pos)
        points.append(pos)
    if pos != start or h != heading % 6:
        raise CodeWalkError(f"walk does not close: ends at {pos} heading {h}")
    return points


def code_turns(entries: Sequence[int]) -> list[int]:
    """Turn sequence of a boundary-edges code walked clockwise.

    Valence-2 corners turn right (-1), valence-3 vertices turn left (+1); a
    single-entry code has no valence-3 vertex.
    """
    if len(entries) == 1:
        return [-1] * entries[0]
    turns: list[int] = []
    for c in entries:
        turns.extend([-1] * (c - 1))
        turns.append(1)
    return turns


def enclosed_cells(walk: Sequence[Point]) -> set[Point]:
    """Hexagons inside a simple clockwise boundary walk, by flood fill."""
    boundary = set()
    L = len(walk)
    for i in range(L):
        p, q = walk[i], walk[(i + 1) % L]
        boundary.add(frozenset((p, q)))
    cells = {right_cell(walk[i], walk[(i + 1) % L]) for i in range(L)}
    stack = list(cells)
    limit = L * L + 6
    while stack:
        c = stack.pop()
        corners = cell_vertices(c)
        for h in range(6):
            edge = frozenset((corners[h], corners[(h + 1) % 6]))
            if edge in boundary:
                continue
            nb = step(step(c, h), h + 1)
            if nb not in cells:
                cells.add(nb)
                stack.append(nb)
                if len(cells) > limit:
                    raise CodeWalkError("walk does not enclose a finite region on its right")
    return cells


def cells_boundary(cells: Iterable[Point]) -> list[Point]:
    """Clockwise boundary walk of a set of hexagons, from the top-left vertex.

    Raises :class:`CodeWalkError` if the boundary is not one simple cycle
    (holes or pinch points).
    """
    cells = set(cells)
    count: dict[tuple[Point, Point], int] = {}
    for c in cells:
        corners = cell_vertices(c)
        for h in range(6):
            p, q = corners[h], corners[(h + 1) % 6]
            # clockwise orientation has the cell on the right
            count[(q, p)] = count.get((q, p), 0) + 1
    directed = [e for e in count if (e[1], e[0]) not in count]
    succ: dict[Point, Point] = {}
    for p, q in directed:
        if p in succ:
            raise CodeWalkError(f"boundary pinches at lattice vertex {p}")
        succ[p] = q

    def key(p: Point):
        x, y = cartesian(p)
        return (-y, x)

    start = min(succ, key=key)
    walk = [start]
    v = succ[start]
    while v != start:
        walk.append(v)
        v = succ[v]
    if len(walk) != len(directed):
        raise CodeWalkError("cell set has a hole or several boundary components")
    return walk


def patch_from_cells(cells: Iterable[Point]) -> Patch:
    """The benzenoid patch made of the given hexagons.

    Boundary vertices are labelled first, clockwise from the top-left corner,
    then interior vertices top to bottom, left to right. ``coords`` holds the
    lattice point of each vertex.
    """
    cells = sorted(set(cells))
    if not cells:
        raise CodeWalkError("no hexagons")
    for c in cells:
        if not is_center(c):
            raise CodeWalkError(f"{c} is not a hexagon centre")
    walk = cells_boundary(cells)
    points = set()
    edges = set()
    for c in cells:
        corners = cell_vertices(c)
        points.update(corners)
        for h in range(6):
            edges.add(frozenset((corners[h], corners[(h + 1) % 6])))
    on_boundary = set(walk)

    def key(p: Point):
        x, y = cartesian(p)
        return (-y, x)

    order = list(walk) + sorted(points - on_boundary, key=key)
    label = {p: i for i, p in enumerate(order)}
    edge_list = sorted(tuple(sorted((label[p], label[q]))) for p, q in (tuple(e) for e in edges))
    g = build_graph(len(order), edge_list)
    plane, outer = plane_from_coordinates(g, [cartesian(p) for p in order])
    return Patch(plane, outer, tuple(order))


@dataclass(frozen=True)
class LatticePlacement:
    """Lattice point per patch vertex and axial hexagon per interior face."""

    positions: tuple[Point, ...]
    cells: tuple[tuple[int, int], ...]


def lattice_embed(p: Patch) -> Optional[LatticePlacement]:
    """Place a hexagon-only patch on the hexagonal lattice, or ``None`` on overlap.

    The perimeter is walked as a turtle (valence 2 turns right, valence 3
    turns left); interior vertices follow by completing hexagons face by
    face. The placement is rejected when two vertices or two faces land on
    the same lattice vertex or cell.
    """
    g = p.graph
    plane = p.plane
    if any(length != 6 for length in p.interior_face_lengths()):
        raise InvalidPatchError("lattice placement needs hexagonal interior faces")
    darts = p.outer_darts()
    walk = [dart_tail(g, d) for d in darts]
    turns = [-1 if g.degree(dart_head(g, d)) == 2 else 1 for d in darts]
    pos: dict[int, Point] = {}
    at = (1, 0)
    h = 0
    for v, t in zip(walk, turns):
        if v in pos:
            return None
        pos[v] = at
        at = step(at, h)
        h = (h + t) % 6
    if at != (1, 0) or h != 0:
        raise CodeWalkError("perimeter turtle walk does not close")
    if len(set(pos.values())) != len(pos):
        return None

    pending = set(p.interior_faces())
    while pending:
        progressed = False
        for f in sorted(pending):
            fv = plane.face_vertices(f)
            k = len(fv)
            i = next((j for j in range(k) if fv[j] in pos and fv[(j + 1) % k] in pos), None)
            if i is None:
                continue
            a, b = pos[fv[i]], pos[fv[(i + 1) % k]]
            hd = direction(a, b)
            for j in range(2, k):
                hd += 1
                b = step(b, hd)
                v = fv[(i + j) % k]
                if v in pos and pos[v] != b:
                    return None
                pos[v] = b
            pending.discard(f)
            progressed = True
        if not progressed:
            raise InvalidPatchError("interior faces not reachable from the perimeter")
    if len(pos) != g.n or len(set(pos.values())) != g.n:
        return None
    for u, v in g.edges:
        if (pos[v][0] - pos[u][0], pos[v][1] - pos[u][1]) not in DIRS:
            return None
    cells = []
    for f in p.interior_faces():
        d = plane.faces[f][0]
        cells.append(left_cell(pos[dart_tail(g, d)], pos[dart_head(g, d)]))
    if len(set(cells)) != len(cells):
        return None
    return LatticePlacement(tuple(pos[v] for v in range(g.n)), tuple(sorted(to_axial(c) for c in cells)))
