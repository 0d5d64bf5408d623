"""The altan operation on rooted graphs and on patches.

For a rooted graph ``(G, S)`` of order ``n`` with ``|S| = k`` the altan adds
``S0 = n..n+k-1`` and ``S1 = n+k..n+2k-1``, the cycle
``n, n+k, n+1, n+k+1, ..., n+k-1, n+2k-1`` and the spokes ``(s_i, n+i)``.
The new root is ``S1`` in increasing order.

Edge order of the result: the edges of ``G``, then the ``2k`` cycle edges
``(n+i, n+k+i), (n+k+i, n+i+1)`` for ``i = 0..k-1``, then the ``k`` spokes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidGraphError, InvalidPatchError
from .graph import (
    BLACK,
    WHITE,
    Graph,
    PeripheralRoot,
    RootedGraph,
    bipartition,
)
from .plane import Patch, PlaneGraph, degree2_root, dart_tail


@dataclass(frozen=True)
class AltanResult:
    """The rooted altan ``(G1, S1)`` plus the pieces added to build it."""

    rooted: RootedGraph
    s0: tuple[int, ...]
    s1: tuple[int, ...]
    cycle_edges: tuple[int, ...]
    attachment_edges: tuple[int, ...]

    @property
    def graph(self) -> Graph:
        return self.rooted.graph

    @property
    def root(self) -> PeripheralRoot:
        return self.rooted.root


def _altan_edges(n: int, root: Sequence[int]) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    k = len(root)
    cycle = []
    for i in range(k):
        cycle.append((n + i, n + k + i))
        cycle.append((n + k + i, n + (i + 1) % k))
    spokes = [(s, n + i) for i, s in enumerate(root)]
    return cycle, spokes


def altan(rg: RootedGraph) -> AltanResult:
    """Apply the altan operation once.

    >>> from altans.graph import cycle_graph
    >>> r = altan(RootedGraph(cycle_graph(6), PeripheralRoot(tuple(range(6)))))
    >>> r.graph.n, r.graph.m, r.root.vertices
    (18, 24, (12, 13, 14, 15, 16, 17))
    """
    g = rg.graph
    n, m, k = g.n, g.m, len(rg.root)
    cycle, spokes = _altan_edges(n, rg.root.vertices)
    g1 = g.add(2 * k, cycle + spokes)
    s1 = tuple(range(n + k, n + 2 * k))
    return AltanResult(
        rooted=RootedGraph(g1, PeripheralRoot(s1)),
        s0=tuple(range(n, n + k)),
        s1=s1,
        cycle_edges=tuple(range(m, m + 2 * k)),
        attachment_edges=tuple(range(m + 2 * k, m + 3 * k)),
    )


def iterated_altan(rg: RootedGraph, times: int) -> AltanResult:
    """``A^times(G, S)``, re-rooting at the previous ``S1`` each step."""
    if times < 0:
        raise ValueError("iteration count must be nonnegative")
    result = AltanResult(rg, (), rg.root.vertices, (), ())
    for _ in range(times):
        result = altan(result.rooted)
    return result


def color_root(p: Patch, color: int) -> PeripheralRoot:
    """Valence-2 boundary vertices of one colour class, in perimeter order."""
    part = bipartition(p.graph)
    if part is None:
        raise InvalidGraphError("patch graph is not bipartite")
    verts = tuple(v for v in degree2_root(p) if part.color(v) == color)
    if not verts:
        name = "black" if color == BLACK else "white"
        raise InvalidGraphError(f"no {name} valence-2 boundary vertex")
    return PeripheralRoot(verts)


def black_altan(p: Patch) -> AltanResult:
    return altan(RootedGraph(p.graph, color_root(p, BLACK)))


def white_altan(p: Patch) -> AltanResult:
    return altan(RootedGraph(p.graph, color_root(p, WHITE)))


def _check_boundary_root(p: Patch, root: Sequence[int]) -> None:
    g = p.graph
    walk = [dart_tail(g, d) for d in p.outer_darts()]
    pos = {v: i for i, v in enumerate(walk)}
    for v in root:
        if v not in pos:
            raise InvalidPatchError(f"root vertex {v} is not on the perimeter")
        if g.degree(v) != 2:
            raise InvalidPatchError(f"root vertex {v} has valence {g.degree(v)}, need 2")
    # root must follow the perimeter direction, wrapping at most once
    idx = [pos[v] for v in root]
    descents = sum(1 for a, b in zip(idx, idx[1:] + idx[:1]) if b <= a)
    if len(root) > 1 and descents != 1:
        raise InvalidPatchError("root is not in perimeter order")


def gap_lengths(p: Patch, root: Optional[Sequence[int]] = None) -> list[int]:
    """Perimeter distances from each root vertex to the next one."""
    if root is None:
        root = degree2_root(p).vertices
    walk = [dart_tail(p.graph, d) for d in p.outer_darts()]
    pos = {v: i for i, v in enumerate(walk)}
    L = len(walk)
    k = len(root)
    gaps = []
    for i in range(k):
        t = (pos[root[(i + 1) % k]] - pos[root[i]]) % L
        gaps.append(t if t else L)
    return gaps


def altan_patch(p: Patch, root: Optional[Sequence[int]] = None) -> Patch:
    """Embedding-aware altan of a patch.

    ``root`` defaults to all valence-2 boundary vertices; an explicit root
    must consist of valence-2 boundary vertices in perimeter order. The new
    cycle bounds the new outer face and the spokes run through the old outer
    face, so the new faces form a ring around ``p``.
    """
    if root is None:
        root = degree2_root(p).vertices
    root = tuple(root)
    if not root:
        raise InvalidPatchError("empty root")
    _check_boundary_root(p, root)
    g = p.graph
    plane = p.plane
    n, m, k = g.n, g.m, len(root)

    walk = p.outer_darts()
    leaving = {dart_tail(g, d): j for j, d in enumerate(walk)}
    rotation = [list(r) for r in plane.rotation]
    for i, s in enumerate(root):
        j = leaving[s]
        x = walk[j - 1] ^ 1  # dart from s back along the incoming boundary edge
        spoke = 2 * (m + 2 * k + i)
        r = rotation[s]
        r.insert(r.index(x), spoke)

    for i in range(k):
        out_next = 2 * (m + 2 * i)
        in_prev = 2 * (m + (2 * i - 1) % (2 * k)) + 1
        spoke_end = 2 * (m + 2 * k + i) + 1
        rotation.append([out_next, in_prev, spoke_end])
    for i in range(k):
        rotation.append([2 * (m + 2 * i + 1), 2 * (m + 2 * i) + 1])

    cycle, spokes = _altan_edges(n, root)
    g1 = g.add(2 * k, cycle + spokes)
    new_plane = PlaneGraph(g1, tuple(tuple(r) for r in rotation))
    return Patch(new_plane, new_plane.face_of_dart[2 * m])


def ring_face_lengths(old: Patch, new: Patch) -> list[int]:
    """Lengths of the interior faces of ``new`` that touch vertices added to ``old``."""
    n = old.graph.n
    lengths = []
    for f in new.interior_faces():
        if any(v >= n for v in new.plane.face_vertices(f)):
            lengths.append(new.plane.face_length(f))
    return lengths


def iterated_altan_patch(p: Patch, times: int) -> list[Patch]:
    """``[p, A(p), A^2(p), ...]`` up to ``A^times(p)``, each with its full degree-2 root."""
    out = [p]
    for _ in range(times):
        out.append(altan_patch(out[-1]))
    return out


def adjacent_root_pentagon(rg: RootedGraph, result: AltanResult) -> Optional[tuple[int, ...]]:
    """A 5-cycle ``u, v, v', w', u'`` through adjacent consecutive roots ``u, v``.

    ``u' = n+i`` and ``v' = n+i+1`` are their attachment vertices and ``w'`` is
    the cycle vertex between them. Returns ``None`` if no two cyclically
    consecutive root vertices are adjacent in the original graph.
    """
    g = rg.graph
    n, k = g.n, len(rg.root)
    if k < 2:
        return None
    for i in range(k):
        u, v = rg.root[i], rg.root[(i + 1) % k]
        if g.has_edge(u, v):
            return (u, v, n + (i + 1) % k, n + k + i, n + i)
    return None
