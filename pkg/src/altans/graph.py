"""Finite undirected multigraphs, peripheral roots and bipartitions.

Vertices are the integers ``0..n-1``. Edges are stored in insertion order as
``(u, v)`` pairs; parallel edges and loops are allowed and every edge keeps
its index, which is what rotation systems and serialized formats refer to.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import InvalidGraphError

BLACK = 0
WHITE = 1


@dataclass(frozen=True)
class Graph:
    """An immutable multigraph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidGraphError(f"negative order {self.n}")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            for w in (u, v):
                if not (0 <= w < self.n):
                    raise InvalidGraphError(
                        f"edge {i} = ({u}, {v}) has endpoint outside 0..{self.n - 1}"
                    )
            adj[u].append((v, i))
            # a loop contributes two incidences to its vertex
            adj[v].append((u, i))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Valence of ``v``; a loop counts twice."""
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def multiplicity(self, u: int, v: int) -> int:
        """Number of edges joining ``u`` and ``v`` (loops when ``u == v``)."""
        return sum(1 for a, b in self.edges if {a, b} == {u, v})

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for w, _ in self.adjacency[u])

    def degree_sequence(self) -> list[int]:
        return sorted((self.degree(v) for v in range(self.n)), reverse=True)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w, _ in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def add(self, new_vertices: int, new_edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a copy extended by ``new_vertices`` vertices and ``new_edges``."""
        return Graph(self.n + new_vertices, self.edges + tuple(tuple(e) for e in new_edges))


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, preserving edge order and multiplicity.

    >>> build_graph(2, [(0, 1), (0, 1)]).m
    2
    """
    return Graph(n, tuple((int(u), int(v)) for u, v in edges))


def cycle_graph(n: int) -> Graph:
    """The cycle ``C_n`` with edges ``(i, i+1 mod n)``; ``n=1`` is a loop."""
    if n < 1:
        raise InvalidGraphError("a cycle needs at least one vertex")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class PeripheralRoot:
    """A cyclically ordered sequence of distinct vertices.

    The stored start and direction are kept exactly as given.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if not self.vertices:
            raise InvalidGraphError("peripheral root must be nonempty")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidGraphError(f"peripheral root has repeated vertices: {self.vertices}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i]

    def rotations(self) -> list[tuple[int, ...]]:
        k = len(self.vertices)
        return [self.vertices[i:] + self.vertices[:i] for i in range(k)]

    def same_cycle(self, other: "PeripheralRoot") -> bool:
        """True if ``other`` is a rotation of this root (same direction)."""
        return other.vertices in self.rotations()


@dataclass(frozen=True)
class RootedGraph:
    """A graph together with a peripheral root, the pair ``(G, S)``."""

    graph: Graph
    root: PeripheralRoot

    def __post_init__(self) -> None:
        if not isinstance(self.root, PeripheralRoot):
            object.__setattr__(self, "root", PeripheralRoot(tuple(self.root)))
        for v in self.root:
            if not (0 <= v < self.graph.n):
                raise InvalidGraphError(f"root vertex {v} is not a vertex of the graph")


@dataclass(frozen=True)
class Bipartition:
    """A proper black/white vertex colouring."""

    colors: tuple[int, ...]

    def color(self, v: int) -> int:
        return self.colors[v]

    def black(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == BLACK]

    def white(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == WHITE]

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-colour ``g`` by BFS, or return ``None`` if it has an odd cycle.

    The smallest vertex of every component is coloured black, so the result
    is deterministic. A loop is an odd cycle.
    """
    colors = [-1] * g.n
    for s in range(g.n):
        if colors[s] >= 0:
            continue
        colors[s] = BLACK
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, _ in g.adjacency[u]:
                if colors[w] < 0:
                    colors[w] = 1 - colors[u]
                    queue.append(w)
                elif colors[w] == colors[u]:
                    return None
    return Bipartition(tuple(colors))


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def root_is_monochromatic(g: Graph, root: Iterable[int]) -> bool:
    """True if ``g`` is bipartite and some 2-colouring puts all of ``root`` in one class.

    For a connected graph the colouring is unique up to swapping colours; for a
    disconnected one each component may be flipped independently, so only
    root vertices sharing a component constrain each other.
    """
    part = bipartition(g)
    if part is None:
        return False
    comp_of = {}
    for idx, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = idx
    seen: dict[int, int] = {}
    for v in root:
        c = comp_of[v]
        if seen.setdefault(c, part.color(v)) != part.color(v):
            return False
    return True
