"""Isomorphism test for small multigraphs.

Colour refinement on the disjoint union gives comparable vertex classes;
a backtracking search then extends a partial map along a BFS order of the
first graph, checking edge multiplicities against every mapped vertex.
"""
from __future__ import annotations

from collections import Counter, deque

from .errors import SizeGuardError
from .graph import Graph

MAX_ISO_ORDER = 60


def _multiplicities(g: Graph) -> list[dict[int, int]]:
    mult: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u, v in g.edges:
        mult[u][v] = mult[u].get(v, 0) + 1
        if u != v:
            mult[v][u] = mult[v].get(u, 0) + 1
    return mult


def refine_colors(graphs: list[Graph]) -> list[list[int]]:
    """Stable colour refinement run jointly so colours agree across ``graphs``."""
    mults = [_multiplicities(g) for g in graphs]
    colors = [[(g.degree(v), m[v].get(v, 0)) for v in range(g.n)] for g, m in zip(graphs, mults)]
    palette = {c: i for i, c in enumerate(sorted({c for cs in colors for c in cs}))}
    current = [[palette[c] for c in cs] for cs in colors]
    while True:
        sigs = [
            [
                (cs[v], tuple(sorted((cs[w], k) for w, k in m[v].items())))
                for v in range(len(cs))
            ]
            for cs, m in zip(current, mults)
        ]
        palette2 = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        new = [[palette2[s] for s in ss] for ss in sigs]
        if len(palette2) == len({c for cs in current for c in cs}):
            return new
        current = new


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff some bijection of vertices preserves all edge multiplicities."""
    if max(g.n, h.n) > MAX_ISO_ORDER:
        raise SizeGuardError(f"order exceeds {MAX_ISO_ORDER}; use dedicated tooling")
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    if g.n == 0:
        return True
    cg, ch = refine_colors([g, h])
    if Counter(cg) != Counter(ch):
        return False
    mg, mh = _multiplicities(g), _multiplicities(h)

    class_size = Counter(cg)
    order: list[int] = []
    seen = [False] * g.n
    for s in sorted(range(g.n), key=lambda v: (class_size[cg[v]], v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(mg[u], key=lambda x: (class_size[cg[x]], x)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        by_color.setdefault(ch[v], []).append(v)
    fwd: dict[int, int] = {}
    used = [False] * h.n

    def consistent(v: int, c: int) -> bool:
        if mg[v].get(v, 0) != mh[c].get(c, 0):
            return False
        mapped_nb = 0
        for u, k in mg[v].items():
            if u in fwd:
                mapped_nb += 1
                if mh[c].get(fwd[u], 0) != k:
                    return False
        return mapped_nb == sum(1 for w in mh[c] if w != c and used[w])

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        anchor = next((u for u in mg[v] if u in fwd and u != v), None)
        pool = [w for w in mh[fwd[anchor]] if ch[w] == cg[v]] if anchor is not None else by_color[cg[v]]
        for c in pool:
            if used[c] or not consistent(v, c):
                continue
            fwd[v] = c
            used[c] = True
            if search(i + 1):
                return True
            del fwd[v]
            used[c] = False
        return False

    return search(0)
