"""Exact Kekulé structure (perfect matching) counts.

The counter branches on one vertex at a time over a bitmask of unmatched
vertices and memoises on that mask. A vertex with a single available
neighbour is a forced move; one with none kills the branch. Parallel edges
count as distinct matchings, loops never take part.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Callable

from .altan import iterated_altan
from .errors import LimitExceededError, SizeGuardError
from .graph import Graph, RootedGraph

MAX_COUNT_ORDER = 200
MAX_ENUMERATE_ORDER = 40


def _neighbor_table(g: Graph) -> list[list[tuple[int, int]]]:
    table = []
    for v in range(g.n):
        mult: dict[int, int] = {}
        for w, _ in g.adjacency[v]:
            if w != v:
                mult[w] = mult.get(w, 0) + 1
        table.append(sorted(mult.items()))
    return table


def _pick_min_degree(mask: int, table) -> tuple[int, int]:
    best_v, best_deg = -1, 99
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        deg = 0
        for w, _ in table[v]:
            if mask >> w & 1:
                deg += 1
        if deg < best_deg:
            best_v, best_deg = v, deg
            if deg <= 1:
                break
    return best_v, best_deg


def _pick_first(mask: int, table) -> tuple[int, int]:
    v = (mask & -mask).bit_length() - 1
    return v, sum(1 for w, _ in table[v] if mask >> w & 1)


HEURISTICS: dict[str, Callable] = {"min-degree": _pick_min_degree, "first": _pick_first}


def count_perfect_matchings(g: Graph, heuristic: str = "min-degree") -> int:
    """Number of perfect matchings ``K(g)`` as an exact integer.

    >>> from altans.graph import cycle_graph
    >>> count_perfect_matchings(cycle_graph(6))
    2
    """
    if heuristic not in HEURISTICS:
        raise ValueError(f"unknown heuristic {heuristic!r}; choose from {sorted(HEURISTICS)}")
    if g.n > MAX_COUNT_ORDER:
        raise SizeGuardError(f"order {g.n} exceeds {MAX_COUNT_ORDER} for exact counting")
    if g.n % 2:
        return 0
    table = _neighbor_table(g)
    pick = HEURISTICS[heuristic]
    memo: dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        v, deg = pick(mask, table)
        total = 0
        if deg:
            rest = mask & ~(1 << v)
            for w, mult in table[v]:
                if rest >> w & 1:
                    total += mult * count(rest & ~(1 << w))
        memo[mask] = total
        return total

    limit = sys.getrecursionlimit()
    if limit < g.n + 100:
        sys.setrecursionlimit(g.n + 100)
    return count((1 << g.n) - 1)


def enumerate_perfect_matchings(g: Graph, limit: int = 100_000) -> list[tuple[int, ...]]:
    """All perfect matchings as sorted tuples of edge indices.

    Plain backtracking on the lowest unmatched vertex, independent of the
    counter above.
    """
    if g.n > MAX_ENUMERATE_ORDER:
        raise SizeGuardError(f"order {g.n} exceeds {MAX_ENUMERATE_ORDER} for enumeration")
    out: list[tuple[int, ...]] = []
    if g.n % 2:
        return out
    matched = [False] * g.n
    chosen: list[int] = []

    def extend(start: int) -> None:
        v = start
        while v < g.n and matched[v]:
            v += 1
        if v == g.n:
            out.append(tuple(sorted(chosen)))
            if len(out) > limit:
                raise LimitExceededError(f"more than {limit} perfect matchings")
            return
        matched[v] = True
        for w, e in sorted(g.adjacency[v], key=lambda t: t[1]):
            if w != v and not matched[w]:
                matched[w] = True
                chosen.append(e)
                extend(v + 1)
                chosen.pop()
                matched[w] = False
        matched[v] = False

    extend(0)
    return out


@dataclass(frozen=True)
class DoublingStep:
    j: int
    count: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.count == self.expected

    def as_dict(self) -> dict:
        return {"j": self.j, "count": str(self.count), "expected": str(self.expected), "pass": self.passed}


def verify_doubling(rg: RootedGraph, n: int) -> list[DoublingStep]:
    """Count ``K(A^j(G, S))`` directly for ``j = 0..n`` against ``2^j K(G)``."""
    steps = []
    base = None
    current = iterated_altan(rg, 0)
    for j in range(n + 1):
        if j:
            current = iterated_altan(current.rooted, 1)
        k = count_perfect_matchings(current.graph)
        if base is None:
            base = k
        steps.append(DoublingStep(j, k, base << j))
    return steps


def doubling_report_json(steps: list[DoublingStep]) -> str:
    return json.dumps([s.as_dict() for s in steps])


def nanotube_count(k: int, s: int) -> int:
    """``K`` of the ``(k, s)``-nanotube, counted on the built graph."""
    from .builders import NanotubeSpec, nanotube

    return count_perfect_matchings(nanotube(NanotubeSpec(k, s)).graph)
