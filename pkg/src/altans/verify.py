"""One-shot checks of every altan, code and Kekulé-count law, used by ``altans verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .altan import adjacent_root_pentagon, altan, altan_patch, iterated_altan, ring_face_lengths
from .boundary import boundary_edges_code, benzenoid_from_code, fullerene_cap_check, is_convex
from .builders import (
    BENZENOID_CELLS,
    NanotubeSpec,
    catalog_benzenoid,
    corannulene_cap,
    cycle,
    half_dodecahedron,
    helicene,
    nanotube,
)
from .graph import Graph, PeripheralRoot, RootedGraph, bipartition, build_graph, root_is_monochromatic
from .kekule import count_perfect_matchings, enumerate_perfect_matchings
from .plane import Patch, degree2_root

SEED = 20151204


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


def rooted_degree2(p: Patch) -> RootedGraph:
    return RootedGraph(p.graph, degree2_root(p))


def random_graph(rng: random.Random, n: int, bipartite: bool, connected: bool = True) -> Graph:
    """Random simple graph: a spanning forest plus extra edges.

    With ``bipartite`` every edge joins the two colour classes of a random
    colouring, so the result is bipartite by construction.
    """
    side = [rng.randrange(2) for _ in range(n)]
    if bipartite:
        side[0], side[-1] = 0, 1

    def allowed(u: int, v: int) -> bool:
        return u != v and (not bipartite or side[u] != side[v])

    edges: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    pieces = 1 if connected else rng.randint(2, 3)
    cut = sorted(rng.sample(range(1, n), pieces - 1)) if pieces > 1 else []
    groups, start = [], 0
    for c in cut + [n]:
        groups.append(order[start:c])
        start = c
    for grp in groups:
        for i in range(1, len(grp)):
            cands = [u for u in grp[:i] if allowed(u, grp[i])]
            if not cands:
                # grp[i] has no edges yet, so moving it to the other side is safe
                side[grp[i]] ^= 1
                cands = list(grp[:i])
            u = rng.choice(cands)
            edges.add((min(u, grp[i]), max(u, grp[i])))
    group_of = {v: gi for gi, grp in enumerate(groups) for v in grp}
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(n), 2)
        if allowed(u, v) and group_of[u] == group_of[v]:
            edges.add((min(u, v), max(u, v)))
    if not bipartite and connected:
        # guarantee an odd cycle: close a triangle on some path u-w-v
        for w in range(n):
            nb = sorted({b if a == w else a for a, b in edges if w in (a, b)})
            if len(nb) >= 2:
                edges.add((nb[0], nb[1]))
                break
    return build_graph(n, sorted(edges))


def random_rooted_corpus(count: int = 200, seed: int = SEED) -> list[RootedGraph]:
    """Rooted graphs of order 4..20, half bipartite, some disconnected.

    Half of the bipartite instances get a root drawn from one colour class.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(4, 20)
        bip = i % 2 == 0
        connected = i % 10 != 4
        g = random_graph(rng, n, bip, connected)
        part = bipartition(g)
        if part is not None and rng.random() < 0.5:
            pool = part.black() if rng.random() < 0.5 else part.white()
        else:
            pool = list(range(n))
        k = rng.randint(1, len(pool))
        root = rng.sample(pool, k)
        out.append(RootedGraph(g, PeripheralRoot(tuple(root))))
    return out


def _catalog_doubling_graphs() -> dict[str, Patch]:
    names = ["benzene", "naphthalene", "anthracene", "phenanthrene"]
    out = {name: catalog_benzenoid(name) for name in names}
    out["corannulene"] = corannulene_cap()
    return out


def check_doubling_law() -> CriterionResult:
    bad = []
    for name, p in _catalog_doubling_graphs().items():
        rg = rooted_degree2(p)
        k0 = count_perfect_matchings(p.graph)
        for j in range(4):
            kj = count_perfect_matchings(iterated_altan(rg, j).graph)
            if kj != (k0 << j):
                bad.append(f"{name} j={j}: {kj} != {k0 << j}")
    return CriterionResult(1, "doubling law K(A^j G) = 2^j K(G), j<=3", not bad, "; ".join(bad) or "20 exact checks")


def check_root_independence(trials: int = 50, seed: int = SEED) -> CriterionResult:
    rng = random.Random(seed + 1)
    p = catalog_benzenoid("naphthalene")
    k0 = count_perfect_matchings(p.graph)
    bad = []
    for t in range(trials):
        size = rng.randint(1, p.graph.n)
        root = rng.sample(range(p.graph.n), size)
        k1 = count_perfect_matchings(altan(RootedGraph(p.graph, PeripheralRoot(tuple(root)))).graph)
        if k1 != 2 * k0:
            bad.append(f"root {root}: {k1}")
    return CriterionResult(2, "root independence on naphthalene (50 roots)", not bad,
                           "; ".join(bad) or f"K(G)={k0}, all altans {2 * k0}")


def check_nanotube_law() -> CriterionResult:
    bad = []
    for k in range(3, 9):
        for s in range(1, 5):
            K = count_perfect_matchings(nanotube(NanotubeSpec(k, s)).graph)
            if K != 2 ** (s + 1):
                bad.append(f"({k},{s}): {K}")
    return CriterionResult(3, "K(nanotube(k,s)) = 2^(s+1), k=3..8, s=1..4", not bad, "; ".join(bad) or "24 exact checks")


def check_cap_counts() -> CriterionResult:
    details = []
    ok = True
    kd = count_perfect_matchings(half_dodecahedron().graph)
    ok &= kd == 0
    details.append(f"half-dodecahedron K={kd}")
    cap = corannulene_cap()
    rg = rooted_degree2(cap)
    counts = [count_perfect_matchings(iterated_altan(rg, j).graph) for j in range(4)]
    ok &= counts == [11 * 2 ** j for j in range(4)]
    details.append(f"corannulene K(A^n)={counts}")
    return CriterionResult(4, "cap counts: 0 and 11*2^n", ok, ", ".join(details))


def check_bipartite_iff(count: int = 200) -> CriterionResult:
    bad = []
    n_bip = 0
    for idx, rg in enumerate(random_rooted_corpus(count)):
        expected = root_is_monochromatic(rg.graph, rg.root)
        a1 = bipartition(altan(rg).graph) is not None
        a3 = bipartition(iterated_altan(rg, 3).graph) is not None
        n_bip += a1
        if a1 != expected:
            bad.append(f"#{idx} altan bipartiteness")
        if a3 != a1:
            bad.append(f"#{idx} iterate")
    return CriterionResult(5, f"A(G,S) bipartite iff G bipartite and S monochromatic ({count} graphs); A^3 ~ A^1",
                           not bad, "; ".join(bad) or f"{n_bip} bipartite altans, {count - n_bip} not")


def is_cycle_in(g: Graph, cyc: tuple[int, ...]) -> bool:
    return len(set(cyc)) == len(cyc) and all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def check_benzenoid_altans() -> CriterionResult:
    bad = []
    for name in BENZENOID_CELLS:
        p = catalog_benzenoid(name)
        rg = rooted_degree2(p)
        res = altan(rg)
        if bipartition(res.graph) is not None:
            bad.append(f"{name}: altan bipartite")
        pent = adjacent_root_pentagon(rg, res)
        if pent is None or not is_cycle_in(res.graph, pent):
            bad.append(f"{name}: no 5-cycle")
        elif not all(p.graph.degree(v) == 2 for v in pent[:2]):
            bad.append(f"{name}: pentagon roots not valence 2")
    return CriterionResult(6, "benzenoid altans non-bipartite with explicit 5-cycle", not bad,
                           "; ".join(bad) or f"{len(BENZENOID_CELLS)} benzenoids")


def _altan_code_structures() -> dict[str, Patch]:
    out = {name: catalog_benzenoid(name) for name in BENZENOID_CELLS}
    out["24334"] = benzenoid_from_code([2, 4, 3, 3, 4])
    out["144144"] = benzenoid_from_code([1, 4, 4, 1, 4, 4])
    out["helicene"] = helicene(6)
    out["corannulene"] = corannulene_cap()
    out["half-dodecahedron"] = half_dodecahedron()
    out["cycle5"] = cycle(5)
    out["nanotube(5,2)"] = nanotube(NanotubeSpec(5, 2))
    return out


def check_boundary_codes() -> CriterionResult:
    bad = []
    if boundary_edges_code(catalog_benzenoid("benzene")).entries != (6,):
        bad.append("benzene code")
    for code, convex in (((2, 4, 3, 3, 4), True), ((1, 4, 4, 1, 4, 4), False)):
        back = boundary_edges_code(benzenoid_from_code(code)).entries
        if back != code or is_convex(back) != convex:
            bad.append(f"{code} -> {back}")
    for name, p in _altan_code_structures().items():
        k = len(degree2_root(p))
        if boundary_edges_code(altan_patch(p)).entries != (2,) * k:
            bad.append(f"{name}: altan code")
    return CriterionResult(7, "boundary codes: (6), 24334/144144 round trip, altan code 2^k", not bad,
                           "; ".join(bad) or "all codes reproduced")


def check_convexity_rings() -> CriterionResult:
    bad = []
    p = benzenoid_from_code([2, 4, 3, 3, 4])
    for step in range(3):
        q = altan_patch(p)
        ring = ring_face_lengths(p, q)
        if not ring or not set(ring) <= {5, 6}:
            bad.append(f"24334 step {step + 1}: ring {ring}")
        p = q
    p = benzenoid_from_code([1, 4, 4, 1, 4, 4])
    ring = ring_face_lengths(p, altan_patch(p))
    if max(ring) < 7:
        bad.append(f"144144 ring {ring}")
    return CriterionResult(8, "convex 24334 gives 5/6 rings x3; 144144 ring has a face >= 7", not bad,
                           "; ".join(bad) or f"144144 ring max {max(ring)}")


def check_cap_law() -> CriterionResult:
    bad = []
    for name, p in (("corannulene", corannulene_cap()), ("half-dodecahedron", half_dodecahedron())):
        rep = fullerene_cap_check(p)
        if not (rep.holds and rep.altan_holds and rep.altan_pentagons == 6):
            bad.append(f"{name}: {rep.as_dict()}")
    return CriterionResult(9, "d + p = 6 and altan has 6 pentagons", not bad, "; ".join(bad) or "both caps")


def oracle_corpus(seed: int = SEED) -> Iterator[tuple[str, Graph]]:
    for name in BENZENOID_CELLS:
        yield name, catalog_benzenoid(name).graph
    yield "corannulene", corannulene_cap().graph
    yield "half-dodecahedron", half_dodecahedron().graph
    yield "benzene-altan", altan(rooted_degree2(catalog_benzenoid("benzene"))).graph
    for k in (3, 4, 5):
        yield f"nanotube({k},1)", nanotube(NanotubeSpec(k, 1)).graph
    rng = random.Random(seed + 2)
    for i in range(60):
        n = rng.randint(2, 20)
        yield f"random#{i}", random_graph(rng, n, bipartite=i % 3 == 0)


def check_oracle_equivalence() -> CriterionResult:
    bad = []
    total = 0
    for name, g in oracle_corpus():
        total += 1
        a = count_perfect_matchings(g)
        b = len(enumerate_perfect_matchings(g))
        if a != b:
            bad.append(f"{name}: {a} vs {b}")
    return CriterionResult(10, "counter agrees with enumeration on order <= 20", not bad,
                           "; ".join(bad) or f"{total} graphs")


CRITERIA: list[Callable[[], CriterionResult]] = [
    check_doubling_law,
    check_root_independence,
    check_nanotube_law,
    check_cap_counts,
    check_bipartite_iff,
    check_benzenoid_altans,
    check_boundary_codes,
    check_convexity_rings,
    check_cap_law,
    check_oracle_equivalence,
]


def run_all() -> list[CriterionResult]:
    return [check() for check in CRITERIA]
