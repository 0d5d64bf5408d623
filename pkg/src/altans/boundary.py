"""Boundary-edges codes, convexity and patch classification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .altan import altan_patch
from .errors import InvalidPatchError
from .lattice import code_turns, enclosed_cells, lattice_embed, patch_from_cells, turtle_walk
from .plane import Patch, PlaneGraph, dart_tail, degree2_root

BENZENOID = "benzenoid"
HELICENE = "helicene-non-benzenoid"
FULLERENE = "fullerene-patch"
GENERAL = "general-patch"


def canonical_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation of ``seq``."""
    seq = tuple(seq)
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True)
class BoundaryEdgesCode:
    """Cyclic sequence of edge counts between consecutive valence-3 boundary vertices.

    Stored as its lexicographically smallest rotation. Reflection is not
    factored out; use :meth:`same_up_to_reflection` for that comparison.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(c) for c in self.entries)
        if not entries:
            raise ValueError("boundary-edges code must be nonempty")
        if any(c < 1 for c in entries):
            raise ValueError(f"code entries must be positive: {entries}")
        object.__setattr__(self, "entries", canonical_rotation(entries))

    @classmethod
    def parse(cls, text: str) -> "BoundaryEdgesCode":
        """Parse ``"2,4,3,3,4"``; a comma-free string is read digit by digit."""
        text = text.strip()
        parts = text.split(",") if "," in text else list(text)
        return cls(tuple(int(s) for s in parts if s.strip()))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def perimeter(self) -> int:
        return sum(self.entries)

    def reflected(self) -> "BoundaryEdgesCode":
        return BoundaryEdgesCode(tuple(reversed(self.entries)))

    def reflection_canonical(self) -> tuple[int, ...]:
        return min(self.entries, self.reflected().entries)

    def same_up_to_reflection(self, other: "BoundaryEdgesCode") -> bool:
        return self.reflection_canonical() == other.reflection_canonical()

    @property
    def deficit(self) -> int:
        """Valence-2 minus valence-3 boundary vertices.

        Equals the sum of ``entry - 2`` for codes with a valence-3 vertex. A
        single-entry code is read as a perimeter with no valence-3 vertex, so
        every boundary vertex counts.
        """
        if len(self.entries) == 1:
            return self.entries[0]
        return sum(c - 2 for c in self.entries)

    def is_convex(self) -> bool:
        return is_convex(self)


def is_convex(code: "BoundaryEdgesCode | Iterable[int]") -> bool:
    """True iff no code entry equals 1."""
    entries = code.entries if isinstance(code, BoundaryEdgesCode) else tuple(code)
    return 1 not in entries


def walk_code(valences: Sequence[int]) -> tuple[int, ...]:
    """Raw (uncanonicalised) code of a closed walk given the valence at each vertex."""
    L = len(valences)
    threes = [i for i, d in enumerate(valences) if d == 3]
    if not threes:
        return (L,)
    return tuple((threes[(j + 1) % len(threes)] - threes[j]) % L or L for j in range(len(threes)))


def face_code(plane: PlaneGraph, face: int) -> BoundaryEdgesCode:
    """Code read along any face walk, e.g. the inner rim of a nanotube."""
    g = plane.graph
    return BoundaryEdgesCode(walk_code([g.degree(v) for v in plane.face_vertices(face)]))


def boundary_deficit(p: Patch) -> int:
    """Valence-2 minus valence-3 vertices on the perimeter."""
    g = p.graph
    vals = [g.degree(dart_tail(g, d)) for d in p.outer_darts()]
    return vals.count(2) - vals.count(3)


def boundary_edges_code(p: Patch) -> BoundaryEdgesCode:
    """Code of the perimeter; a perimeter without valence-3 vertices gives its length."""
    g = p.graph
    return BoundaryEdgesCode(walk_code([g.degree(dart_tail(g, d)) for d in p.outer_darts()]))


@dataclass(frozen=True)
class PatchClass:
    kind: str
    pentagons: int
    deficit: int
    convex: bool
    code: BoundaryEdgesCode

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "pentagons": self.pentagons,
            "deficit": self.deficit,
            "convex": self.convex,
            "code": list(self.code.entries),
        }


def classify(p: Patch) -> PatchClass:
    """Classify by interior face lengths; hexagon-only patches by lattice placement."""
    lengths = p.interior_face_lengths()
    code = boundary_edges_code(p)
    pentagons = sum(1 for x in lengths if x == 5)
    if lengths and all(x == 6 for x in lengths):
        kind = BENZENOID if lattice_embed(p) is not None else HELICENE
    elif lengths and all(x in (5, 6) for x in lengths):
        kind = FULLERENE
    else:
        kind = GENERAL
    return PatchClass(kind, pentagons, boundary_deficit(p), code.is_convex(), code)


def benzenoid_from_code(code: "BoundaryEdgesCode | Sequence[int]") -> Patch:
    """Reconstruct the benzenoid with the given code.

    Raises :class:`~altans.errors.CodeWalkError` if the turtle walk does not
    close or crosses itself.
    """
    if not isinstance(code, BoundaryEdgesCode):
        code = BoundaryEdgesCode(tuple(code))
    walk = turtle_walk(code_turns(code.entries))
    patch = patch_from_cells(enclosed_cells(walk))
    back = boundary_edges_code(patch)
    if back != code:
        raise AssertionError(f"round trip mismatch: {code} -> {back}")
    return patch


@dataclass(frozen=True)
class CapReport:
    deficit: int
    pentagons: int
    holds: bool
    altan_pentagons: int
    altan_code: BoundaryEdgesCode
    altan_holds: bool

    def as_dict(self) -> dict:
        return {
            "d": self.deficit,
            "p_count": self.pentagons,
            "holds": self.holds,
            "altan_pentagons": self.altan_pentagons,
            "altan_code": list(self.altan_code.entries),
            "altan_holds": self.altan_holds,
        }


def fullerene_cap_check(p: Patch) -> CapReport:
    """Check ``d + p = 6`` and that the altan is a 6-pentagon patch with code ``2^k``."""
    lengths = p.interior_face_lengths()
    if not all(x in (5, 6) for x in lengths):
        raise InvalidPatchError("not a fullerene patch: interior faces other than 5 and 6")
    code = boundary_edges_code(p)
    if not code.is_convex():
        raise InvalidPatchError(f"patch is not convex: code {code}")
    pentagons = lengths.count(5)
    deficit = boundary_deficit(p)
    k = len(degree2_root(p))
    a = altan_patch(p)
    a_code = boundary_edges_code(a)
    a_pent = a.interior_face_lengths().count(5)
    return CapReport(
        deficit=deficit,
        pentagons=pentagons,
        holds=deficit + pentagons == 6,
        altan_pentagons=a_pent,
        altan_code=a_code,
        altan_holds=a_pent == 6 and a_code.entries == (2,) * k,
    )
