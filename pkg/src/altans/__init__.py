"""Altans of rooted graphs and patches, boundary-edges codes and Kekulé counts."""

from .altan import (
    AltanResult,
    altan,
    altan_patch,
    black_altan,
    iterated_altan,
    white_altan,
)
from .boundary import (
    BoundaryEdgesCode,
    PatchClass,
    benzenoid_from_code,
    boundary_edges_code,
    classify,
    fullerene_cap_check,
    is_convex,
)
from .builders import (
    NanotubeSpec,
    build_named,
    catalog_benzenoid,
    corannulene_cap,
    cycle,
    half_dodecahedron,
    helicene,
    nanotube,
)
from .errors import (
    AltanError,
    CodeWalkError,
    InvalidGraphError,
    InvalidPatchError,
    LimitExceededError,
    SizeGuardError,
)
from .graph import (
    Bipartition,
    Graph,
    PeripheralRoot,
    RootedGraph,
    bipartition,
    build_graph,
)
from .isomorphism import is_isomorphic
from .kekule import count_perfect_matchings, enumerate_perfect_matchings, nanotube_count, verify_doubling
from .lattice import lattice_embed
from .plane import Patch, PlaneGraph, degree2_root, perimeter, trace_faces

__version__ = "0.1.0"
