"""JSON and DOT serialization.

JSON layout, keys always in this order when present::

    {"n": 6, "edges": [[0, 1], ...], "rotation": {"0": [0, 5], ...},
     "outer_face": [0, 1, ...], "root": [...],
     "s0": [...], "s1": [...], "cycle_edges": [...], "attachment_edges": [...]}

``rotation`` and ``outer_face`` use edge indices; a loop's index appears
twice in its vertex's rotation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .altan import AltanResult
from .errors import InvalidGraphError
from .graph import Graph, PeripheralRoot, RootedGraph, build_graph
from .plane import (
    Patch,
    PlaneGraph,
    face_containing,
    rotation_from_edge_lists,
    rotation_to_edge_lists,
)

KEY_ORDER = ("n", "edges", "rotation", "outer_face", "root", "s0", "s1", "cycle_edges", "attachment_edges")


@dataclass(frozen=True)
class Structure:
    """Whatever a JSON document describes: a graph, maybe embedded, maybe rooted."""

    graph: Graph
    plane: Optional[PlaneGraph] = None
    patch: Optional[Patch] = None
    root: Optional[PeripheralRoot] = None

    def rooted(self) -> RootedGraph:
        if self.root is None:
            raise InvalidGraphError("structure has no root")
        return RootedGraph(self.graph, self.root)


def to_dict(
    obj: Union[Graph, PlaneGraph, Patch, AltanResult, Structure],
    root: Optional[Sequence[int]] = None,
    altan: Optional[AltanResult] = None,
) -> dict[str, Any]:
    """Serialize a graph-like object; ``altan`` adds the pieces of the last altan step."""
    if isinstance(obj, AltanResult):
        altan, root, obj = obj, obj.root.vertices, obj.graph
    if isinstance(obj, Structure):
        root = root if root is not None else (obj.root.vertices if obj.root else None)
        obj = obj.patch or obj.plane or obj.graph
    out: dict[str, Any] = {}
    if isinstance(obj, Patch):
        g, plane = obj.graph, obj.plane
        out_face = [d >> 1 for d in obj.outer_darts()]
    elif isinstance(obj, PlaneGraph):
        g, plane, out_face = obj.graph, obj, None
    else:
        g, plane, out_face = obj, None, None
    out["n"] = g.n
    out["edges"] = [list(e) for e in g.edges]
    if plane is not None:
        out["rotation"] = {str(v): es for v, es in rotation_to_edge_lists(plane).items()}
    if out_face is not None:
        out["outer_face"] = out_face
    if root is not None:
        out["root"] = list(root)
    if altan is not None:
        out["s0"] = list(altan.s0)
        out["s1"] = list(altan.s1)
        out["cycle_edges"] = list(altan.cycle_edges)
        out["attachment_edges"] = list(altan.attachment_edges)
    return out


def dumps(obj, **kwargs) -> str:
    d = obj if isinstance(obj, dict) else to_dict(obj, **kwargs)
    ordered = {k: d[k] for k in KEY_ORDER if k in d}
    return json.dumps(ordered) + "\n"


def from_dict(d: dict[str, Any]) -> Structure:
    """Parse a JSON document; a rotation plus outer face yields a validated patch."""
    try:
        g = build_graph(int(d["n"]), d["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraphError(f"malformed graph document: {exc}") from exc
    plane = patch = None
    if d.get("rotation") is not None:
        rot = {int(v): es for v, es in d["rotation"].items()}
        plane = PlaneGraph(g, rotation_from_edge_lists(g, rot))
        if d.get("outer_face") is not None:
            patch = Patch(plane, face_containing(plane, d["outer_face"]))
    root = PeripheralRoot(tuple(d["root"])) if d.get("root") else None
    if root is not None:
        RootedGraph(g, root)
    return Structure(g, plane, patch, root)


def loads(text: str) -> Structure:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraphError(f"not valid JSON: {exc}") from exc
    return from_dict(d)


def load(path: Union[str, Path]) -> Structure:
    return loads(Path(path).read_text())


def to_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT: one node statement per vertex, one edge statement per edge."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
