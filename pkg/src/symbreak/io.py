"""JSON interchange for graphs and colorings, and DOT export."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping, Optional, Union

from .graph import RootedGraph

PathLike = Union[str, Path]


class FormatError(ValueError):
    """Input file does not follow the expected JSON layout."""


def graph_to_json(g: RootedGraph) -> dict:
    out = {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}
    if g.root is not None:
        out["root"] = g.root
    return out


def graph_from_json(data) -> RootedGraph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise FormatError("graph JSON needs 'vertices' and 'edges'")
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise FormatError("'vertices' must be an array of strings")
    edges = data["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise FormatError("'edges' must be an array of 2-element arrays")
    root = data.get("root")
    if root is not None and not isinstance(root, str):
        raise FormatError("'root' must be a string")
    return RootedGraph.from_edges(verts, [tuple(e) for e in edges], root)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def write_json(path: PathLike, obj) -> None:
    Path(path).write_text(dumps(obj))


def read_json(path: PathLike):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None


def load_graph(path: PathLike) -> RootedGraph:
    return graph_from_json(read_json(path))


def save_graph(path: PathLike, g: RootedGraph) -> None:
    write_json(path, graph_to_json(g))


def coloring_from_json(data):
    from .breaking import Coloring

    if not isinstance(data, dict) or not isinstance(data.get("labels"), dict):
        raise FormatError("coloring JSON needs a 'labels' object")
    try:
        return Coloring.from_json(data)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad coloring: {exc}") from None


def to_dot(g: RootedGraph, labels: Optional[Mapping[str, int]] = None, name: str = "G") -> str:
    """DOT text; black-labeled vertices are filled black, white ones white, others gray."""
    fill = {0: "white", 1: "black"}
    lines = [f"graph {name} {{", "  node [style=filled, shape=circle];"]
    for v in g.vertices:
        lab = None if labels is None else labels.get(v)
        color = fill.get(lab, "gray") if lab is not None else "gray"
        font = "white" if color == "black" else "black"
        attrs = [f'fillcolor="{color}"', f'fontcolor="{font}"']
        if v == g.root:
            attrs.append("penwidth=3")
        lines.append(f'  "{v}" [{", ".join(attrs)}];')
    for a, b in g.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
