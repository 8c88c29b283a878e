"""Text formats for digraphs, realizers and verdicts.

Three graph formats are supported: a line-oriented edge list, a JSON
object, and Graphviz DOT (write-only, with one rank per level).  All
emitters are byte-deterministic for a given input.
"""

from __future__ import annotations

import json
from typing import Any

from .graphs import Arc, Digraph, Vertex
from .realizers import (
    NoAdmissibleChain,
    NonTransitiveConjugate,
    NotRegular,
    Orderable,
    OrderabilityVerdict,
    Realizer,
)

__all__ = [
    "FormatError",
    "GRAPH_FORMATS",
    "format_vertex",
    "graph_from_edgelist",
    "graph_from_json",
    "graph_from_text",
    "graph_to_dot",
    "graph_to_edgelist",
    "graph_to_json",
    "parse_vertex",
    "realizer_to_json",
    "render_graph",
    "verdict_to_json",
]

GRAPH_FORMATS = ("json", "dot", "edgelist")


class FormatError(ValueError):
    """Input text does not parse as the expected format."""


def format_vertex(v: Vertex) -> str:
    return f"{v.position},{v.level}"


def parse_vertex(text: str) -> Vertex:
    parts = text.split(",")
    if len(parts) != 2:
        raise FormatError(f"expected a vertex as 'position,level', got {text!r}")
    try:
        position, level = int(parts[0]), int(parts[1])
        return Vertex(position, level)
    except ValueError as err:
        raise FormatError(f"invalid vertex {text!r}: {err}") from None


def _vertex_json(v: Vertex) -> list[int]:
    return [v.position, v.level]


def _inline(item: Any) -> str:
    """JSON with no newlines, for the innermost vertex and arc lists."""
    return json.dumps(item, separators=(", ", ": "))


def _block(name: str, items: list[str]) -> str:
    if not items:
        return f'"{name}": []'
    body = ",\n    ".join(items)
    return f'"{name}": [\n    {body}\n  ]'


def _vertex_from_json(item: Any) -> Vertex:
    if (
        not isinstance(item, list)
        or len(item) != 2
        or not all(isinstance(x, int) for x in item)
    ):
        raise FormatError(f"expected a vertex as [position, level], got {item!r}")
    try:
        return Vertex(item[0], item[1])
    except ValueError as err:
        raise FormatError(str(err)) from None


def graph_to_json(g: Digraph) -> str:
    vertices = _block("vertices", [_inline(_vertex_json(v)) for v in g.vertices])
    arcs = _block(
        "arcs", [_inline([_vertex_json(t), _vertex_json(h)]) for t, h in g.arcs]
    )
    return "{\n  " + vertices + ",\n  " + arcs + "\n}\n"


def graph_from_json(text: str) -> Digraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"invalid JSON: {err}") from None
    if not isinstance(payload, dict):
        raise FormatError("expected a JSON object with 'vertices' and 'arcs'")
    if "vertices" not in payload or "arcs" not in payload:
        raise FormatError("graph JSON needs both 'vertices' and 'arcs'")
    if not isinstance(payload["vertices"], list) or not isinstance(
        payload["arcs"], list
    ):
        raise FormatError("'vertices' and 'arcs' must be lists")
    vertices = [_vertex_from_json(item) for item in payload["vertices"]]
    arcs = []
    for item in payload["arcs"]:
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"expected an arc as [tail, head], got {item!r}")
        arcs.append((_vertex_from_json(item[0]), _vertex_from_json(item[1])))
    try:
        return Digraph(vertices, arcs)
    except ValueError as err:
        raise FormatError(str(err)) from None


def _level_position(v: Vertex) -> tuple[int, int]:
    return (v.level, v.position)


def _sorted_arcs(g: Digraph) -> list[Arc]:
    return sorted(
        g.arcs, key=lambda a: (_level_position(a[0]), _level_position(a[1]))
    )


def graph_to_edgelist(g: Digraph) -> str:
    """One 'tail -> head' line per arc; isolated vertices as bare lines.

    Arcs come out sorted by level then position, so the text does not
    preserve the vertex construction order of the digraph.
    """
    touched = {v for arc in g.arcs for v in arc}
    lines = [
        f"{format_vertex(t)} -> {format_vertex(h)}" for t, h in _sorted_arcs(g)
    ]
    lines.extend(
        format_vertex(v)
        for v in sorted(
            (v for v in g.vertices if v not in touched), key=_level_position
        )
    )
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


def graph_from_edgelist(text: str) -> Digraph:
    """Parse the edge list format.

    Blank lines are skipped and '#' starts a comment that runs to the
    end of the line.  A line is either 'tail -> head' or a single bare
    vertex.  Vertices are registered in first-appearance order.
    """
    vertices: dict[Vertex, None] = {}
    arcs: list[Arc] = []

    def register(v: Vertex) -> Vertex:
        vertices.setdefault(v, None)
        return v

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if "->" in line:
                lhs, _, rhs = line.partition("->")
                tail = register(parse_vertex(lhs.strip()))
                head = register(parse_vertex(rhs.strip()))
                arcs.append((tail, head))
            else:
                register(parse_vertex(line))
        except FormatError as err:
            raise FormatError(f"line {lineno}: {err}") from None
    try:
        return Digraph(vertices, arcs)
    except ValueError as err:
        raise FormatError(str(err)) from None


def graph_to_dot(g: Digraph) -> str:
    """Graphviz DOT with one rank=same block per level, bottom to top."""
    by_level: dict[int, list[Vertex]] = {}
    for v in g.vertices:
        by_level.setdefault(v.level, []).append(v)
    lines = ["digraph {", "  rankdir=BT;"]
    for level in sorted(by_level):
        row = "; ".join(
            f'"{format_vertex(v)}"'
            for v in sorted(by_level[level], key=_level_position)
        )
        lines.append(f"  {{ rank=same; {row}; }}")
    for t, h in _sorted_arcs(g):
        lines.append(f'  "{format_vertex(t)}" -> "{format_vertex(h)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_graph(g: Digraph, fmt: str) -> str:
    if fmt == "json":
        return graph_to_json(g)
    if fmt == "dot":
        return graph_to_dot(g)
    if fmt == "edgelist":
        return graph_to_edgelist(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def graph_from_text(text: str) -> Digraph:
    """Parse a graph from text, sniffing JSON versus edge list."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(text)
    return graph_from_edgelist(text)


def _chain_line(name: str, chain) -> str:
    return f'"{name}": ' + _inline([_vertex_json(v) for v in chain])


def realizer_to_json(r: Realizer) -> str:
    return (
        "{\n  "
        + _chain_line("chain_x", r.first)
        + ",\n  "
        + _chain_line("chain_y", r.second)
        + "\n}\n"
    )


def verdict_to_json(verdict: OrderabilityVerdict) -> str:
    if isinstance(verdict, Orderable):
        realizer = (
            "{\n    "
            + _chain_line("chain_x", verdict.realizer.first)
            + ",\n    "
            + _chain_line("chain_y", verdict.realizer.second)
            + "\n  }"
        )
        return '{\n  "kind": "orderable",\n  "realizer": ' + realizer + "\n}\n"
    if isinstance(verdict, NotRegular):
        witness = _inline([_vertex_json(v) for v in verdict.witness])
        return '{\n  "kind": "not_regular",\n  "witness": ' + witness + "\n}\n"
    if isinstance(verdict, NoAdmissibleChain):
        flag = json.dumps(verdict.exhaustive)
        return (
            '{\n  "kind": "no_admissible_chain",\n  "exhaustive": ' + flag + "\n}\n"
        )
    if isinstance(verdict, NonTransitiveConjugate):
        cycle = _inline([_vertex_json(v) for v in verdict.cycle])
        flag = json.dumps(verdict.exhaustive)
        return (
            '{\n  "kind": "non_transitive_conjugate",\n  "cycle": '
            + cycle
            + ',\n  "exhaustive": '
            + flag
            + "\n}\n"
        )
    raise TypeError(f"not a verdict: {verdict!r}")
