"""Text formats for vertex- and edge-weighted graphs.

Vertex-weighted documents::

    # comments run to end of line
    p gwis <n> <m>
    v <label> <weight>     # one per vertex, weight decimal or p/q
    e <label> <label>      # one per edge

Labels are free-form whitespace-less tokens and map to dense 0-based
indices in declaration order.  Duplicate edges collapse with a warning;
self-loops, unknown labels, negative weights and count mismatches are
errors.  Parsing then serializing reproduces the same graph.

Edge-weighted documents reuse the skeleton: ``v <label>`` (an optional
trailing vertex weight is accepted and ignored) and ``e <a> <b> [<weight>]``
with the edge weight defaulting to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import FormatError, InputError
from .graph import EdgeWeightedGraph, WeightedGraph, as_weight


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph plus provenance for error reporting and round-trips."""

    graph: WeightedGraph
    source: str | None
    header_line: int
    vertex_lines: tuple[int, ...]
    edge_lines: tuple[int, ...]
    warnings: tuple[str, ...]


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_header(fields: list[str], lineno: int) -> tuple[int, int]:
    if len(fields) != 4 or fields[0] != "p" or fields[1] != "gwis":
        raise FormatError("expected header 'p gwis <n> <m>'", lineno)
    try:
        n, m = int(fields[2]), int(fields[3])
    except ValueError as exc:
        raise FormatError("header counts must be integers", lineno) from exc
    if n < 0 or m < 0:
        raise FormatError("header counts must be nonnegative", lineno)
    return n, m


def parse_graph(text: str, source: str | None = None) -> GraphDocument:
    """Parse a vertex-weighted graph document."""
    n = m = -1
    header_line = 0
    labels: list[str] = []
    weights: list = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    vertex_lines: list[int] = []
    edge_lines: list[int] = []
    warnings: list[str] = []

    for lineno, fields in _significant_lines(text):
        kind = fields[0]
        if n < 0:
            n, m = _parse_header(fields, lineno)
            header_line = lineno
            continue
        if kind == "v":
            if len(fields) != 3:
                raise FormatError("vertex line must be 'v <label> <weight>'", lineno)
            label, weight = fields[1], fields[2]
            if label in index:
                raise FormatError(f"duplicate vertex label {label!r}", lineno)
            if len(labels) == n:
                raise FormatError(f"more than the declared {n} vertices", lineno)
            try:
                weights.append(as_weight(weight))
            except InputError as exc:
                raise FormatError(str(exc), lineno) from exc
            index[label] = len(labels)
            labels.append(label)
            vertex_lines.append(lineno)
        elif kind == "e":
            if len(fields) != 3:
                raise FormatError("edge line must be 'e <label> <label>'", lineno)
            a, b = fields[1], fields[2]
            for lab in (a, b):
                if lab not in index:
                    raise FormatError(f"edge references undeclared vertex {lab!r}", lineno)
            if a == b:
                raise FormatError(f"self-loop at {a!r}", lineno)
            u, v = sorted((index[a], index[b]))
            edge_lines.append(lineno)
            if (u, v) in seen_edges:
                warnings.append(f"line {lineno}: duplicate edge {a} {b} collapsed")
                continue
            seen_edges.add((u, v))
            edges.append((u, v))
        else:
            raise FormatError(f"unrecognized line kind {kind!r}", lineno)

    if n < 0:
        raise FormatError("document has no 'p gwis' header", 1)
    if len(labels) != n:
        raise FormatError(f"header declares {n} vertices but {len(labels)} were given", header_line)
    if len(edge_lines) != m:
        raise FormatError(
            f"header declares {m} edges but {len(edge_lines)} edge lines were given",
            header_line,
        )
    return GraphDocument(
        graph=WeightedGraph(weights, edges, labels),
        source=source,
        header_line=header_line,
        vertex_lines=tuple(vertex_lines),
        edge_lines=tuple(edge_lines),
        warnings=tuple(warnings),
    )


def serialize_graph(g: WeightedGraph, comments: Sequence[str] = ()) -> str:
    """Render a graph in the vertex-weighted document format."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"p gwis {g.n} {g.edge_count}")
    lines.extend(f"v {g.label(v)} {g.weight(v)}" for v in range(g.n))
    lines.extend(f"e {g.label(u)} {g.label(v)}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_weighted_graph(text: str, source: str | None = None) -> EdgeWeightedGraph:
    """Parse the edge-weighted variant of the graph format."""
    n = m = -1
    header_line = 0
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int, object]] = []
    seen: set[tuple[int, int]] = set()

    for lineno, fields in _significant_lines(text):
        kind = fields[0]
        if n < 0:
            n, m = _parse_header(fields, lineno)
            header_line = lineno
            continue
        if kind == "v":
            if len(fields) not in (2, 3):
                raise FormatError("vertex line must be 'v <label> [<weight>]'", lineno)
            label = fields[1]
            if label in index:
                raise FormatError(f"duplicate vertex label {label!r}", lineno)
            if len(labels) == n:
                raise FormatError(f"more than the declared {n} vertices", lineno)
            index[label] = len(labels)
            labels.append(label)
        elif kind == "e":
            if len(fields) not in (3, 4):
                raise FormatError("edge line must be 'e <a> <b> [<weight>]'", lineno)
            a, b = fields[1], fields[2]
            for lab in (a, b):
                if lab not in index:
                    raise FormatError(f"edge references undeclared vertex {lab!r}", lineno)
            if a == b:
                raise FormatError(f"self-loop at {a!r}", lineno)
            u, v = sorted((index[a], index[b]))
            if (u, v) in seen:
                raise FormatError(f"duplicate edge {a} {b}", lineno)
            seen.add((u, v))
            try:
                w = as_weight(fields[3]) if len(fields) == 4 else 1
            except InputError as exc:
                raise FormatError(str(exc), lineno) from exc
            edges.append((u, v, w))
        else:
            raise FormatError(f"unrecognized line kind {kind!r}", lineno)

    if n < 0:
        raise FormatError("document has no 'p gwis' header", 1)
    if len(labels) != n:
        raise FormatError(f"header declares {n} vertices but {len(labels)} were given", header_line)
    if len(edges) != m:
        raise FormatError(
            f"header declares {m} edges but {len(edges)} edge lines were given",
            header_line,
        )
    return EdgeWeightedGraph(n, edges, labels)


def serialize_edge_weighted_graph(
    g: EdgeWeightedGraph, comments: Sequence[str] = ()
) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p gwis {g.n} {g.edge_count}")
    lines.extend(f"v {g.label(v)}" for v in range(g.n))
    lines.extend(f"e {g.label(u)} {g.label(v)} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"
