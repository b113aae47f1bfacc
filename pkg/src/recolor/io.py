"""On-disk formats: DIMACS graphs, JSON colorings and sequences, DOT export.

DIMACS files are 1-indexed; everything else (in memory, coloring and
sequence files) is 0-indexed.
"""

from __future__ import annotations

import json
import logging
from typing import Iterable, Sequence

from .coloring import Coloring, RecoloringSequence, Step
from .errors import InvalidEdge, ParseError, PaletteError, VertexOutOfRange
from .explorer import census
from .graph import Graph, build_graph

log = logging.getLogger(__name__)

_FORMATS = ("edge", "col")


def parse_graph(text: str) -> Graph:
    n = declared_m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in _FORMATS:
                raise ParseError(f"expected 'p edge <n> <m>', got {line!r}", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer header field in {line!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative vertex or edge count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if u == v:
                raise ParseError(f"loop at vertex {u + 1}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"endpoint outside 1..{n}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                log.warning("line %d: duplicate edge %d-%d ignored", lineno, u + 1, v + 1)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' problem line")
    if len(edges) != declared_m:
        raise ParseError(f"header declares {declared_m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except (InvalidEdge, VertexOutOfRange) as exc:
        raise ParseError(str(exc)) from exc


def serialize_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    try:
        obj = json.loads(text)
        k = obj["k"]
        colors = obj["colors"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad coloring file: {exc}") from None
    if not isinstance(k, int) or not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise ParseError("coloring file needs integer 'k' and integer array 'colors'")
    if n is not None and len(colors) != n:
        raise ParseError(f"coloring has {len(colors)} entries, graph has {n} vertices")
    try:
        return Coloring(k, tuple(colors))
    except PaletteError as exc:
        raise ParseError(str(exc)) from None


def serialize_coloring(c: Coloring) -> str:
    return json.dumps({"k": c.k, "colors": list(c.colors)}) + "\n"


def parse_sequence(text: str) -> RecoloringSequence:
    try:
        obj = json.loads(text)
        steps = tuple(Step(s["v"], s["color"]) for s in obj["steps"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad sequence file: {exc}") from None
    if not all(isinstance(x, int) for s in steps for x in s):
        raise ParseError("sequence steps need integer 'v' and 'color'")
    return steps


def serialize_sequence(steps: Sequence[Sequence[int]]) -> str:
    return json.dumps({"steps": [{"v": v, "color": a} for v, a in steps]}) + "\n"


def export_config_dot(g: Graph, k: int, max_states: int | None = None) -> str:
    """DOT rendering of the configuration graph; frozen colorings are drawn filled."""
    cen = census(g, k, max_states)
    frozen = set(cen.frozen_indices().tolist())
    lines = [f"graph config_k{k} {{", "  node [shape=box, fontname=monospace];"]
    for i in range(len(cen)):
        label = "(" + ",".join(str(int(a)) for a in cen.colorings[i]) + ")"
        attrs = f'label="{label}"'
        if i in frozen:
            attrs += ', frozen=true, style=filled, fillcolor="#9ecae1", peripheries=2'
        lines.append(f"  s{i} [{attrs}];")
    src, dst = cen.edges
    for a, b in sorted((min(a, b), max(a, b)) for a, b in zip(src.tolist(), dst.tolist())):
        lines.append(f"  s{a} -- s{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
