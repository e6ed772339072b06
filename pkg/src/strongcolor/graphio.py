"""Text formats for graphs and colorings.

Graph files: '#' starts a comment line, the header is `p sec <n> <m>`,
then exactly m lines `e <u> <v>` with 1-based vertex ids. A repeated
endpoint pair is a parallel edge and `e u u` is a loop; edge ids are
assigned 0-based in order of appearance.

Coloring files: one `<edge_id> <color>` pair per line, 0-based edge ids,
colors >= 1, sorted by edge id.
"""

from __future__ import annotations

from .coloring import PartialColoring
from .multigraph import MultiGraph


class GraphFormatError(ValueError):
    """Malformed graph or coloring text; message carries the line number."""


def _content_lines(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield ln, line


def parse_graph(text: str) -> MultiGraph:
    lines = _content_lines(text)
    try:
        ln, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty graph file: missing 'p sec <n> <m>' header")
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "sec":
        raise GraphFormatError(f"line {ln}: expected 'p sec <n> <m>', got {header!r}")
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError:
        raise GraphFormatError(f"line {ln}: non-integer vertex or edge count")
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {ln}: negative vertex or edge count")

    g = MultiGraph(n)
    for ln, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"line {ln}: expected 'e <u> <v>', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {ln}: non-integer endpoint")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {ln}: endpoint out of range 1..{n}")
        g.add_edge(u - 1, v - 1)
    if g.edge_count != m:
        raise GraphFormatError(f"header declares {m} edges, file has {g.edge_count}")
    return g.freeze()


def emit_graph(g: MultiGraph) -> str:
    """Canonical text: header plus edge lines in id order, no comments."""
    out = [f"p sec {g.vertex_count} {g.edge_count}"]
    for u, v in g.edges:
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str, g: MultiGraph, palette_size: int = 22) -> PartialColoring:
    """Read an assignment and bind it to g, enforcing validity per line."""
    seen: set[int] = set()
    pairs: list[tuple[int, int]] = []
    max_color = 0
    for ln, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {ln}: expected '<edge_id> <color>', got {line!r}")
        try:
            e, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {ln}: non-integer field")
        if not (0 <= e < g.edge_count):
            raise GraphFormatError(f"line {ln}: edge id {e} out of range 0..{g.edge_count - 1}")
        if c < 1:
            raise GraphFormatError(f"line {ln}: color must be >= 1")
        if e in seen:
            raise GraphFormatError(f"line {ln}: duplicate edge id {e}")
        seen.add(e)
        pairs.append((e, c))
        max_color = max(max_color, c)

    col = PartialColoring(g, max(palette_size, max_color, 1))
    for e, c in pairs:
        col._set_unchecked(e, c)
    return col


def emit_coloring(col: PartialColoring) -> str:
    out = [f"{e} {c}" for e, c in sorted(col.as_dict().items())]
    return "\n".join(out) + ("\n" if out else "")
