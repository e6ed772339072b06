"""Partial strong edge-colorings and the greedy coloring step.

Colors are 1-based; 0 is the internal "uncolored" sentinel. A coloring is
valid when no two conflicting edges (distance <= 1 in the line-graph
sense) share a color.
"""

from __future__ import annotations

from array import array

from .multigraph import MultiGraph


class PaletteExhausted(Exception):
    """Greedy found no free color for an edge within the palette."""

    def __init__(self, edge: int, palette_size: int):
        self.edge = edge
        self.palette_size = palette_size
        super().__init__(f"no color in 1..{palette_size} free for edge {edge}")


class ConflictError(ValueError):
    """Attempt to assign a color already used inside the conflict set."""


class PartialColoring:
    """Color assignment for a fixed graph and palette.

    Mutable by design: assign/unassign update in place, copy() snapshots.
    All single-edge operations enforce validity; bulk internal writes used
    by the solver go through _set_unchecked and are re-verified in tests.
    """

    __slots__ = ("graph", "palette_size", "_colors")

    def __init__(self, graph: MultiGraph, palette_size: int):
        if palette_size < 1:
            raise ValueError("palette_size must be >= 1")
        self.graph = graph
        self.palette_size = palette_size
        self._colors = [0] * graph.edge_count

    def copy(self) -> PartialColoring:
        dup = PartialColoring.__new__(PartialColoring)
        dup.graph = self.graph
        dup.palette_size = self.palette_size
        dup._colors = list(self._colors)
        return dup

    def color_of(self, e: int) -> int | None:
        c = self._colors[e]
        return c if c else None

    def is_colored(self, e: int) -> bool:
        return self._colors[e] != 0

    def is_total(self) -> bool:
        return all(self._colors)

    def uncolored_edges(self) -> list[int]:
        return [e for e, c in enumerate(self._colors) if c == 0]

    def colors_used(self) -> int:
        mask = 0
        for c in self._colors:
            mask |= 1 << c
        return (mask >> 1).bit_count()

    def colored_conflicts(self, e: int) -> set[int]:
        """Colored members of e's conflict set."""
        colors = self._colors
        return {f for f in self.graph.conflict_set(e) if colors[f]}

    def available_colors(self, e: int) -> set[int]:
        """Palette colors not used on any edge conflicting with e."""
        if self._colors[e]:
            raise ValueError(f"edge {e} is already colored")
        colors = self._colors
        used = {colors[f] for f in self.graph.conflict_set(e)}
        return {c for c in range(1, self.palette_size + 1) if c not in used}

    def assign(self, e: int, c: int) -> None:
        if not (1 <= c <= self.palette_size):
            raise ValueError(f"color {c} outside palette 1..{self.palette_size}")
        if self._colors[e]:
            raise ValueError(f"edge {e} is already colored")
        colors = self._colors
        for f in self.graph.conflict_set(e):
            if colors[f] == c:
                raise ConflictError(f"color {c} already on conflicting edge {f} (assigning edge {e})")
        colors[e] = c

    def unassign(self, e: int) -> None:
        self._colors[e] = 0

    def _set_unchecked(self, e: int, c: int) -> None:
        self._colors[e] = c

    def as_dict(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self._colors) if c}


def greedy_color(
    col: PartialColoring,
    order: list[int],
    *,
    telemetry=None,
    max_conflict_colors: int | None = None,
    max_color: int | None = None,
) -> PartialColoring:
    """Assign each edge in order the least color free in its conflict set.

    Edges in `order` must be uncolored. Raises PaletteExhausted when an
    edge has no free color. The two optional bounds turn counting claims
    into checks: max_conflict_colors caps the number of distinct colors
    seen among colored conflicting edges, max_color caps the assigned
    color; violations raise through telemetry.check.

    Palettes are capped at 62 colors so color masks fit machine words;
    that is far above the 25 any greedy order can need at max degree 4.

    Args:
        col: coloring to extend in place (also returned).
        order: edge ids, typically from metrics.compatible_order.
    """
    g = col.graph
    colors = col._colors
    palette = col.palette_size
    if palette > 62:
        raise ValueError(f"greedy palette capped at 62 colors, got {palette}")
    full = (1 << (palette + 1)) - 2  # bits 1..palette
    check_bound = max_conflict_colors is not None and telemetry is not None
    check_ceiling = max_color is not None and telemetry is not None
    bound_hits = 0
    ceiling_hits = 0

    # Per-vertex color masks make the conflict query cheap: at_v[x] holds
    # the colors on edges at x, so an edge's conflict colors are exactly
    # the OR of at_v over its endpoints and their neighbors. Typed arrays
    # keep the working set contiguous on large graphs.
    eu, ev, nbr_flat, nbr_off = g.flat_arrays()
    at_v = array("q", bytes(8 * g.vertex_count))
    for f, c in enumerate(colors):
        if c:
            bit = 1 << c
            at_v[eu[f]] |= bit
            at_v[ev[f]] |= bit

    try:
        for e in order:
            if colors[e]:
                raise ValueError(f"edge {e} in greedy order is already colored")
            u = eu[e]
            v = ev[e]
            used = at_v[u] | at_v[v]
            for y in nbr_flat[nbr_off[u] : nbr_off[u + 1]]:
                used |= at_v[y]
            if v != u:
                for y in nbr_flat[nbr_off[v] : nbr_off[v + 1]]:
                    used |= at_v[y]
            free = full & ~used
            if check_bound:
                if used.bit_count() > max_conflict_colors:
                    telemetry.check(False, "greedy.conflict-color-bound")
                bound_hits += 1
            if not free:
                raise PaletteExhausted(e, palette)
            c = (free & -free).bit_length() - 1
            if check_ceiling:
                if c > max_color:
                    telemetry.check(False, "greedy.color-ceiling")
                ceiling_hits += 1
            colors[e] = c
            bit = 1 << c
            at_v[u] |= bit
            at_v[v] |= bit
    finally:
        # passed checks are recorded in bulk instead of one call per edge;
        # a failing check above is counted by telemetry.check itself
        if telemetry is not None:
            lab = telemetry.labels
            if bound_hits:
                telemetry.checks += bound_hits
                lab["greedy.conflict-color-bound"] = lab.get("greedy.conflict-color-bound", 0) + bound_hits
            if ceiling_hits:
                telemetry.checks += ceiling_hits
                lab["greedy.color-ceiling"] = lab.get("greedy.color-ceiling", 0) + ceiling_hits
    return col


def verify(col: PartialColoring) -> list[tuple[int, int, int]]:
    """All conflicting same-colored pairs as (e, f, color) with e < f.

    Empty result means the partial coloring is valid. Linear in the edge
    count for bounded-degree graphs.
    """
    g = col.graph
    colors = col._colors
    out = []
    for e in range(g.edge_count):
        c = colors[e]
        if not c:
            continue
        hits = [f for f in g.conflict_set(e) if f > e and colors[f] == c]
        for f in sorted(hits):
            out.append((e, f, c))
    return out
