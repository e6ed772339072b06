"""Exact strong chromatic index for small graphs, plus the greedy bound.

Exponential-time reference machinery: used to validate the constructive
solver on small instances, never on large ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import PartialColoring, greedy_color
from .multigraph import MultiGraph

EDGE_LIMIT = 40


class BoundTooLow(Exception):
    """No valid coloring exists within the requested upper bound."""


@dataclass
class ExactResult:
    chi: int
    witness: PartialColoring


def exact_strong_index(g: MultiGraph, upper_bound: int = 22) -> ExactResult:
    """Minimum number of colors in a valid total strong edge-coloring.

    Backtracking over edges sorted by descending conflict-set size (ties
    by ascending id). Color symmetry is broken canonically: an edge may
    take color c+1 only when c is already in use, so each distinct
    coloring is enumerated once up to palette relabeling.

    Raises BoundTooLow if even upper_bound colors do not suffice, and
    ValueError for graphs beyond EDGE_LIMIT edges.
    """
    m = g.edge_count
    if m > EDGE_LIMIT:
        raise ValueError(f"graph too large for exact search: {m} > {EDGE_LIMIT} edges")
    if upper_bound < 1:
        raise ValueError("upper_bound must be >= 1")
    if m == 0:
        return ExactResult(0, PartialColoring(g, 1))

    conflicts = [sorted(g.conflict_set(e)) for e in range(m)]
    order = sorted(range(m), key=lambda e: (-len(conflicts[e]), e))
    assignment = [0] * m

    def feasible(i: int, k: int, high: int) -> bool:
        if i == m:
            return True
        e = order[i]
        limit = min(k, high + 1)
        for c in range(1, limit + 1):
            ok = True
            for f in conflicts[e]:
                if assignment[f] == c:
                    ok = False
                    break
            if ok:
                assignment[e] = c
                if feasible(i + 1, k, max(high, c)):
                    return True
                assignment[e] = 0
        return False

    for k in range(1, upper_bound + 1):
        if feasible(0, k, 0):
            witness = PartialColoring(g, k)
            for e in range(m):
                witness._set_unchecked(e, assignment[e])
            return ExactResult(k, witness)
    raise BoundTooLow(f"no strong edge-coloring with <= {upper_bound} colors")


def greedy_upper_bound(g: MultiGraph, palette_size: int = 25) -> int:
    """Colors used by least-color greedy over edges in id order.

    With max degree 4 every conflict set has at most 24 members, so a
    25-color palette never runs dry whatever the order.
    """
    col = PartialColoring(g, palette_size)
    greedy_color(col, list(range(g.edge_count)))
    return col.colors_used()
