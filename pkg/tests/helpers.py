"""Shared builders and reference implementations for the test suite.

The reference functions here are deliberately naive re-implementations of
the library's definitions (path enumeration, assignment enumeration) so
that the optimized code is checked against something independent.
"""

from __future__ import annotations

import random

from strongcolor import MultiGraph


def path(n: int) -> MultiGraph:
    """Path on n vertices (n - 1 edges)."""
    g = MultiGraph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g.freeze()


def cycle(k: int) -> MultiGraph:
    g = MultiGraph(k)
    for i in range(k):
        g.add_edge(i, (i + 1) % k)
    return g.freeze()


def complete(n: int) -> MultiGraph:
    g = MultiGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g.freeze()


def complete_bipartite(a: int, b: int) -> MultiGraph:
    g = MultiGraph(a + b)
    for u in range(a):
        for v in range(b):
            g.add_edge(u, a + v)
    return g.freeze()


def star(leaves: int) -> MultiGraph:
    g = MultiGraph(leaves + 1)
    for i in range(leaves):
        g.add_edge(0, 1 + i)
    return g.freeze()


def hypercube4() -> MultiGraph:
    """4-dimensional hypercube: 4-regular, girth 4, 16 vertices."""
    g = MultiGraph(16)
    for v in range(16):
        for bit in range(4):
            w = v ^ (1 << bit)
            if v < w:
                g.add_edge(v, w)
    return g.freeze()


def triangle_with_loops() -> MultiGraph:
    """Triangle plus one loop per vertex: 4-regular with loops."""
    g = MultiGraph(3)
    for i in range(3):
        g.add_edge(i, (i + 1) % 3)
    for i in range(3):
        g.add_edge(i, i)
    return g.freeze()


def doubled_triangle() -> MultiGraph:
    """Every triangle edge doubled: 4-regular with parallel pairs."""
    g = MultiGraph(3)
    for i in range(3):
        g.add_edge(i, (i + 1) % 3)
        g.add_edge(i, (i + 1) % 3)
    return g.freeze()


def two_loops_one_vertex() -> MultiGraph:
    g = MultiGraph(1)
    g.add_edge(0, 0)
    g.add_edge(0, 0)
    return g.freeze()


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    out = MultiGraph(sum(g.vertex_count for g in graphs))
    base = 0
    for g in graphs:
        for u, v in g.edges:
            out.add_edge(base + u, base + v)
        base += g.vertex_count
    return out.freeze()


def random_multigraph(seed: int, max_n: int = 16, max_m: int = 28) -> MultiGraph:
    """Arbitrary small multigraph with max degree 4, loops and parallels."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    g = MultiGraph(n)
    for _ in range(rng.randint(0, max_m)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        cost_u = 2 if u == v else 1
        if g.degree(u) + cost_u > 4 or (u != v and g.degree(v) >= 4):
            continue
        g.add_edge(u, v)
    return g.freeze()


def brute_conflict_set(g: MultiGraph, e: int) -> set[int]:
    """Edges f != e such that e and f are the end edges of a path with at
    most 3 edges, enumerated directly over edge pairs."""
    out = set()
    for f in range(g.edge_count):
        if f == e:
            continue
        a, b = g.endpoints(e)
        c, d = g.endpoints(f)
        if {a, b} & {c, d}:
            out.add(f)
            continue
        for h in range(g.edge_count):
            x, y = g.endpoints(h)
            if {x, y} & {a, b} and {x, y} & {c, d}:
                out.add(f)
                break
    return out


def conflicting(g: MultiGraph, e: int, f: int) -> bool:
    return f in brute_conflict_set(g, e)


def ref_violations(g: MultiGraph, colors: dict[int, int]) -> list[tuple[int, int]]:
    """Conflicting colored pairs with equal colors, by direct definition."""
    bad = []
    ids = sorted(colors)
    for i, e in enumerate(ids):
        for f in ids[i + 1 :]:
            if colors[e] == colors[f] and conflicting(g, e, f):
                bad.append((e, f))
    return bad


def naive_exact(g: MultiGraph, max_k: int = 8) -> int:
    """Minimum colors by enumerating assignments in insertion order.

    No edge reordering and no availability reasoning, just a depth-first
    walk over all assignments that skips conflicting colors; only the
    first-use canonicalization keeps m <= 8 affordable.
    """
    m = g.edge_count
    assert m <= 8, "enumeration blows up past 8 edges"
    if m == 0:
        return 0
    conf = [brute_conflict_set(g, e) for e in range(m)]
    colors = [-1] * m

    def extend(e: int, used: int, k: int) -> bool:
        if e == m:
            return True
        banned = {colors[f] for f in conf[e]}
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            colors[e] = c
            if extend(e + 1, max(used, c + 1), k):
                return True
        colors[e] = -1
        return False

    for k in range(1, max_k + 1):
        if extend(0, 0, k):
            return k
    raise AssertionError(f"no coloring with <= {max_k} colors")
