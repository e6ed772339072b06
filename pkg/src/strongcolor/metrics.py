"""Distance classes, compatible edge orders, and shortest cycles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from .multigraph import MultiGraph


@dataclass(frozen=True)
class CycleDescriptor:
    """A closed walk with distinct vertices; edges[i] joins vertices[i]
    and vertices[(i+1) % k]. A loop is the length-1 cycle, a parallel
    pair the length-2 cycle."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


Anchor = Union[int, CycleDescriptor]


class DisconnectedGraphError(ValueError):
    """An edge-bearing vertex is unreachable from the anchor."""


def bfs_distances(g: MultiGraph, anchor: Anchor) -> list[int]:
    """Distance from every vertex to the anchor (vertex or cycle).

    Isolated vertices keep the sentinel -1; a vertex that has edges but
    cannot be reached raises DisconnectedGraphError, since coloring logic
    anchored here would silently mis-order such edges.
    """
    if isinstance(anchor, CycleDescriptor):
        starts = anchor.vertices
    else:
        starts = (anchor,)
    dist = bfs_from_sources(g, starts)
    _, _, _, nbr_off = g.flat_arrays()
    for v, d in enumerate(dist):
        if d == -1 and nbr_off[v] != nbr_off[v + 1]:
            raise DisconnectedGraphError(f"vertex {v} has edges but is unreachable from the anchor")
    return dist


def bfs_from_sources(g: MultiGraph, starts) -> list[int]:
    """BFS distances from a set of start vertices; unreached stay -1."""
    dist = [-1] * g.vertex_count
    q = deque()
    for s in starts:
        if dist[s] == -1:
            dist[s] = 0
            q.append(s)
    _, _, nbr_flat, nbr_off = g.flat_arrays()
    while q:
        x = q.popleft()
        d = dist[x] + 1
        for y in nbr_flat[nbr_off[x] : nbr_off[x + 1]]:
            if dist[y] == -1:
                dist[y] = d
                q.append(y)
    return dist


def edge_distance_class(g: MultiGraph, dist: list[int], e: int) -> int:
    """An edge sits in the class of its closer endpoint."""
    u, v = g.endpoints(e)
    return min(dist[u], dist[v])


def compatible_order(g: MultiGraph, anchor: Anchor) -> list[int]:
    """All edge ids sorted by nonincreasing distance class from the anchor.

    Ties break by ascending edge id, so the order is fully deterministic.
    Coloring edges in this order guarantees that whenever an edge is
    reached, everything strictly closer to the anchor is still uncolored.
    Bucket sort keeps this linear in the graph size.
    """
    return order_by_distance(g, bfs_distances(g, anchor))


def order_by_distance(g: MultiGraph, dist: list[int]) -> list[int]:
    """Edge ids sorted by nonincreasing distance class, given BFS distances."""
    eu, ev, _, _ = g.flat_arrays()
    maxd = max(dist, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxd + 1)]
    for e in range(g.edge_count):
        du = dist[eu[e]]
        dv = dist[ev[e]]
        buckets[du if du < dv else dv].append(e)
    out: list[int] = []
    for c in range(maxd, -1, -1):
        out.extend(buckets[c])
    return out


def find_shortest_cycle(g: MultiGraph) -> CycleDescriptor | None:
    """Shortest cycle as a descriptor, or None for a forest.

    Conventions: a loop is a 1-cycle and a parallel pair a 2-cycle; both
    are checked before any BFS. For simple graphs this runs one BFS per
    vertex and reconstructs the witness from the minimum closing edge.
    """
    e = g.find_loop()
    if e is not None:
        v, _ = g.endpoints(e)
        return CycleDescriptor((v,), (e,))
    pair = g.find_parallel_pair()
    if pair is not None:
        u, v = g.endpoints(pair[0])
        return CycleDescriptor((u, v), pair)

    edges = g.edges
    inc = g._inc
    n = g.vertex_count
    best: tuple[int, int, int] | None = None  # (length, start, closing edge)

    for s in range(n):
        if best is not None and best[0] == 3:
            break  # girth cannot beat 3 in a simple graph
        dist = [-1] * n
        via = [-1] * n  # edge id used to reach each vertex
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            if best is not None and 2 * dist[x] >= best[0]:
                break  # even a level-up closing edge cannot improve on best
            for f in inc[x]:
                a, b = edges[f]
                y = b if a == x else a
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    via[y] = f
                    q.append(y)
                elif f != via[x] and f != via[y]:
                    cand = dist[x] + dist[y] + 1
                    if best is None or cand < best[0]:
                        best = (cand, s, f)

    if best is None:
        return None
    return _reconstruct_cycle(g, *best)


def _reconstruct_cycle(g: MultiGraph, length: int, s: int, closing: int) -> CycleDescriptor:
    # Re-run the BFS from s and splice the two parent paths of the closing
    # edge together. For the global minimum the paths share only s, so the
    # walk below is a simple cycle.
    edges = g.edges
    inc = g._inc
    n = g.vertex_count
    dist = [-1] * n
    via = [-1] * n
    dist[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for f in inc[x]:
            a, b = edges[f]
            y = b if a == x else a
            if dist[y] == -1:
                dist[y] = dist[x] + 1
                via[y] = f
                q.append(y)

    def path_to_root(x: int) -> tuple[list[int], list[int]]:
        verts, es = [x], []
        while x != s:
            f = via[x]
            a, b = edges[f]
            x = b if a == x else a
            verts.append(x)
            es.append(f)
        return verts, es

    x, y = edges[closing]
    vx, ex = path_to_root(x)  # x .. s
    vy, ey = path_to_root(y)  # y .. s
    verts = vx[::-1] + vy[:-1]  # s .. x, y .. (s excluded)
    cyc_edges = ex[::-1] + [closing] + ey
    if len(set(verts)) != len(verts) or len(verts) != length:
        raise RuntimeError("shortest-cycle reconstruction produced a non-simple walk")
    return CycleDescriptor(tuple(verts), tuple(cyc_edges))


def girth(g: MultiGraph) -> int | None:
    """Length of a shortest cycle; None for forests."""
    c = find_shortest_cycle(g)
    return None if c is None else len(c)
