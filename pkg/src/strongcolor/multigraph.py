"""Undirected multigraphs with loops and parallel edges.

Vertices and edges use dense integer ids; edge ids follow insertion order.
The conflict relation (edges within distance one of each other) is what the
coloring machinery is built on: two edges conflict when they share an
endpoint or are joined by a third edge.
"""

from __future__ import annotations

from array import array
from itertools import accumulate


class MultiGraph:
    """Mutable during construction, then frozen.

    A loop (u == v) counts 2 toward the degree of its vertex. Parallel
    edges are distinct ids with equal endpoint pairs.
    """

    __slots__ = ("vertex_count", "_edges", "_inc", "_frozen", "_nbr", "_flat")

    def __init__(self, vertex_count: int):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        self.vertex_count = vertex_count
        self._edges: list[tuple[int, int]] = []
        self._inc: list[list[int]] = [[] for _ in range(vertex_count)]
        self._frozen = False
        self._nbr: list[list[int]] | None = None
        self._flat: tuple[array, array, array, array] | None = None

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> MultiGraph:
        g = cls(vertex_count)
        for u, v in edges:
            g.add_edge(u, v)
        return g.freeze()

    def add_edge(self, u: int, v: int) -> int:
        """Append an edge and return its id. Loops and duplicates allowed."""
        if self._frozen:
            raise RuntimeError("graph is frozen; build a new one instead")
        n = self.vertex_count
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"vertex id out of range: ({u}, {v})")
        e = len(self._edges)
        self._edges.append((u, v))
        # a loop is appended twice at its vertex so degree == len(inc list)
        self._inc[u].append(e)
        self._inc[v].append(e)
        return e

    def freeze(self) -> MultiGraph:
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Endpoint pairs indexed by edge id. Treat as read-only."""
        return self._edges

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._edges[e]

    def is_loop(self, e: int) -> bool:
        u, v = self._edges[e]
        return u == v

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def incident_edges(self, v: int) -> list[int]:
        """Edge ids at v; a loop appears twice. Treat as read-only."""
        return self._inc[v]

    def neighbor_lists(self) -> list[list[int]]:
        """out[v] lists the far endpoint of each edge at v, in incidence
        order; a loop contributes v itself twice. Cached once frozen."""
        if self._nbr is not None:
            return self._nbr
        nbr: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self._edges:
            nbr[a].append(b)
            nbr[b].append(a)
        if self._frozen:
            self._nbr = nbr
        return nbr

    def flat_arrays(self) -> tuple[array, array, array, array]:
        """Contiguous typed views for hot loops: endpoint arrays (eu, ev)
        indexed by edge id, plus the neighbor lists in compressed form
        (nbr_flat, nbr_off) where v's neighbors occupy
        nbr_flat[nbr_off[v]:nbr_off[v+1]]. Cached once frozen."""
        if self._flat is not None:
            return self._flat
        n = self.vertex_count
        if self._edges:
            us, vs = zip(*self._edges)
            eu = array("i", us)
            ev = array("i", vs)
        else:
            eu = array("i")
            ev = array("i")
        nbr_off = array("i", accumulate((len(lst) for lst in self._inc), initial=0))
        nbr_flat = array("i", bytes(4 * nbr_off[n]))
        fill = list(nbr_off[:n])
        for e, (a, b) in enumerate(self._edges):
            nbr_flat[fill[a]] = b
            fill[a] += 1
            nbr_flat[fill[b]] = a
            fill[b] += 1
        flat = (eu, ev, nbr_flat, nbr_off)
        if self._frozen:
            self._flat = flat
        return flat

    def max_degree(self) -> int:
        return max((len(lst) for lst in self._inc), default=0)

    def min_degree(self) -> int:
        return min((len(lst) for lst in self._inc), default=0)

    def conflict_set(self, e: int) -> set[int]:
        """All edges within distance one of e (e itself excluded).

        This is the set of edges that must avoid e's color: edges sharing
        an endpoint with e, plus edges sharing an endpoint with one of
        those. With max degree 4 the result has at most 24 members.
        """
        edges = self._edges
        inc = self._inc
        out: set[int] = set()
        u, v = edges[e]
        for x in (u, v):
            for f in inc[x]:
                out.add(f)
                a, b = edges[f]
                out.update(inc[a])
                out.update(inc[b])
        out.discard(e)
        return out

    def find_loop(self) -> int | None:
        """Smallest edge id that is a loop, or None."""
        for e, (u, v) in enumerate(self._edges):
            if u == v:
                return e
        return None

    def find_parallel_pair(self) -> tuple[int, int] | None:
        """First (i, j) with i < j sharing both endpoints, by smallest j."""
        seen: dict[tuple[int, int], int] = {}
        for e, (u, v) in enumerate(self._edges):
            key = (u, v) if u <= v else (v, u)
            if key in seen:
                return (seen[key], e)
            seen[key] = e
        return None

    def connected_components(self) -> list[list[int]]:
        """Vertex groups, each sorted ascending, ordered by smallest member."""
        seen = [False] * self.vertex_count
        comps: list[list[int]] = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for f in self._inc[x]:
                    a, b = self._edges[f]
                    y = b if a == x else a
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.vertex_count}, m={self.edge_count})"
