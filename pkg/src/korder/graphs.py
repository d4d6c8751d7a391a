"""Immutable simple graphs on vertices 0..n-1 and the structural queries
(distance, girth, connectivity) everything else is built on.

All operations are pure functions over immutable graphs, so graphs can be
shared freely across threads and memoized without copying.
"""

from __future__ import annotations

from collections import deque
from math import inf
from typing import Iterable, Iterator, Sequence


class GraphConstructionError(ValueError):
    """Bad vertex count, loop edge, or out-of-range endpoint."""


class DisconnectedGraphError(ValueError):
    """An operation that assumes a connected graph got a disconnected one."""


class Graph:
    """Undirected simple graph: no loops, no multi-edges, vertices 0..n-1.

    Adjacency is a tuple of frozensets, so instances are immutable and
    hashable.  Build via :func:`graph_from_edges` or the family
    constructors in :mod:`korder.families`.
    """

    __slots__ = ("n", "adjacency", "edge_count")

    def __init__(self, n: int, adjacency: tuple[frozenset[int], ...], edge_count: int):
        self.n = n
        self.adjacency = adjacency
        self.edge_count = edge_count

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating repeated pairs.

    Raises GraphConstructionError for negative n, loops, or endpoints >= n.
    """
    if n < 0:
        raise GraphConstructionError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphConstructionError(f"loop edge ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u},{v}) out of range for n={n}")
        adj[u].add(v)
        adj[v].add(u)
    m = sum(len(a) for a in adj) // 2
    return Graph(n, tuple(frozenset(a) for a in adj), m)


def degree_sequence(g: Graph) -> list[int]:
    """Sorted (ascending) list of vertex degrees."""
    return sorted(len(g.adjacency[v]) for v in range(g.n))


def is_regular(g: Graph, r: int) -> bool:
    """True iff every vertex has degree exactly r."""
    return all(len(g.adjacency[v]) == r for v in range(g.n))


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphConstructionError(f"vertex {v} out of range for n={g.n}")


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source to every vertex; -1 marks unreachable."""
    _check_vertex(g, source)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path edge count between u and v, or None if unreachable."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    d = bfs_distances(g, u)[v]
    return None if d < 0 else d


def diameter(g: Graph) -> int | float:
    """Largest finite distance; inf when disconnected, 0 for n <= 1."""
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        dv = bfs_distances(g, v)
        if min(dv) < 0:
            return inf
        best = max(best, max(dv))
    return best


def count_at_distance(g: Graph, v: int, d: int) -> int:
    """Number of vertices at exactly distance d from v."""
    _check_vertex(g, v)
    return sum(1 for x in bfs_distances(g, v) if x == d)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(bfs_distances(g, 0)) >= 0


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None when the graph is acyclic.

    Runs a BFS from every vertex; a non-tree edge seen at depth d closes a
    cycle of length dist[u] + dist[w] + 1 through the BFS root, and the
    minimum over all roots is exact.
    """
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def has_triangle(g: Graph) -> bool:
    """True iff some edge's endpoints share a neighbor."""
    for u, v in g.edges():
        if g.adjacency[u] & g.adjacency[v]:
            return True
    return False


def has_square(g: Graph) -> bool:
    """True iff some 4-cycle exists, i.e. two vertices share >= 2 neighbors.

    Checked directly via common neighborhoods, independently of triangle
    detection, so it works on graphs of any girth.
    """
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(g.adjacency[u] & g.adjacency[v]) >= 2:
                return True
    return False


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Number of internally vertex-disjoint s-t paths (Menger, unit flow).

    Vertex splitting: v becomes v_in (2v) and v_out (2v+1) joined by a unit
    arc; each edge becomes two unit arcs out_u -> in_v.  Augment with BFS
    until no path remains.
    """
    cap: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {}

    def add_arc(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        out.setdefault(a, []).append(b)
        out.setdefault(b, []).append(a)

    for v in range(g.n):
        add_arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else g.n)
    for u, v in g.edges():
        add_arc(2 * u + 1, 2 * v, 1)
        add_arc(2 * v + 1, 2 * u, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects the graph or
    reduces it to a single vertex.

    Exact Menger computation: the minimum over non-adjacent pairs of the
    maximum number of internally disjoint paths; n-1 for complete graphs.
    """
    if g.n < 2:
        raise GraphConstructionError("vertex connectivity needs n >= 2")
    if not is_connected(g):
        return 0
    best = g.n - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v not in g.adjacency[u]:
                best = min(best, _max_vertex_disjoint_paths(g, u, v))
                if best == 0:
                    return 0
    return best


def permuted(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: vertex v of g becomes perm[v] in the result."""
    if sorted(perm) != list(range(g.n)):
        raise GraphConstructionError("perm is not a bijection on 0..n-1")
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
