"""Automorphism groups, n-route transitivity, cycle orbits, and disjoint
fixed-length paths.

Groups at this scale are enumerated in full (hundreds of elements), so
orbit questions reduce to direct application of every automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Graph
from .isomorphism import _search_isomorphisms


@dataclass(frozen=True)
class Permutation:
    """Vertex bijection; image[v] is where v goes."""

    image: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.image[v]

    def apply(self, vertices: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.image[v] for v in vertices)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(v) = self(other(v))."""
        return Permutation(tuple(self.image[w] for w in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))


def automorphism_group(g: Graph) -> list[Permutation]:
    """The full automorphism group, sorted by image tuple.

    Backtracking over adjacency-consistent assignments, pruned by the
    distance-profile vertex signature.
    """
    if g.n == 0:
        return [Permutation(())]
    return [Permutation(img) for img in _search_isomorphisms(g, g)]


def enumerate_routes(g: Graph, n: int) -> list[tuple[int, ...]]:
    """All n-routes: directed simple paths of length n (n+1 vertices) with
    a distinguished start.  Each undirected path contributes two routes."""
    if n < 1:
        raise ValueError(f"route length must be >= 1, got {n}")
    routes: list[tuple[int, ...]] = []
    path = [0] * (n + 1)
    on_path = [False] * g.n

    def extend(v: int, depth: int) -> None:
        path[depth] = v
        on_path[v] = True
        if depth == n:
            routes.append(tuple(path))
        else:
            for w in sorted(g.adjacency[v]):
                if not on_path[w]:
                    extend(w, depth + 1)
        on_path[v] = False

    for start in range(g.n):
        extend(start, 0)
    return routes


def is_n_transitive(g: Graph, n: int) -> bool:
    """True iff the automorphism group acts transitively on n-routes."""
    routes = enumerate_routes(g, n)
    if not routes:
        raise ValueError(f"graph has no {n}-route")
    group = automorphism_group(g)
    route_set = set(routes)
    orbit = {perm.apply(routes[0]) for perm in group}
    if not orbit <= route_set:
        raise AssertionError("automorphism mapped a route outside the route set")
    return len(orbit) == len(route_set)


def enumerate_cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All simple cycles of the given length, one canonical tuple per cycle.

    Canonical tuple: starts at the cycle's smallest vertex, and of the two
    traversal directions keeps the one with the smaller second vertex.
    """
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    cycles: list[tuple[int, ...]] = []
    path = [0] * length
    on_path = [False] * g.n

    def extend(v: int, depth: int) -> None:
        path[depth] = v
        on_path[v] = True
        if depth == length - 1:
            if path[0] in g.adjacency[v] and path[1] < path[-1]:
                cycles.append(tuple(path))
        else:
            for w in sorted(g.adjacency[v]):
                if not on_path[w] and w > path[0]:
                    extend(w, depth + 1)
        on_path[v] = False

    for start in range(g.n):
        extend(start, 0)
    return cycles


def normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Canonical tuple of a cyclic vertex list (rotation/reflection-free)."""
    k = len(cycle)
    i = min(range(k), key=lambda j: cycle[j])
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    rev = tuple(cycle[(i - j) % k] for j in range(k))
    return min(fwd, rev)


def cycle_orbit_count(g: Graph, length: int) -> tuple[int, int]:
    """(number of simple cycles of this length, number of orbits under the
    automorphism group).  A cycle is identified with its edge set, i.e. the
    normalized vertex tuple."""
    cycles = enumerate_cycles_of_length(g, length)
    if not cycles:
        return 0, 0
    group = automorphism_group(g)
    remaining = set(cycles)
    orbits = 0
    while remaining:
        seed = min(remaining)
        orbits += 1
        stack = [seed]
        remaining.discard(seed)
        while stack:
            c = stack.pop()
            for perm in group:
                image = normalize_cycle(perm.apply(c))
                if image in remaining:
                    remaining.discard(image)
                    stack.append(image)
    return len(cycles), orbits


def paths_of_length(g: Graph, u: int, v: int, length: int) -> list[tuple[int, ...]]:
    """All simple u-v paths with exactly `length` edges."""
    found: list[tuple[int, ...]] = []
    path = [0] * (length + 1)
    on_path = [False] * g.n

    def extend(x: int, depth: int) -> None:
        path[depth] = x
        if depth == length:
            if x == v:
                found.append(tuple(path))
            return
        on_path[x] = True
        for w in sorted(g.adjacency[x]):
            if w == v:
                if depth + 1 == length:
                    extend(w, depth + 1)
            elif not on_path[w] and depth + 1 < length:
                extend(w, depth + 1)
        on_path[x] = False

    extend(u, 0)
    return found


def disjoint_paths_of_length(g: Graph, u: int, v: int, length: int) -> int:
    """Maximum number of pairwise internally disjoint u-v paths of exactly
    the given length, by exhaustive search over the enumerated paths."""
    if u == v:
        raise ValueError("endpoints must differ")
    paths = paths_of_length(g, u, v, length)
    masks = []
    for p in paths:
        m = 0
        for x in p[1:-1]:
            m |= 1 << x
        masks.append(m)

    best = 0

    def rec(i: int, used: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (len(masks) - i) <= best:
            return
        for j in range(i, len(masks)):
            if masks[j] & used == 0:
                rec(j + 1, used | masks[j], count + 1)

    rec(0, 0, 0)
    return best
