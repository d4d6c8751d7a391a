"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately re-derive answers by different means than the
package (matrix powers for distances, exhaustive cycle enumeration for
realizability, subset removal for connectivity, plain permutation DFS for
automorphisms, row-wise labeled enumeration for the cubic census).
"""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np
import pytest

import korder as K
from korder.graphs import Graph, graph_from_edges
from korder.isomorphism import canonical_form, distance_profiles, is_isomorphic
from korder.symmetry import enumerate_cycles_of_length
from korder.validation import order_respected


def catalog_graphs() -> dict[str, Graph]:
    """The named graphs the checks revolve around, at test-friendly sizes."""
    cat = {
        "K4": K.complete(4),
        "K33": K.complete_bipartite(3, 3),
        "petersen": K.petersen(),
        "heawood": K.heawood(),
        "GP(6,2)": K.generalized_petersen(6, 2),
        "GP(7,3)": K.generalized_petersen(7, 3),
        "GP(8,3)": K.generalized_petersen(8, 3),
        "GP(9,4)": K.generalized_petersen(9, 4),
        "GP(10,4)": K.generalized_petersen(10, 4),
        "star(7,3)": K.star_graph(7, 3),
        "torus(2)": K.torus_graph(2),
        "torus(3)": K.torus_graph(3),
    }
    return cat


@pytest.fixture(scope="session")
def catalog() -> dict[str, Graph]:
    return catalog_graphs()


@pytest.fixture(scope="session")
def connected_catalog(catalog) -> dict[str, Graph]:
    return {name: g for name, g in catalog.items() if K.is_connected(g)}


# ---------------------------------------------------------------------------
# Oracles.
# ---------------------------------------------------------------------------


def oracle_distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs distances by boolean adjacency-matrix powers; -1 means
    unreachable.  Independent of the BFS in the package."""
    n = g.n
    dist = np.full((n, n), -1, dtype=int)
    np.fill_diagonal(dist, 0)
    if n == 0:
        return dist
    adj = np.zeros((n, n), dtype=bool)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = True
    reach = np.eye(n, dtype=bool)
    for d in range(1, n):
        reach = reach @ adj
        newly = reach & (dist < 0)
        dist[newly] = d
        if not newly.any():
            break
    return dist


def oracle_girth(g: Graph) -> int | None:
    """Shortest cycle length via exhaustive cycle enumeration by length."""
    for length in range(3, g.n + 1):
        if enumerate_cycles_of_length(g, length):
            return length
    return None


def oracle_vertex_connectivity(g: Graph) -> int:
    """Brute force over removal subsets of increasing size."""
    def connected_after_removal(removed: set[int]) -> bool:
        keep = [v for v in range(g.n) if v not in removed]
        if len(keep) <= 1:
            return True
        index = {v: i for i, v in enumerate(keep)}
        sub = graph_from_edges(len(keep),
                               [(index[u], index[v]) for u, v in g.edges()
                                if u in index and v in index])
        return K.is_connected(sub)

    for size in range(g.n - 1):
        for removed in combinations(range(g.n), size):
            if not connected_after_removal(set(removed)):
                return size
    return g.n - 1


def oracle_automorphism_count(g: Graph) -> int:
    """Plain lexicographic permutation DFS with pairwise prefix checks; no
    refinement, no profiles."""
    n = g.n
    image = [-1] * n
    used = [False] * n
    count = 0

    def rec(v: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            return
        for w in range(n):
            if used[w]:
                continue
            ok = True
            for x in range(v):
                if (x in g.adjacency[v]) != (image[x] in g.adjacency[w]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                rec(v + 1)
                used[w] = False
                image[v] = -1

    rec(0)
    return count


def all_simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for length in range(3, g.n + 1):
        out.extend(enumerate_cycles_of_length(g, length))
    return out


def oracle_realizable(cycles: list[tuple[int, ...]], seq) -> bool:
    """Ground-truth ordered-cycle existence from an explicit cycle list."""
    return any(order_respected(c, seq) for c in cycles)


def oracle_cubic_reps(n: int) -> list[Graph]:
    """Connected cubic graphs on n vertices up to isomorphism, by a labeled
    row-wise enumeration (vertex 0's neighbors fixed to 1,2,3) deduplicated
    with direct isomorphism tests inside invariant buckets."""
    adj = [set() for _ in range(n)]
    deg = [0] * n
    buckets: dict[tuple, list[Graph]] = {}

    def finish() -> None:
        g = graph_from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
        if not K.is_connected(g):
            return
        cert = (K.girth(g), tuple(sorted(distance_profiles(g))))
        bucket = buckets.setdefault(cert, [])
        for rep in bucket:
            if is_isomorphic(g, rep):
                return
        bucket.append(g)

    def add(u: int, v: int) -> None:
        adj[u].add(v)
        adj[v].add(u)
        deg[u] += 1
        deg[v] += 1

    def remove(u: int, v: int) -> None:
        adj[u].discard(v)
        adj[v].discard(u)
        deg[u] -= 1
        deg[v] -= 1

    def rec(v: int) -> None:
        if v == n:
            finish()
            return
        need = 3 - deg[v]
        if need < 0:
            return
        cands = [w for w in range(v + 1, n) if deg[w] < 3 and w not in adj[v]]
        for chosen in combinations(cands, need):
            for w in chosen:
                add(v, w)
            rec(v + 1)
            for w in chosen:
                remove(v, w)

    for w in (1, 2, 3):
        add(0, w)
    rec(1)
    return [rep for bucket in buckets.values() for rep in bucket]


@pytest.fixture(scope="session")
def cubic_oracle_reps() -> dict[int, list[Graph]]:
    return {n: oracle_cubic_reps(n) for n in (4, 6, 8, 10)}


# ---------------------------------------------------------------------------
# Random graph helpers (seeded; no global state).
# ---------------------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return graph_from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if K.is_connected(g):
            return g


def random_cubic_graph(rng: random.Random, n: int) -> Graph:
    """Random simple 3-regular graph via stub pairing with rejection."""
    assert n % 2 == 0 and n >= 4
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return graph_from_edges(n, sorted(edges))


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


# ---------------------------------------------------------------------------
# Every connected graph on at most 8 vertices (session-cached; built by
# vertex augmentation with canonical-form deduplication).
# ---------------------------------------------------------------------------


def _all_graphs_level(prev: list[Graph]) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for g in prev:
        base_edges = list(g.edges())
        n = g.n + 1
        for mask in range(1 << g.n):
            edges = base_edges + [(v, g.n) for v in range(g.n) if (mask >> v) & 1]
            h = graph_from_edges(n, edges)
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
    return list(seen.values())


@pytest.fixture(scope="session")
def connected_graphs_upto_8() -> dict[int, list[Graph]]:
    """All connected graphs with 3 <= n <= 8, one per isomorphism class."""
    levels = {1: [graph_from_edges(1, [])]}
    for n in range(2, 9):
        levels[n] = _all_graphs_level(levels[n - 1])
    return {n: [g for g in levels[n] if K.is_connected(g)]
            for n in range(3, 9)}
