"""Canonical forms, isomorphism testing, and subgraph embeddings.

Two independent routes to the same question: canonical_form computes a
label-invariant certificate by branch-and-bound over labelings (equal bytes
iff isomorphic), while is_isomorphic runs a direct refinement-guided
mapping search.  The test suite asserts they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .backend import neighbor_masks
from .graphs import Graph, bfs_distances, permuted
from .graphio import graph6_encode


def distance_profile(g: Graph, v: int) -> tuple[int, ...]:
    """Layer sizes of the BFS from v, with the unreachable count appended.

    A cheap label-invariant vertex signature: automorphic vertices always
    share a profile (the converse fails, e.g. on vertex-transitive graphs).
    """
    dist = bfs_distances(g, v)
    far = max(dist)
    layers = [0] * (far + 1)
    unreachable = 0
    for d in dist:
        if d < 0:
            unreachable += 1
        else:
            layers[d] += 1
    return tuple(layers) + (unreachable,)


def distance_profiles(g: Graph) -> list[tuple[int, ...]]:
    return [distance_profile(g, v) for v in range(g.n)]


def _max_labeling(g: Graph) -> list[int]:
    """Vertex order (position -> vertex) maximizing the packed upper
    triangle of the relabeled adjacency matrix, graph6 bit order.

    Column p of the triangle is fully determined when position p is filled,
    and earlier columns dominate later ones, so only candidates achieving
    the locally maximal column need exploring; a global best bound prunes
    across branches.
    """
    n = g.n
    if n == 0:
        return []
    nbr = neighbor_masks(g)
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    order: list[int] = []
    cols: list[int] = []
    cur = [0] * n
    unplaced = set(range(n))

    def rec() -> None:
        nonlocal best_cols, best_perm
        p = len(order)
        if p == n:
            if best_cols is None or cols > best_cols:
                best_cols = cols.copy()
                best_perm = order.copy()
            return
        bound = -1
        if best_cols is not None:
            prefix = best_cols[:p]
            if cols < prefix:
                return
            if cols == prefix:
                bound = best_cols[p]
        maxcol = max(cur[c] for c in unplaced)
        if maxcol < bound:
            return
        for c in sorted(unplaced):
            if cur[c] != maxcol:
                continue
            order.append(c)
            cols.append(maxcol)
            unplaced.discard(c)
            row = nbr[c]
            for w in unplaced:
                cur[w] = (cur[w] << 1) | ((row >> w) & 1)
            rec()
            for w in unplaced:
                cur[w] >>= 1
            unplaced.add(c)
            cols.pop()
            order.pop()

    rec()
    assert best_perm is not None
    return best_perm


def canonical_form(g: Graph) -> bytes:
    """Label-invariant bytes, equal for two graphs iff they are isomorphic.

    Encoded as the graph6 line of the canonically relabeled graph, so the
    canonical representative can be decoded straight back.
    """
    positions = _max_labeling(g)
    label = [0] * g.n
    for pos, v in enumerate(positions):
        label[v] = pos
    return graph6_encode(permuted(g, label)).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    positions = _max_labeling(g)
    label = [0] * g.n
    for pos, v in enumerate(positions):
        label[v] = pos
    return permuted(g, label)


def _mapping_order(g: Graph) -> list[int]:
    """Assignment order for the mapping search: BFS from vertex 0 of each
    component, so nearly every vertex has a previously mapped neighbor."""
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(g.adjacency[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _search_isomorphisms(g1: Graph, g2: Graph, limit: int | None = None
                         ) -> Iterator[tuple[int, ...]]:
    """Yield bijections f with f(g1) = g2, at most `limit` of them."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return
    n = g1.n
    prof1 = distance_profiles(g1)
    prof2 = distance_profiles(g2)
    if sorted(prof1) != sorted(prof2):
        return
    order = _mapping_order(g1)
    image = [-1] * n
    used = [False] * n
    found = 0

    def candidates(u: int) -> Iterator[int]:
        mapped_nbrs = [image[x] for x in g1.adjacency[u] if image[x] >= 0]
        if mapped_nbrs:
            pool = set(g2.adjacency[mapped_nbrs[0]])
            for w in mapped_nbrs[1:]:
                pool &= g2.adjacency[w]
            pool = sorted(pool)
        else:
            pool = range(n)
        for w in pool:
            if used[w] or prof2[w] != prof1[u]:
                continue
            ok = True
            for x in range(n):
                if image[x] >= 0:
                    if (x in g1.adjacency[u]) != (image[x] in g2.adjacency[w]):
                        ok = False
                        break
            if ok:
                yield w

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal found
        if i == n:
            yield tuple(image)
            return
        u = order[i]
        for w in candidates(u):
            image[u] = w
            used[w] = True
            yield from rec(i + 1)
            used[w] = False
            image[u] = -1
            if limit is not None and found >= limit:
                return

    for mapping in rec(0):
        found += 1
        yield mapping
        if limit is not None and found >= limit:
            return


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Refinement-guided mapping search; independent of canonical_form."""
    for _ in _search_isomorphisms(g1, g2, limit=1):
        return True
    return False


def all_isomorphisms(g1: Graph, g2: Graph) -> list[tuple[int, ...]]:
    return sorted(_search_isomorphisms(g1, g2))


@dataclass(frozen=True)
class Embedding:
    """Injective pattern -> host map sending pattern edges to host edges.

    Vertices in degree_exact_set must additionally keep their exact degree
    in the host (a saturation constraint).
    """

    mapping: tuple[int, ...]
    degree_exact_set: frozenset[int]

    def image(self, vertices: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.mapping[v] for v in vertices)


def embedding_ok(pattern: Graph, host: Graph, emb: Embedding) -> bool:
    """Re-validate an embedding against both of its invariants."""
    mapping = emb.mapping
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not (0 <= w < host.n) for w in mapping):
        return False
    for u, v in pattern.edges():
        if not host.has_edge(mapping[u], mapping[v]):
            return False
    for v in emb.degree_exact_set:
        if host.degree(mapping[v]) != pattern.degree(v):
            return False
    return True


def find_embedding(pattern: Graph, host: Graph,
                   degree_exact_set: frozenset[int] | set[int] = frozenset()
                   ) -> Embedding | None:
    """First subgraph embedding of pattern into host, or None.

    Pattern vertices are assigned in decreasing-degree order (ties by id)
    with host candidates tried in ascending id, so the result is
    deterministic.  Host degrees are forward-checked: >= the pattern degree
    everywhere, == for vertices in degree_exact_set.
    """
    degree_exact_set = frozenset(degree_exact_set)
    if pattern.n > host.n:
        return None
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    image = [-1] * pattern.n
    used = [False] * host.n

    def rec(i: int) -> bool:
        if i == pattern.n:
            return True
        p = order[i]
        pdeg = pattern.degree(p)
        for w in range(host.n):
            if used[w]:
                continue
            hdeg = host.degree(w)
            if hdeg < pdeg or (p in degree_exact_set and hdeg != pdeg):
                continue
            if any(image[q] >= 0 and not host.has_edge(w, image[q])
                   for q in pattern.adjacency[p]):
                continue
            image[p] = w
            used[w] = True
            if rec(i + 1):
                return True
            used[w] = False
            image[p] = -1
        return False

    if rec(0):
        return Embedding(tuple(image), degree_exact_set)
    return None
