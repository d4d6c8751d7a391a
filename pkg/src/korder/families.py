"""Deterministic constructors for every graph family in the catalog.

Each constructor fixes a documented labeling so downstream checks and the
CLI are reproducible byte-for-byte.  Vertices are 0-based throughout; the
letter labels used in hand-written sources map via PETERSEN_LETTERS and
HEAWOOD_LETTERS.
"""

from __future__ import annotations

from .graphs import Graph, GraphConstructionError, graph_from_edges

# Letter labelings accepted by the CLI: petersen vertex i <-> "abcdefghij"[i],
# heawood vertex i <-> "ABCDEFGHIJKLMN"[i].
PETERSEN_LETTERS = "abcdefghij"
HEAWOOD_LETTERS = "ABCDEFGHIJKLMN"

# Chords that, together with the 14-cycle 0-1-...-13-0, make up the Heawood
# graph in the A..N labeling.
_HEAWOOD_CHORDS = ((0, 9), (1, 6), (2, 11), (3, 8), (4, 13), (5, 10), (7, 12))


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise GraphConstructionError(f"complete graph needs n >= 1, got {n}")
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphConstructionError(f"complete bipartite needs a,b >= 1, got {a},{b}")
    return graph_from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star_graph(n: int, k: int) -> Graph:
    """Circulant on 0..n-1 joining i to (i+k) mod n.

    When 2k == 0 (mod n) the orbit pairs up and the edge count halves
    (e.g. star_graph(6, 3) is a perfect matching).
    """
    if n < 3:
        raise GraphConstructionError(f"star graph needs n >= 3, got {n}")
    if not (1 <= k < n):
        raise GraphConstructionError(f"star graph needs 1 <= k < n, got k={k}")
    return graph_from_edges(n, [(i, (i + k) % n) for i in range(n)])


def generalized_petersen(n: int, k: int) -> Graph:
    """P(n,k): outer n-cycle on 0..n-1, inner star_graph(n,k) on n..2n-1,
    and spokes (i, n+i)."""
    if n < 5:
        raise GraphConstructionError(f"generalized Petersen needs n >= 5, got {n}")
    if not (1 <= k <= (n - 1) // 2):
        raise GraphConstructionError(
            f"generalized Petersen needs 1 <= k <= (n-1)//2, got k={k}"
        )
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return graph_from_edges(2 * n, edges)


def petersen() -> Graph:
    """The Petersen graph with the fixed a..j labeling.

    Outer 5-cycle 0-1-2-3-4, spokes i <-> i+5, inner 5-cycle 5-7-9-6-8-5.
    Identical labeling to generalized_petersen(5, 2).
    """
    return generalized_petersen(5, 2)


def heawood() -> Graph:
    """The Heawood graph with the fixed A..N labeling.

    The 14-cycle 0-1-...-13-0 plus seven chords; isomorphic to the
    point-line incidence graph of the Fano plane.
    """
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += list(_HEAWOOD_CHORDS)
    return graph_from_edges(14, edges)


def fano_incidence() -> Graph:
    """Point-line incidence graph of the Fano plane (independent Heawood
    construction, used to cross-check :func:`heawood`).

    Points 0..6, lines 7..13 where line i contains points {i, i+1, i+3}
    mod 7.
    """
    edges = []
    for i in range(7):
        for p in (i, (i + 1) % 7, (i + 3) % 7):
            edges.append((p, 7 + i))
    return graph_from_edges(14, edges)


def torus_graph(m: int) -> Graph:
    """Honeycomb-on-torus graph: three rows of hexagons, 2m columns.

    Vertex (r, c) with r in {0,1,2} and c in 0..2m-1 gets id 2m*r + c.
    Each row is a 2m-cycle; every vertex carries exactly one vertical edge:
    (0,c)-(1,c) for even c, (1,c)-(2,c) for odd c, and the wrap
    (2,c)-(0,c+1) for even c.  6m vertices, 9m edges, 3-regular.
    """
    if m < 2:
        raise GraphConstructionError(f"torus graph needs m >= 2, got {m}")
    cols = 2 * m

    def vid(r: int, c: int) -> int:
        return cols * r + (c % cols)

    edges = []
    for r in range(3):
        for c in range(cols):
            edges.append((vid(r, c), vid(r, c + 1)))
    for c in range(0, cols, 2):
        edges.append((vid(0, c), vid(1, c)))
        edges.append((vid(1, c + 1), vid(2, c + 1)))
        edges.append((vid(2, c), vid(0, c + 1)))
    return graph_from_edges(6 * m, edges)


# Family ids accepted by the CLI, with the integer parameters each expects.
FAMILY_PARAMS = {
    "complete": ("n",),
    "complete-bipartite": ("a", "b"),
    "petersen": (),
    "star": ("n", "k"),
    "generalized-petersen": ("n", "k"),
    "heawood": (),
    "torus": ("m",),
}


def build_family(name: str, **params: int) -> Graph:
    """Construct a catalog family by id; raises GraphConstructionError on
    unknown names, missing/extra parameters, or out-of-range values."""
    if name not in FAMILY_PARAMS:
        raise GraphConstructionError(f"unknown family {name!r}")
    expected = FAMILY_PARAMS[name]
    if set(params) != set(expected):
        raise GraphConstructionError(
            f"family {name!r} takes parameters {expected}, got {tuple(params)}"
        )
    args = [params[p] for p in expected]
    builders = {
        "complete": complete,
        "complete-bipartite": complete_bipartite,
        "petersen": petersen,
        "star": star_graph,
        "generalized-petersen": generalized_petersen,
        "heawood": heawood,
        "torus": torus_graph,
    }
    return builders[name](*args)


def letters_for(name: str) -> str | None:
    """Letter labeling for a family, if it has a documented one."""
    if name == "petersen":
        return PETERSEN_LETTERS
    if name == "heawood":
        return HEAWOOD_LETTERS
    return None
