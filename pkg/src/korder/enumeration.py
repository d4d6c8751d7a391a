"""Exhaustive generation of connected cubic graphs up to isomorphism, with
a girth filter, plus census classification and JSONL persistence.

The generator saturates the smallest deficient vertex first, introduces
fresh vertices in index order, and prunes edges that would close a short
cycle.  Every isomorphism class of connected cubic graphs has at least one
labeling consistent with that discipline, and each labeled graph is emitted
at most once; duplicates across labelings are removed via canonical forms.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Callable, Iterator

from .graphs import Graph, girth, graph_from_edges, is_regular
from .graphio import graph6_decode, graph6_encode
from .isomorphism import canonical_form
from .orderedness import is_hamiltonian, is_k_ordered, is_k_ordered_hamiltonian

_SUPPORTED = range(4, 17)


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class in a census; flags are tri-state
    (True/False/None-unchecked) and only ever set via census_classify."""

    graph6: str
    n: int
    girth: int
    hamiltonian: bool | None = None
    four_ordered: bool | None = None
    four_ordered_hamiltonian: bool | None = None

    def graph(self) -> Graph:
        return graph6_decode(self.graph6)


class CensusFileError(ValueError):
    """Census file is truncated, tampered with, or malformed."""


def _labeled_cubic(n: int, min_girth: int, emit: Callable[[list[int]], None]) -> None:
    """Emit every labeled connected cubic graph (as adjacency bitmasks)
    whose labeling is discovery-consistent, one exactly once."""
    adj = [0] * n
    deg = [0] * n
    max_dist = min_girth - 2  # an (a,b) edge closes a cycle of dist(a,b)+1

    def creates_short_cycle(a: int, b: int) -> bool:
        if max_dist < 1:
            return False
        visited = 1 << a
        frontier = visited
        for _ in range(max_dist):
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= adj[low.bit_length() - 1]
                m ^= low
            if (reach >> b) & 1:
                return True
            frontier = reach & ~visited
            visited |= frontier
            if not frontier:
                break
        return False

    def rec(introduced: int) -> None:
        u = -1
        for v in range(introduced):
            if deg[v] < 3:
                u = v
                break
        if u == -1:
            if introduced == n:
                emit(adj)
            return
        need = 3 - deg[u]
        existing = [v for v in range(u + 1, introduced)
                    if deg[v] < 3 and not (adj[u] >> v) & 1]
        for take in range(min(need, len(existing)), -1, -1):
            fresh = need - take
            if introduced + fresh > n:
                continue
            for chosen in combinations(existing, take):
                partners = list(chosen) + list(range(introduced, introduced + fresh))
                added = []
                ok = True
                for v in partners:
                    if v < introduced and creates_short_cycle(u, v):
                        ok = False
                        break
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                    deg[u] += 1
                    deg[v] += 1
                    added.append(v)
                if ok:
                    rec(introduced + fresh)
                for v in added:
                    adj[u] &= ~(1 << v)
                    adj[v] &= ~(1 << u)
                    deg[u] -= 1
                    deg[v] -= 1

    rec(1)


def _masks_to_graph(n: int, adj: list[int]) -> Graph:
    edges = []
    for u in range(n):
        m = adj[u]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if u < v:
                edges.append((u, v))
    return graph_from_edges(n, edges)


def enumerate_cubic(n: int, min_girth: int = 3) -> list[CensusEntry]:
    """All connected 3-regular graphs on n vertices with girth >= min_girth,
    one representative per isomorphism class, sorted by canonical form.

    Every returned graph is re-validated (connected, cubic, girth) rather
    than trusted from the generator.
    """
    if n % 2:
        raise ValueError(f"cubic graphs need an even vertex count, got {n}")
    if n not in _SUPPORTED:
        raise ValueError(f"supported range is 4 <= n <= 16, got {n}")
    if min_girth < 3:
        raise ValueError(f"min_girth must be >= 3, got {min_girth}")

    seen: dict[bytes, Graph] = {}

    def emit(adj: list[int]) -> None:
        g = _masks_to_graph(n, adj)
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g

    _labeled_cubic(n, min_girth, emit)

    entries = []
    for key in sorted(seen):
        g = graph6_decode(key.decode("ascii"))
        gg = girth(g)
        if not (is_regular(g, 3) and gg is not None and gg >= min_girth):
            raise AssertionError("generator produced an invalid graph")
        entries.append(CensusEntry(graph6=key.decode("ascii"), n=n, girth=gg))
    return entries


def _flag(holds: bool | None) -> bool | None:
    return holds


def census_classify(entries: list[CensusEntry], k: int = 4,
                    node_limit: int | None = None) -> list[CensusEntry]:
    """Fill the hamiltonian / k-ordered / k-ordered-hamiltonian flags.

    Verdicts come from the orderedness searches; an inconclusive search
    (node limit) leaves the corresponding flag None.
    """
    out = []
    for entry in entries:
        g = entry.graph()
        ham, _ = is_hamiltonian(g)
        ordv = is_k_ordered(g, k, node_limit=node_limit)
        hamv = is_k_ordered_hamiltonian(g, k, node_limit=node_limit)
        out.append(replace(entry,
                           hamiltonian=ham,
                           four_ordered=_flag(ordv.holds),
                           four_ordered_hamiltonian=_flag(hamv.holds)))
    return out


def _entry_to_json(entry: CensusEntry) -> str:
    return json.dumps({
        "graph6": entry.graph6,
        "n": entry.n,
        "girth": entry.girth,
        "hamiltonian": entry.hamiltonian,
        "four_ordered": entry.four_ordered,
        "four_ordered_hamiltonian": entry.four_ordered_hamiltonian,
    }, sort_keys=True)


def census_to_jsonl(entries: list[CensusEntry]) -> str:
    """Newline-delimited JSON with a trailing checksum line, so partially
    written files are detectable."""
    lines = [_entry_to_json(e) for e in entries]
    body = "".join(line + "\n" for line in lines)
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    trailer = json.dumps({"checksum": digest, "entries": len(entries)},
                         sort_keys=True)
    return body + trailer + "\n"


def census_from_jsonl(text: str) -> list[CensusEntry]:
    lines = text.splitlines()
    if not lines:
        raise CensusFileError("empty census file")
    try:
        trailer = json.loads(lines[-1])
    except json.JSONDecodeError as exc:
        raise CensusFileError(f"bad trailer line: {exc}") from exc
    if "checksum" not in trailer:
        raise CensusFileError("missing checksum trailer (file truncated?)")
    body = "".join(line + "\n" for line in lines[:-1])
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if digest != trailer["checksum"]:
        raise CensusFileError("checksum mismatch (file truncated or edited)")
    if trailer.get("entries") != len(lines) - 1:
        raise CensusFileError("entry count mismatch")
    entries = []
    for line in lines[:-1]:
        rec = json.loads(line)
        entries.append(CensusEntry(
            graph6=rec["graph6"], n=rec["n"], girth=rec["girth"],
            hamiltonian=rec["hamiltonian"], four_ordered=rec["four_ordered"],
            four_ordered_hamiltonian=rec["four_ordered_hamiltonian"]))
    return entries


def write_census(entries: list[CensusEntry], path) -> None:
    from pathlib import Path

    p = Path(path)
    tmp = p.with_suffix(p.suffix + ".tmp")
    tmp.write_text(census_to_jsonl(entries), encoding="utf-8")
    tmp.replace(p)


def read_census(path) -> list[CensusEntry]:
    from pathlib import Path

    return census_from_jsonl(Path(path).read_text(encoding="utf-8"))
