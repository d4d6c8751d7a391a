"""Ordered-cycle search: does a cycle (or hamiltonian cycle) visit a given
vertex sequence in cyclic order, and is a graph k-ordered?

Order semantics: a cycle realizes a sequence when deleting all other
vertices leaves a rotation of the sequence or of its reversal, i.e. the
cycle is undirected and may be traversed either way.  That makes a
sequence, its rotations, and its reversal one query class, so k-orderedness
needs only the canonical representatives enumerated by
``canonical_sequences`` (3 per 4-subset).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Sequence

import numpy as np

from . import _kernels_py
from .backend import neighbor_masks, neighbor_masks_np, resolve_backend
from .graphs import DisconnectedGraphError, Graph, is_connected

REALIZED = "realized"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

_WORKERS_ENV = "KORDER_WORKERS"
_NODE_LIMIT_ENV = "KORDER_NODE_LIMIT"


class SequenceError(ValueError):
    """The queried vertex sequence violates its invariants."""


@dataclass(frozen=True)
class CycleWitness:
    """A cyclic vertex list certifying that a query sequence is realized."""

    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class SearchOutcome:
    """Tri-state result of one ordered-cycle search.

    status is "realized" (witness present), "refuted" (exhaustive, no
    witness exists), or "inconclusive" (node limit hit; never conflated
    with refutation).
    """

    status: str
    witness: CycleWitness | None
    nodes_expanded: int

    @property
    def realized(self) -> bool:
        return self.status == REALIZED


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of a k-orderedness check.

    holds is True/False for exhaustive verdicts and None when some
    sub-search hit the node limit before any refutation was found.
    failing_sequence is the lexicographically smallest refuted canonical
    sequence (present iff holds is False); it is independent of worker
    scheduling.  sequences_total is the size of the canonical query space.
    """

    holds: bool | None
    failing_sequence: tuple[int, ...] | None
    sequences_total: int
    witnesses: dict[tuple[int, ...], CycleWitness] | None = field(default=None)


def env_workers() -> int:
    raw = os.environ.get(_WORKERS_ENV, "1")
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_WORKERS_ENV} must be an integer, got {raw!r}") from exc
    return max(1, value)


def env_node_limit() -> int | None:
    raw = os.environ.get(_NODE_LIMIT_ENV, "").strip()
    if not raw:
        return None
    value = int(raw)
    return value if value > 0 else None


def check_sequence(g: Graph, seq: Sequence[int], k_min: int = 3) -> tuple[int, ...]:
    """Validate a query sequence: distinct vertices, in range, length >= k_min."""
    seq = tuple(int(v) for v in seq)
    if len(seq) < k_min:
        raise SequenceError(f"sequence needs at least {k_min} vertices, got {len(seq)}")
    if len(set(seq)) != len(seq):
        raise SequenceError(f"sequence vertices must be distinct: {seq}")
    for v in seq:
        if not (0 <= v < g.n):
            raise SequenceError(f"vertex {v} out of range for n={g.n}")
    return seq


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")


class _Searcher:
    """Backend-bound pair of kernels for one graph, reusable across queries."""

    def __init__(self, g: Graph, backend: str | None = None):
        self.n = g.n
        self.backend = resolve_backend(g.n, backend)
        if self.backend == "numba":
            from . import _kernels_nb

            self._mod = _kernels_nb
            self._nbr = neighbor_masks_np(g)
        else:
            self._mod = _kernels_py
            self._nbr = neighbor_masks(g)

    def _prep(self, seq: Sequence[int]):
        if self.backend == "numba":
            return np.array(seq, dtype=np.int64)
        return tuple(seq)

    def _outcome(self, raw) -> SearchOutcome:
        if self.backend == "numba":
            status, path, plen, nodes = raw
            witness = CycleWitness(tuple(int(x) for x in path[:plen])) if status == 1 else None
        else:
            status, path, nodes = raw
            witness = CycleWitness(tuple(path)) if status == 1 else None
        name = {1: REALIZED, 0: REFUTED, -1: INCONCLUSIVE}[int(status)]
        return SearchOutcome(name, witness, int(nodes))

    def cycle(self, seq: Sequence[int], node_limit: int | None) -> SearchOutcome:
        raw = self._mod.cycle_search(self._nbr, self.n, self._prep(seq),
                                     int(node_limit or 0))
        return self._outcome(raw)

    def hamiltonian(self, seq: Sequence[int], node_limit: int | None) -> SearchOutcome:
        raw = self._mod.ham_search(self._nbr, self.n, self._prep(seq),
                                   int(node_limit or 0))
        return self._outcome(raw)


def find_cycle_through_in_order(g: Graph, seq: Sequence[int],
                                node_limit: int | None = None,
                                backend: str | None = None) -> SearchOutcome:
    """Search for a simple cycle containing seq in cyclic order.

    "refuted" is an exhaustive certificate that no such cycle exists.
    """
    seq = check_sequence(g, seq)
    _require_connected(g)
    return _Searcher(g, backend).cycle(seq, node_limit)


def find_hamiltonian_cycle_through_in_order(g: Graph, seq: Sequence[int],
                                            node_limit: int | None = None,
                                            backend: str | None = None) -> SearchOutcome:
    """Like find_cycle_through_in_order but the witness must cover all n
    vertices."""
    seq = check_sequence(g, seq)
    _require_connected(g)
    return _Searcher(g, backend).hamiltonian(seq, node_limit)


def is_hamiltonian(g: Graph, backend: str | None = None
                   ) -> tuple[bool, CycleWitness | None]:
    """Exact hamiltonicity with a witness cycle when one exists."""
    if g.n < 3:
        raise ValueError(f"hamiltonicity needs n >= 3, got {g.n}")
    if not is_connected(g):
        return False, None
    outcome = _Searcher(g, backend).hamiltonian((0,), None)
    return outcome.realized, outcome.witness


def canonical_sequences(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Canonical representatives of k-vertex query classes, in lexicographic
    order.

    Each class (a sequence modulo rotation and reversal) is anchored at its
    smallest vertex; of the two anchored traversal directions the lexicogra-
    phically smaller is kept.  For k=4 that is 3 representatives per
    4-subset; for k=3, one.
    """
    for subset in combinations(range(n), k):
        anchor = subset[0]
        for rest in permutations(subset[1:]):
            if rest <= rest[::-1]:
                yield (anchor,) + rest


def count_canonical_sequences(n: int, k: int) -> int:
    from math import comb, factorial

    per_subset = max(1, factorial(k - 1) // 2)
    return comb(n, k) * per_subset


def _scan_chunk(searcher: _Searcher, chunk: list[tuple[int, ...]],
                start_index: int, node_limit: int | None, hamiltonian: bool,
                audit: bool):
    """Scan one chunk in order; report the first refutation/limit hit."""
    witnesses: dict[tuple[int, ...], CycleWitness] = {}
    first_refuted = None
    first_limit = None
    run = searcher.hamiltonian if hamiltonian else searcher.cycle
    for offset, seq in enumerate(chunk):
        outcome = run(seq, node_limit)
        if outcome.status == REFUTED:
            first_refuted = (start_index + offset, seq)
            break
        if outcome.status == INCONCLUSIVE:
            if first_limit is None:
                first_limit = start_index + offset
        elif audit:
            witnesses[seq] = outcome.witness
    return first_refuted, first_limit, witnesses


def _k_ordered_verdict(g: Graph, k: int, hamiltonian: bool,
                       node_limit: int | None, backend: str | None,
                       workers: int | None, audit: bool) -> OrderVerdict:
    if k < 3:
        raise ValueError(f"k-orderedness is defined here for k >= 3, got {k}")
    if g.n < k:
        raise ValueError(f"need n >= k, got n={g.n}, k={k}")
    _require_connected(g)
    if node_limit is None:
        node_limit = env_node_limit()
    nworkers = workers if workers is not None else env_workers()

    seqs = list(canonical_sequences(g.n, k))
    total = len(seqs)

    if nworkers <= 1 or len(seqs) < 4 * nworkers:
        searcher = _Searcher(g, backend)
        refuted, limit, witnesses = _scan_chunk(
            searcher, seqs, 0, node_limit, hamiltonian, audit)
        results = [(refuted, limit, witnesses)]
    else:
        bounds = [(i * total) // nworkers for i in range(nworkers + 1)]
        searchers = [_Searcher(g, backend) for _ in range(nworkers)]
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            futures = [
                pool.submit(_scan_chunk, searchers[i], seqs[bounds[i]:bounds[i + 1]],
                            bounds[i], node_limit, hamiltonian, audit)
                for i in range(nworkers)
            ]
            results = [f.result() for f in futures]

    refutations = [r for r, _, _ in results if r is not None]
    limits = [l for _, l, _ in results if l is not None]
    if refutations:
        # Chunks scan in order, so the smallest index is the
        # lexicographically smallest refuted sequence regardless of
        # scheduling.  A refutation beats a limit hit at a later index, and
        # an earlier limit hit means an earlier sequence stayed undecided.
        index, seq = min(refutations)
        if limits and min(limits) < index:
            return OrderVerdict(None, None, total)
        return OrderVerdict(False, seq, total)
    if limits:
        return OrderVerdict(None, None, total)
    witnesses = None
    if audit:
        witnesses = {}
        for _, _, w in results:
            witnesses.update(w)
    return OrderVerdict(True, None, total, witnesses)


def is_k_ordered(g: Graph, k: int, node_limit: int | None = None,
                 backend: str | None = None, workers: int | None = None,
                 audit: bool = False) -> OrderVerdict:
    """Does every k-vertex sequence admit a cycle through it in order?"""
    return _k_ordered_verdict(g, k, False, node_limit, backend, workers, audit)


def is_k_ordered_hamiltonian(g: Graph, k: int, node_limit: int | None = None,
                             backend: str | None = None, workers: int | None = None,
                             audit: bool = False) -> OrderVerdict:
    """Does every k-vertex sequence admit a hamiltonian cycle through it in
    order?"""
    return _k_ordered_verdict(g, k, True, node_limit, backend, workers, audit)
