"""Standalone witness validation.

Deliberately shares no logic with the search kernels: everything here is
checked directly against the Graph adjacency, so a validator pass is
independent evidence that a witness is real.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph


def order_respected(cycle: Sequence[int], seq: Sequence[int]) -> bool:
    """True iff deleting non-sequence vertices from the cycle leaves a
    rotation of seq or a rotation of its reversal."""
    members = set(seq)
    reduced = [v for v in cycle if v in members]
    if len(reduced) != len(seq):
        return False
    k = len(seq)
    doubled = reduced + reduced
    target = list(seq)
    for direction in (target, target[::-1]):
        for start in range(k):
            if doubled[start:start + k] == direction:
                return True
    return False


def validate_cycle_witness(g: Graph, seq: Sequence[int], cycle: Sequence[int],
                           hamiltonian: bool = False) -> tuple[bool, str]:
    """Check a claimed witness cycle; returns (ok, reason)."""
    cycle = list(cycle)
    if len(cycle) < 3:
        return False, f"cycle too short: {len(cycle)}"
    if len(set(cycle)) != len(cycle):
        return False, "repeated vertex in cycle"
    for v in cycle:
        if not (0 <= v < g.n):
            return False, f"vertex {v} out of range"
    if hamiltonian and len(cycle) != g.n:
        return False, f"hamiltonian witness must have length {g.n}, got {len(cycle)}"
    for i, u in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if not g.has_edge(u, w):
            return False, f"non-edge ({u},{w}) in cycle"
    if not order_respected(cycle, seq):
        return False, f"cycle does not visit {tuple(seq)} in order"
    return True, "ok"
