"""Pure-Python search kernels over bitmask adjacency.

Reference implementation of the two backtracking searches; the numba
backend in _kernels_nb mirrors this logic instruction for instruction so
both produce identical witnesses and identical node counts.  Masks are
plain ints, so this backend works for any n (the numba one caps at 62).

Status codes: 1 realized, 0 refuted (exhaustive), -1 node limit hit.
"""

from __future__ import annotations

from typing import Sequence

REALIZED = 1
REFUTED = 0
LIMIT = -1


def _targets_reachable(nbr: Sequence[int], used: int, full: int,
                       start: int, targets: Sequence[int], t: int) -> bool:
    """True iff every remaining segment is individually completable: start
    reaches targets[t] through unused vertices, targets[i] reaches
    targets[i+1] likewise.  Sequence vertices are in `used`, so segments
    are checked with all other sequence vertices blocked."""
    free = ~used & full
    a = start
    for i in range(t, len(targets)):
        b = targets[i]
        goal = nbr[b]
        if not (goal >> a) & 1:
            visited = 1 << a
            frontier = visited
            hit = False
            while frontier:
                reach = 0
                m = frontier
                while m:
                    low = m & -m
                    reach |= nbr[low.bit_length() - 1]
                    m ^= low
                if reach & goal & free:
                    hit = True
                    break
                frontier = reach & free & ~visited
                visited |= frontier
            if not hit:
                return False
        a = b
    return True


def cycle_search(nbr: Sequence[int], n: int, seq: Sequence[int],
                 node_limit: int) -> tuple[int, list[int] | None, int]:
    """Find a simple cycle visiting seq in cyclic order.

    Grows the cycle as k vertex-disjoint segments seq[i] -> seq[i+1],
    depth-first, neighbors in ascending order.  Sequence vertices are
    blocked as segment interiors; a segment is abandoned as soon as some
    remaining target becomes unreachable through unused vertices.
    node_limit <= 0 means unlimited.
    """
    k = len(seq)
    s0 = seq[0]
    full = (1 << n) - 1
    seqmask = 0
    for v in seq:
        seqmask |= 1 << v
    targets = list(seq[1:]) + [s0]

    path = [0] * n
    tgt = [0] * n
    nxt = [0] * n
    path[0] = s0
    used = seqmask
    pos = 0
    nodes = 1
    if not _targets_reachable(nbr, used, full, s0, targets, 0):
        nxt[0] = n

    while pos >= 0:
        u = path[pos]
        t = tgt[pos]
        v = nxt[pos]
        if v >= n:
            if not (seqmask >> u) & 1:
                used &= ~(1 << u)
            pos -= 1
            continue
        nxt[pos] = v + 1
        if not (nbr[u] >> v) & 1:
            continue
        if v == targets[t]:
            if t == k - 1:
                return REALIZED, path[: pos + 1], nodes
            newt = t + 1
        elif (used >> v) & 1:
            continue
        else:
            newt = t
            used |= 1 << v
        if node_limit > 0 and nodes >= node_limit:
            return LIMIT, None, nodes
        nodes += 1
        pos += 1
        path[pos] = v
        tgt[pos] = newt
        nxt[pos] = 0
        if not _targets_reachable(nbr, used, full, v, targets, newt):
            nxt[pos] = n
    return REFUTED, None, nodes


def ham_search(nbr: Sequence[int], n: int, seq: Sequence[int],
               node_limit: int) -> tuple[int, list[int] | None, int]:
    """Find a hamiltonian cycle visiting seq in cyclic order.

    Backtracking path extension from seq[0] with an order pointer over the
    remaining sequence vertices, plus three prunes at every node: residual
    connectivity, a degree-2 feasibility count for unused vertices, and a
    forced move when exactly one unused vertex has the path head as one of
    its last two open edges.  node_limit <= 0 means unlimited.
    """
    k = len(seq)
    s0 = seq[0]
    full = (1 << n) - 1
    seqmask = 0
    for v in seq:
        seqmask |= 1 << v

    path = [0] * n
    tgt = [0] * n
    nxt = [0] * n
    cand = [0] * n
    path[0] = s0
    tgt[0] = 1
    used = 1 << s0
    pos = 0
    nodes = 1
    cand[0] = _ham_prune(nbr, n, used, full, s0, s0)
    if cand[0] == -1:
        nxt[0] = n
        cand[0] = 0

    while pos >= 0:
        u = path[pos]
        t = tgt[pos]
        v = nxt[pos]
        if v >= n:
            used &= ~(1 << u)
            pos -= 1
            continue
        nxt[pos] = v + 1
        if not (nbr[u] >> v) & 1:
            continue
        if v == s0:
            if used == full and t >= k:
                return REALIZED, path[: pos + 1], nodes
            continue
        if (used >> v) & 1:
            continue
        if cand[pos] and not (cand[pos] >> v) & 1:
            continue
        if (seqmask >> v) & 1:
            if t >= k or v != seq[t]:
                continue
            newt = t + 1
        else:
            newt = t
        if node_limit > 0 and nodes >= node_limit:
            return LIMIT, None, nodes
        nodes += 1
        used |= 1 << v
        pos += 1
        path[pos] = v
        tgt[pos] = newt
        nxt[pos] = 0
        forced = _ham_prune(nbr, n, used, full, v, s0)
        if forced == -1:
            nxt[pos] = n
            cand[pos] = 0
        else:
            cand[pos] = forced

    return REFUTED, None, nodes


def _ham_prune(nbr: Sequence[int], n: int, used: int, full: int,
               head: int, s0: int) -> int:
    """Feasibility prunes for the hamiltonian search at path head `head`.

    Returns -1 when the node is dead, a candidate bitmask restricting the
    next move when one is forced, and 0 (no restriction) otherwise.
    """
    free = ~used & full
    if free == 0:
        return 0

    # Residual connectivity: all free vertices and the cycle anchor must be
    # reachable from the head through free vertices.
    allowed = free | (1 << s0)
    visited = 1 << head
    frontier = visited
    while frontier:
        reach = 0
        m = frontier
        while m:
            b = m & -m
            reach |= nbr[b.bit_length() - 1]
            m ^= b
        frontier = reach & allowed & ~visited
        visited |= frontier
    if allowed & ~visited:
        return -1

    # The anchor still needs a closing edge from the free side or the head.
    if nbr[s0] & (free | (1 << head)) == 0:
        return -1

    # Every free vertex needs two open edges; vertices down to exactly two
    # force those edges.  Past the first step the head and the anchor can
    # each absorb only one forced edge; at the root the anchor still owns
    # both of its cycle slots.
    avail_world = free | (1 << head) | (1 << s0)
    forced_mask = 0
    head_count = 0
    anchor_count = 0
    m = free
    while m:
        b = m & -m
        w = b.bit_length() - 1
        m ^= b
        opens = nbr[w] & avail_world
        c = opens.bit_count()
        if c < 2:
            return -1
        if c == 2:
            if (opens >> head) & 1:
                head_count += 1
                forced_mask |= 1 << w
            if head != s0 and (opens >> s0) & 1:
                anchor_count += 1
    if head == s0:
        if head_count > 2:
            return -1
        if head_count == 2:
            return forced_mask
        return 0
    if head_count >= 2 or anchor_count >= 2:
        return -1
    if head_count == 1:
        return forced_mask
    return 0
