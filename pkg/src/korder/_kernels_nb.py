"""Numba-compiled search kernels, mirroring _kernels_py line for line.

Masks are int64, which caps this backend at n <= 62 vertices; the backend
selector falls back to the pure-Python kernels beyond that.  Both backends
must return identical witnesses and node counts for the same query.
"""

from __future__ import annotations

import numpy as np
from numba import njit

REALIZED = 1
REFUTED = 0
LIMIT = -1

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(**_JIT)
def _targets_reachable(nbr, n, used, full, start, targets, t):
    free = ~used & full
    a = start
    for i in range(t, targets.shape[0]):
        b = targets[i]
        goal = nbr[b]
        if not (goal >> a) & 1:
            visited = 1 << a
            frontier = visited
            hit = False
            while frontier != 0:
                reach = 0
                for v in range(n):
                    if (frontier >> v) & 1:
                        reach |= nbr[v]
                if reach & goal & free:
                    hit = True
                    break
                frontier = reach & free & ~visited
                visited |= frontier
            if not hit:
                return False
        a = b
    return True


@njit(**_JIT)
def cycle_search(nbr, n, seq, node_limit):
    k = seq.shape[0]
    s0 = seq[0]
    full = (1 << n) - 1
    seqmask = 0
    for i in range(k):
        seqmask |= 1 << seq[i]
    targets = np.empty(k, np.int64)
    for i in range(1, k):
        targets[i - 1] = seq[i]
    targets[k - 1] = s0

    path = np.zeros(n, np.int64)
    tgt = np.zeros(n, np.int64)
    nxt = np.zeros(n, np.int64)
    path[0] = s0
    used = seqmask
    pos = 0
    nodes = 1
    if not _targets_reachable(nbr, n, used, full, s0, targets, 0):
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
                return REALIZED, path, pos + 1, nodes
            newt = t + 1
        elif (used >> v) & 1:
            continue
        else:
            newt = t
            used |= 1 << v
        if node_limit > 0 and nodes >= node_limit:
            return LIMIT, path, 0, nodes
        nodes += 1
        pos += 1
        path[pos] = v
        tgt[pos] = newt
        nxt[pos] = 0
        if not _targets_reachable(nbr, n, used, full, v, targets, newt):
            nxt[pos] = n
    return REFUTED, path, 0, nodes


@njit(**_JIT)
def _ham_prune(nbr, n, used, full, head, s0):
    free = ~used & full
    if free == 0:
        return 0

    allowed = free | (1 << s0)
    visited = 1 << head
    frontier = visited
    while frontier != 0:
        reach = 0
        for v in range(n):
            if (frontier >> v) & 1:
                reach |= nbr[v]
        frontier = reach & allowed & ~visited
        visited |= frontier
    if allowed & ~visited:
        return -1

    if nbr[s0] & (free | (1 << head)) == 0:
        return -1

    avail_world = free | (1 << head) | (1 << s0)
    forced_mask = 0
    head_count = 0
    anchor_count = 0
    for w in range(n):
        if not (free >> w) & 1:
            continue
        opens = nbr[w] & avail_world
        c = _popcount(opens)
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


@njit(**_JIT)
def ham_search(nbr, n, seq, node_limit):
    k = seq.shape[0]
    s0 = seq[0]
    full = (1 << n) - 1
    seqmask = 0
    for i in range(k):
        seqmask |= 1 << seq[i]

    path = np.zeros(n, np.int64)
    tgt = np.zeros(n, np.int64)
    nxt = np.zeros(n, np.int64)
    cand = np.zeros(n, np.int64)
    path[0] = s0
    tgt[0] = 1
    used = 1 << s0
    pos = 0
    nodes = 1
    c0 = _ham_prune(nbr, n, used, full, s0, s0)
    if c0 == -1:
        nxt[0] = n
        cand[0] = 0
    else:
        cand[0] = c0

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
                return REALIZED, path, pos + 1, nodes
            continue
        if (used >> v) & 1:
            continue
        if cand[pos] != 0 and not (cand[pos] >> v) & 1:
            continue
        if (seqmask >> v) & 1:
            if t >= k or v != seq[t]:
                continue
            newt = t + 1
        else:
            newt = t
        if node_limit > 0 and nodes >= node_limit:
            return LIMIT, path, 0, nodes
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

    return REFUTED, path, 0, nodes


def warmup() -> None:
    """Trigger JIT compilation on a triangle so later calls are all fast."""
    nbr = np.array([0b110, 0b101, 0b011], np.int64)
    seq3 = np.array([0, 1, 2], np.int64)
    cycle_search(nbr, 3, seq3, 0)
    ham_search(nbr, 3, seq3, 0)
