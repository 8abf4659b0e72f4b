"""Reference odd-hole detector built on exhaustive eight-tuple enumeration.

This is the straightforward high-degree polynomial detector: guess a
dominating four-path, a probe vertex with two gap ends, and the gap's middle
vertex; derive deletion sets that (for the right guess) remove every vertex
with spread-out neighbors on a shortest odd hole while keeping the hole
intact; then run the clean-hole test on what remains.  It is much slower
than the staged detector in :mod:`oddhole.fast` but far easier to trust,
which makes it the differential-testing partner.  Intended for n up to
roughly 12.
"""

from __future__ import annotations

from typing import Optional

from .cleaning import test_clean, classify_candidate
from .graph import (
    Graph,
    bits,
    bfs_distances,
    induced_four_paths,
    induced_three_paths,
)

Hole = tuple[int, ...]


def detect_simple(g: Graph) -> Optional[Hole]:
    """Decide odd-hole presence for a candidate graph; witness on success.

    The "no odd hole" answer is only guaranteed when the input is a
    candidate (no pyramid, no jewel, no heavy-cleanable shortest odd hole);
    that precondition is not checked here.  Reported witnesses are always
    verified regardless.
    """
    if g.n < 5:
        return None
    full = g.full_mask
    adj = g.adj
    p4s = induced_four_paths(g)
    p3s = induced_three_paths(g)
    cache: dict[int, Optional[Hole]] = {}
    for (c1, c2, c3, c4) in p4s:
        cmask = (1 << c1) | (1 << c2) | (1 << c3) | (1 << c4)
        x2 = (adj[c2] | adj[c3]) & ~cmask
        for (d1, x, d2) in p3s:
            xbit = 1 << x
            if xbit & cmask:
                continue
            dpair = (1 << d1) | (1 << d2)
            x1 = adj[d1] & adj[d2] & ~xbit
            deleted = x1 | x2
            if deleted & dpair:
                continue  # the guessed gap ends must survive
            gprime = full & ~deleted
            pool = gprime & ~adj[x] & ~xbit  # probe-avoiding vertex pool
            scope = pool | dpair
            dd1 = bfs_distances(g, d1, scope)
            dd2 = bfs_distances(g, d2, scope)
            for d3 in bits(pool):
                t1 = dd1[d3]
                if t1 < 0 or dd2[d3] != t1:
                    continue
                hole = _try_middle(
                    g, cache, x1, x2, gprime, pool, scope, dd1, dd2, x, d1, d2, d3, t1
                )
                if hole is not None:
                    return hole
    return None


def _try_middle(g, cache, x1, x2, gprime, pool, scope, dd1, dd2, x, d1, d2, d3, t1):
    dd3 = bfs_distances(g, d3, scope)
    f = 0
    ends = (1 << d1) | (1 << d2) | (1 << d3)
    for v in bits(pool):
        dv3 = dd3[v]
        if dv3 < 0:
            continue
        if (dd1[v] >= 0 and dd1[v] + dv3 == t1) or (dd2[v] >= 0 and dd2[v] + dv3 == t1):
            f |= 1 << v
    f &= ~ends
    x3 = 0
    fringe_src = f | (1 << d3)
    for v in bits(gprime & ~f & ~ends & ~(1 << x)):
        if g.adj[v] & fringe_src:
            x3 |= 1 << v
    within = g.full_mask & ~(x1 | x2 | x3 | (1 << x))
    if within in cache:
        return cache[within]
    hole = test_clean(g, within)
    cache[within] = hole
    return hole


def detect_with_simple_pipeline(g: Graph) -> Optional[Hole]:
    """Full decision for arbitrary graphs via the reference detector."""
    hole = classify_candidate(g)
    if hole is not None:
        return hole
    return detect_simple(g)
