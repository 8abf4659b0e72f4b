"""Staged odd-hole detection for candidate graphs.

A candidate (no pyramid, no jewel, no heavy-cleanable shortest odd hole)
that still contains an odd hole has a shortest odd hole C with a probe
vertex x whose largest gap D on C has length at least three, and an edge
c2c3 of C whose ends dominate x and every other spread-out vertex not
adjacent to x.  Up to renaming, the guessed quintet (c2, c3, d1, x, d2)
then falls into one of six shapes:

1. c2 != d1, D shorter than half the hole;
2. c2 != d1, D longer than half;
3. c2 == d1, c3 outside the interior of D, D shorter;
4. c2 == d1, c3 outside the interior of D, D longer;
5. c2 == d1, c3 inside the interior of D, D shorter;
6. c2 == d1, c3 inside the interior of D, D longer.

Each detector below enumerates the tuples of its shape, derives deletion
sets that (for the right guess) strip every spread-out vertex while keeping
the hole, reconstructs the hole from shortest-path pieces, and verifies the
result before reporting.  Witnesses are therefore always genuine; the
completeness of the six-way split is exercised by the differential and
oracle suites.  See docs/derived-types.md for how shapes 4-6 are obtained
from their short counterparts.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Optional

from .cleaning import classify_candidate, test_clean, _walk_down
from .graph import (
    Graph,
    Mask,
    bits,
    bfs_distances,
    induced_four_paths,
    induced_three_paths,
    is_induced_path,
    is_odd_hole,
    mask_of,
)

Hole = tuple[int, ...]
RData = dict[int, tuple[tuple[int, ...], int, int]]  # v -> (path, mask, length)


def odd_linkage(
    g: Graph,
    a_side: Iterable[int],
    b_side: Iterable[int],
    hub: int,
    paths: Mapping[int, tuple[int, ...]],
    within: Optional[Mask] = None,
) -> Optional[tuple[int, int]]:
    """Find a pair whose anchored paths join into one induced path.

    Every vertex of ``a_side`` and ``b_side`` carries an induced path to the
    common hub; the hub has no neighbor on either side and no path visits a
    side vertex other than its own.  Adding edges from each side vertex to
    the interior of its path makes "the two paths form an induced path"
    equivalent to "the pair is at distance exactly four inside the subgraph
    on the two paths", which a constant number of masked steps per pair
    decides.  Malformed instances raise ValueError.
    """
    a_set = sorted(set(a_side))
    b_set = sorted(set(b_side))
    ab_mask = mask_of(a_set) | mask_of(b_set)
    if mask_of(a_set) & mask_of(b_set):
        raise ValueError("side sets overlap")
    if (1 << hub) & ab_mask or g.adj[hub] & ab_mask:
        raise ValueError("hub touches a side vertex")
    allowed = g.full_mask if within is None else within
    rows = list(g.adj)
    pmasks: dict[int, Mask] = {}
    for v in a_set + b_set:
        p = paths.get(v)
        if p is None or p[0] != v or p[-1] != hub:
            raise ValueError(f"bad anchored path for {v}")
        if not is_induced_path(g, p):
            raise ValueError(f"anchored path for {v} is not induced")
        pmask = mask_of(p)
        if pmask & ab_mask & ~(1 << v):
            raise ValueError(f"path for {v} visits another side vertex")
        if pmask & ~allowed:
            raise ValueError(f"path for {v} leaves the working mask")
        pmasks[v] = pmask
        extras = pmask & ~(1 << v) & ~(1 << hub)
        rows[v] |= extras
        for w in bits(extras):
            rows[w] |= 1 << v
    # Distance four is equivalent to "the two paths join into one induced
    # path" only inside the subgraph on those two paths, so each pair gets
    # its own masked four-step walk.
    for a in a_set:
        abit = 1 << a
        for b in b_set:
            scope = pmasks[a] | pmasks[b]
            seen = cur = abit
            for _ in range(4):
                nxt = 0
                for v in bits(cur):
                    nxt |= rows[v]
                cur = nxt & scope & ~seen
                seen |= cur
            if cur >> b & 1:
                return a, b
    return None


def _r_paths(g: Graph, hub: int, core: Mask, members: Mask) -> RData:
    """Shortest anchored paths: each member, then only core vertices, to hub.

    A member need not lie in the core itself; its path steps into the core
    immediately.  Minimum length makes every returned path induced.  Members
    with no route are omitted; the hub itself gets the trivial path.
    """
    hd = bfs_distances(g, hub, core)
    out: RData = {}
    for v in bits(members):
        if v == hub:
            out[v] = ((v,), 1 << v, 0)
            continue
        best = -1
        via = -1
        for u in bits(g.adj[v] & core):
            d = hd[u]
            if d >= 0 and (best < 0 or d < best):
                best, via = d, u
        if best < 0:
            continue
        tail = _walk_down(g, hd, via, core)  # via .. hub
        path = (v,) + tuple(tail)
        out[v] = (path, mask_of(path), best + 1)
    return out


def _parity_split(rdata: RData, side: Mask):
    evens, odds = [], []
    for v in bits(side):
        entry = rdata.get(v)
        if entry is None:
            continue
        (evens if entry[2] % 2 == 0 else odds).append((v,) + entry)
    return evens, odds


def _pair_scan(g, a_items, b_items, hub_mask, assemble, net) -> Optional[Hole]:
    """Try every pair whose anchored paths are disjoint and non-adjacent.

    Joint vertices or edges between the two paths (hub aside) disqualify a
    pair outright; surviving pairs are assembled into a full cycle and
    verified, with the clean-test net as the fallback when assembly fails.
    """
    adj = g.adj
    for (a, pa, ma, _la) in a_items:
        ca = ma & ~hub_mask
        na = 0
        for w in bits(ca):
            na |= adj[w]
        for (b, pb, mb, _lb) in b_items:
            cb = mb & ~hub_mask
            if ca & cb or na & cb:
                continue
            hole = assemble(pa, pb)
            if hole is not None:
                return hole
            hole = net(a, b)
            if hole is not None:
                return hole
    return None


def detect_type1(g: Graph) -> Optional[Hole]:
    """Shape 1: dominating edge away from the gap, gap shorter than half."""
    if g.n < 5:
        return None
    full, adj = g.full_mask, g.adj
    p3s = induced_three_paths(g)
    cache: dict[int, Optional[Hole]] = {}
    for c2 in range(g.n):
        for c3 in g.neighbors_of[c2]:
            pairbit = (1 << c2) | (1 << c3)
            c1base = adj[c2] & ~adj[c3] & ~pairbit
            c4base = adj[c3] & ~adj[c2] & ~pairbit
            if not c1base or not c4base:
                continue
            x2base = (adj[c2] | adj[c3]) & ~pairbit
            for (d1, x, d2) in p3s:
                trip = (1 << d1) | (1 << x) | (1 << d2)
                if trip & pairbit:
                    continue
                xbit = 1 << x
                dpair = trip & ~xbit
                x1 = adj[d1] & adj[d2] & ~xbit
                x2 = x2base & ~trip
                gp = full & ~(x1 | x2 | ((adj[x] | xbit) & ~dpair))
                dd1 = bfs_distances(g, d1, gp)
                t = dd1[d2]
                if t < 0:
                    continue
                dd2 = bfs_distances(g, d2, gp)
                y = 0
                for v in bits(gp & ~dpair):
                    if dd1[v] >= 0 and dd2[v] >= 0 and dd1[v] + dd2[v] == t:
                        y |= 1 << v
                x3 = 0
                for v in bits(full & ~y & ~xbit & ~dpair):
                    if adj[v] & y:
                        x3 |= 1 << v
                gpp = full & ~(x1 | x2 | x3 | xbit)
                c1set = c1base & ~xbit
                c4set = c4base & ~xbit
                for d3 in bits(gpp & ~pairbit & ~trip):
                    hole = _finish_split_hub(
                        g, cache, c2, c3, c1set, c4set, d3, gpp
                    )
                    if hole is not None:
                        return hole
    return None


def _finish_split_hub(g, cache, c2, c3, c1set, c4set, d3, gpp) -> Optional[Hole]:
    rdata = _r_paths(g, d3, gpp, c1set | c4set)
    if not rdata:
        return None
    ev_a, od_a = _parity_split(rdata, c1set)
    ev_b, od_b = _parity_split(rdata, c4set)

    def assemble(pa, pb):
        cycle = pa + tuple(reversed(pb))[1:] + (c3, c2)
        return cycle if is_odd_hole(g, cycle) else None

    def net(a, b):
        key = gpp | (1 << a) | (1 << b)
        if key not in cache:
            cache[key] = test_clean(g, key)
        return cache[key]

    for a_items, b_items in ((ev_a, ev_b), (od_a, od_b)):
        if not a_items or not b_items:
            continue
        hole = _pair_scan(g, a_items, b_items, 1 << d3, assemble, net)
        if hole is not None:
            return hole
    return None


def detect_type2(g: Graph) -> Optional[Hole]:
    """Shape 2: dominating edge away from the gap, gap longer than half."""
    if g.n < 5:
        return None
    full, adj = g.full_mask, g.adj
    base_p3s = induced_three_paths(g)
    p3s = [(d1, x, d2) for (d1, x, d2) in base_p3s] + [
        (d2, x, d1) for (d1, x, d2) in base_p3s
    ]
    cache: dict[int, Optional[Hole]] = {}
    for c2 in range(g.n):
        for c3 in g.neighbors_of[c2]:
            pairbit = (1 << c2) | (1 << c3)
            c1base = adj[c2] & ~adj[c3] & ~pairbit
            c4base = adj[c3] & ~adj[c2] & ~pairbit
            if not c1base or not c4base:
                continue
            x2base = (adj[c2] | adj[c3]) & ~pairbit
            for (d1, x, d2) in p3s:
                trip = (1 << d1) | (1 << x) | (1 << d2)
                if trip & pairbit:
                    continue
                xbit = 1 << x
                dpair = trip & ~xbit
                x1 = adj[d1] & adj[d2] & ~xbit
                x2 = x2base & ~trip
                gp = full & ~(x1 | x2 | ((adj[x] | xbit) & ~dpair))
                dd1 = bfs_distances(g, d1, gp)
                dd2 = bfs_distances(g, d2, gp)
                for d3 in bits(gp & ~pairbit & ~trip):
                    t = dd1[d3]
                    if t < 1 or dd2[d3] != t:
                        continue
                    hole = _type2_finish(
                        g, cache, c2, c3, c1base, c4base, d1, x, d2, d3,
                        x1, x2, gp, dd1, dd2, xbit, dpair,
                    )
                    if hole is not None:
                        return hole
    return None


def _type2_finish(
    g, cache, c2, c3, c1base, c4base, d1, x, d2, d3, x1, x2, gp, dd1, dd2, xbit, dpair
) -> Optional[Hole]:
    full, adj = g.full_mask, g.adj
    t = dd1[d3]
    dd3 = bfs_distances(g, d3, gp)
    y = 0
    for v in bits(gp & ~dpair):
        dv = dd3[v]
        if dv < 0:
            continue
        if (dd1[v] >= 0 and dd1[v] + dv == t) or (dd2[v] >= 0 and dd2[v] + dv == t):
            y |= 1 << v
    x3 = 0
    for v in bits(full & ~y & ~xbit & ~dpair):
        if adj[v] & y:
            x3 |= 1 << v
    gpp = full & ~(x1 | x2 | x3 | xbit)
    half1 = _walk_down(g, dd1, d3, gp)  # d3 .. d1
    half1.reverse()
    half2 = _walk_down(g, dd2, d3, gp)  # d3 .. d2
    gap_path = tuple(half1) + tuple(half2[1:])  # d1 .. d3 .. d2
    avoid_hub = adj[d3] | (1 << d3)
    c1set = c1base & ~xbit & ~avoid_hub
    c4set = c4base & ~xbit & ~avoid_hub
    r1 = _r_paths(g, d1, gpp, c1set)
    r4 = _r_paths(g, d2, gpp, c4set)
    ev_a, od_a = _parity_split(r1, c1set)
    ev_b, od_b = _parity_split(r4, c4set)

    def assemble(pa, pb):
        cycle = pa + gap_path[1:] + tuple(reversed(pb))[1:] + (c3, c2)
        return cycle if is_odd_hole(g, cycle) else None

    def net(a, b):
        key = gpp | (1 << a) | (1 << b)
        if key not in cache:
            cache[key] = test_clean(g, key)
        return cache[key]

    for a_items, b_items in ((ev_a, ev_b), (od_a, od_b)):
        if not a_items or not b_items:
            continue
        hole = _pair_scan(g, a_items, b_items, 0, assemble, net)
        if hole is not None:
            return hole
    return None


def _oriented_four_paths(g: Graph) -> Iterator[tuple[int, int, int, int]]:
    for (a, b, c, d) in induced_four_paths(g):
        yield (a, b, c, d)
        yield (d, c, b, a)


def _anchored_tuples(g: Graph) -> Iterator[tuple[int, int, int, int, int, int, Mask]]:
    """Tuples (c1, d1, c3, c4, x, d2) with the dominating edge at d1-c3."""
    adj = g.adj
    for (c1, d1, c3, c4) in _oriented_four_paths(g):
        cbits = (1 << c1) | (1 << d1) | (1 << c3) | (1 << c4)
        for x in bits(adj[d1] & ~cbits):
            xbit = 1 << x
            for d2 in bits(adj[x] & ~adj[d1] & ~cbits & ~xbit):
                yield c1, d1, c3, c4, x, d2, cbits


def _short_anchored(g: Graph, anchor_on_c3: bool) -> Optional[Hole]:
    if g.n < 5:
        return None
    full, adj = g.full_mask, g.adj
    cache: dict[int, Optional[Hole]] = {}
    for c1, d1, c3, c4, x, d2, cbits in _anchored_tuples(g):
        anchor = c3 if anchor_on_c3 else c1
        xbit = 1 << x
        x1 = adj[d1] & adj[d2] & ~xbit
        x2 = (adj[d1] | adj[c3]) & ~cbits
        spare = (1 << anchor) | (1 << d2)
        gp = full & ~(x1 | x2 | ((adj[x] | xbit) & ~spare))
        if (gp & spare) != spare:
            continue
        da = bfs_distances(g, anchor, gp)
        t = da[d2]
        if t < 0:
            continue
        db = bfs_distances(g, d2, gp)
        y = 0
        for v in bits(gp & ~spare):
            if da[v] >= 0 and db[v] >= 0 and da[v] + db[v] == t:
                y |= 1 << v
        x3 = 0
        for v in bits(full & ~y & ~xbit & ~spare):
            if adj[v] & y:
                x3 |= 1 << v
        gpp = full & ~(x1 | x2 | x3 | xbit)
        need = (1 << c1) | (1 << c4)
        if (gpp & need) != need:
            continue
        e1 = bfs_distances(g, c1, gpp)
        e4 = bfs_distances(g, c4, gpp)
        used = cbits | xbit | (1 << d2)
        for d3 in bits(gpp & ~used):
            ta = e1[d3]
            if ta < 1 or e4[d3] != ta:
                continue
            pa = _walk_down(g, e1, d3, gpp)  # d3 .. c1
            pa.reverse()
            pb = _walk_down(g, e4, d3, gpp)  # d3 .. c4
            cycle = (d1,) + tuple(pa) + tuple(pb[1:]) + (c3,)
            if is_odd_hole(g, cycle):
                return cycle
            if gpp not in cache:
                cache[gpp] = test_clean(g, gpp)
            if cache[gpp] is not None:
                return cache[gpp]
    return None


def _long_anchored(g: Graph, anchor_on_c3: bool) -> Optional[Hole]:
    if g.n < 5:
        return None
    full, adj = g.full_mask, g.adj
    cache: dict[int, Optional[Hole]] = {}
    for c1, d1, c3, c4, x, d2, cbits in _anchored_tuples(g):
        anchor = c3 if anchor_on_c3 else c1
        r_end = c1 if anchor_on_c3 else c4
        xbit = 1 << x
        x1 = adj[d1] & adj[d2] & ~xbit
        x2 = (adj[d1] | adj[c3]) & ~cbits
        spare = (1 << anchor) | (1 << d2)
        gp = full & ~(x1 | x2 | ((adj[x] | xbit) & ~spare))
        if (gp & spare) != spare:
            continue
        da = bfs_distances(g, anchor, gp)
        db = bfs_distances(g, d2, gp)
        for d3 in bits(gp & ~cbits & ~xbit & ~(1 << d2)):
            t1 = da[d3]
            if t1 < 1 or db[d3] != t1 + 1:
                continue
            dd3 = bfs_distances(g, d3, gp)
            y = 0
            for v in bits(gp & ~spare):
                dv = dd3[v]
                if dv < 0:
                    continue
                if (da[v] >= 0 and da[v] + dv == t1) or (
                    db[v] >= 0 and db[v] + dv == t1 + 1
                ):
                    y |= 1 << v
            x3 = 0
            for v in bits(full & ~y & ~xbit & ~spare):
                if adj[v] & y:
                    x3 |= 1 << v
            gpp = full & ~(x1 | x2 | x3 | xbit)
            rdata = _r_paths(g, d2, gpp, 1 << r_end)
            if r_end not in rdata:
                continue
            rpath = rdata[r_end][0]  # r_end .. d2
            p1 = _walk_down(g, da, d3, gp)  # d3 .. anchor
            p1.reverse()
            p2 = _walk_down(g, db, d3, gp)  # d3 .. d2
            body = (d1,) + tuple(p1) + tuple(p2[1:]) + tuple(reversed(rpath))[1:]
            cycle = body + ((c3,) if not anchor_on_c3 else ())
            if is_odd_hole(g, cycle):
                return cycle
            if gpp not in cache:
                cache[gpp] = test_clean(g, gpp)
            if cache[gpp] is not None:
                return cache[gpp]
    return None


def detect_type3(g: Graph) -> Optional[Hole]:
    """Shape 3: dominating edge meets the gap end, hole flank outside, short gap."""
    return _short_anchored(g, anchor_on_c3=False)


def detect_type4(g: Graph) -> Optional[Hole]:
    """Shape 4: like shape 3 with the gap longer than half the hole."""
    return _long_anchored(g, anchor_on_c3=False)


def detect_type5(g: Graph) -> Optional[Hole]:
    """Shape 5: dominating edge meets the gap end, flank inside the gap, short gap."""
    return _short_anchored(g, anchor_on_c3=True)


def detect_type6(g: Graph) -> Optional[Hole]:
    """Shape 6: like shape 5 with the gap longer than half the hole."""
    return _long_anchored(g, anchor_on_c3=True)


_TYPE_DETECTORS: tuple[Callable[[Graph], Optional[Hole]], ...] = (
    detect_type1,
    detect_type2,
    detect_type3,
    detect_type4,
    detect_type5,
    detect_type6,
)


def detect_fast(g: Graph, types: Optional[Iterable[int]] = None) -> Optional[Hole]:
    """Run the six shape detectors in order on a candidate graph.

    ``types`` restricts to a subset of shapes (1-based), for debugging; the
    no-hole answer is then only meaningful for the shapes actually run.
    """
    chosen = range(1, 7) if types is None else sorted(set(types))
    for i in chosen:
        if not 1 <= i <= 6:
            raise ValueError(f"no such shape: {i}")
        hole = _TYPE_DETECTORS[i - 1](g)
        if hole is not None:
            return hole
    return None


def detect(g: Graph) -> Optional[Hole]:
    """Decide whether the graph has an odd hole; return a verified one if so."""
    hole = classify_candidate(g)
    if hole is not None:
        return hole
    return detect_fast(g)
