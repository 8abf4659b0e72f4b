"""Graph families for corpora and tests, plus small-graph enumeration.

The random families are all seeded and deterministic: the same spec string
always yields the same graphs.  The enumeration of all graphs on up to
eight-ish vertices (one per isomorphism class) backs the exhaustive suites;
it uses degree-refinement plus minimum-code canonical forms, which is cheap
at these sizes.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Optional

from .formats import GraphDocument
from .graph import Graph, bits


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)]) if k >= 3 else path_graph(k)


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(sizes: list[int]) -> Graph:
    bounds = []
    start = 0
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    edges = []
    for ai, (a0, a1) in enumerate(bounds):
        for (b0, b1) in bounds[ai + 1:]:
            edges += [(u, v) for u in range(a0, a1) for v in range(b0, b1)]
    return Graph(start, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(("gnp", n, p, seed).__repr__())
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    rng = random.Random(("bip", a, b, p, seed).__repr__())
    edges = [
        (i, a + j) for i in range(a) for j in range(b) if rng.random() < p
    ]
    return Graph(a + b, edges)


def random_chordal(n: int, seed: int) -> Graph:
    """Chordal graph via simplicial construction: each new vertex joins a clique."""
    rng = random.Random(("chordal", n, seed).__repr__())
    rows = [0]
    for v in range(1, n):
        anchor = rng.randrange(v)
        clique = [anchor]
        for u in sorted(bits(rows[anchor]), key=lambda _: rng.random()):
            if all(rows[u] >> w & 1 for w in clique) and rng.random() < 0.6:
                clique.append(u)
        take = clique[: rng.randint(1, len(clique))]
        row = 0
        for u in take:
            row |= 1 << u
            rows[u] |= 1 << v
        rows.append(row)
    return Graph.from_rows(n, rows)


def decorated_odd_cycle(
    k: int,
    extras: int,
    seed: int,
    min_anchors: int = 4,
    link_extras: bool = True,
) -> Graph:
    """Odd cycle plus spread-out decoration vertices.

    Each extra vertex gets at least ``min_anchors`` neighbors on the cycle,
    never all within three consecutive positions, so every extra is major
    for the base cycle.  Extras may also be linked to each other.
    """
    if k < 5 or k % 2 == 0:
        raise ValueError("need an odd cycle of length at least five")
    rng = random.Random(("decorated", k, extras, seed).__repr__())
    edges = [(i, (i + 1) % k) for i in range(k)]
    for e in range(extras):
        v = k + e
        while True:
            count = rng.randint(min_anchors, min(k - 1, min_anchors + 2))
            anchors = sorted(rng.sample(range(k), count))
            span = max(
                (anchors[(i + 1) % count] - anchors[i]) % k for i in range(count)
            )
            if span <= k - 4:  # neighbors do not fit three consecutive spots
                break
        edges += [(v, u) for u in anchors]
        if link_extras:
            for w in range(k, v):
                if rng.random() < 0.4:
                    edges.append((v, w))
    return Graph(k + extras, edges)


def _refined_labels(g: Graph) -> list[int]:
    labels = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        sig = [
            (labels[v], tuple(sorted(labels[u] for u in g.neighbors_of[v])))
            for v in range(g.n)
        ]
        remap = {s: i for i, s in enumerate(sorted(set(sig)))}
        nxt = [remap[s] for s in sig]
        if nxt == labels:
            break
        labels = nxt
    return labels


def canonical_code(g: Graph) -> tuple:
    """Isomorphism-invariant key: refinement profile plus minimum bit code."""
    n = g.n
    labels = _refined_labels(g)
    classes: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        classes.setdefault(lab, []).append(v)
    ordered = [classes[lab] for lab in sorted(classes)]
    profile = tuple(sorted((lab, len(classes[lab])) for lab in classes))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best: Optional[int] = None
    for combo in product(*(permutations(cl) for cl in ordered)):
        position = [0] * n
        slot = 0
        for group in combo:
            for v in group:
                position[v] = slot
                slot += 1
        inv = [0] * n
        for v, s in enumerate(position):
            inv[s] = v
        code = 0
        for (i, j) in pairs:
            code = (code << 1) | (g.adj[inv[i]] >> inv[j] & 1)
        if best is None or code < best:
            best = code
    return (n, profile, best)


@lru_cache(maxsize=None)
def small_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    out: dict[tuple, Graph] = {}
    for base in small_graphs(n - 1):
        for subset in range(1 << (n - 1)):
            rows = list(base.adj) + [subset]
            for u in bits(subset):
                rows[u] |= 1 << (n - 1)
            g = Graph.from_rows(n, rows)
            key = canonical_code(g)
            if key not in out:
                out[key] = g
    return tuple(out.values())


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    from .graph import bfs_distances

    return all(d >= 0 for d in bfs_distances(g, 0))


@lru_cache(maxsize=None)
def connected_small_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in small_graphs(n) if is_connected(g))


def generate_corpus(spec: str) -> list[GraphDocument]:
    """Produce named graphs from a one-line family spec.

    Examples: ``cycle 7``; ``gnp 10 0.3 seed=1 count=5``;
    ``bipartite 4 5 0.4 seed=2``; ``multipartite 2 3 4``; ``petersen``;
    ``chordal 10 seed=3 count=2``; ``decorated 9 2 seed=4``;
    ``complete 6``.
    """
    tokens = spec.split()
    if not tokens:
        raise ValueError("empty corpus spec")
    family, rest = tokens[0], tokens[1:]
    pos: list[str] = []
    kw: dict[str, str] = {}
    for tok in rest:
        if "=" in tok:
            key, val = tok.split("=", 1)
            kw[key] = val
        else:
            pos.append(tok)
    seed = int(kw.pop("seed", "0"))
    count = int(kw.pop("count", "1"))
    if kw:
        raise ValueError(f"unknown options: {sorted(kw)}")

    def doc(g: Graph, name: str) -> GraphDocument:
        return GraphDocument(g, "generated", name=name)

    if family == "cycle":
        (k,) = map(int, pos)
        return [doc(cycle_graph(k), f"cycle-{k}")]
    if family == "path":
        (k,) = map(int, pos)
        return [doc(path_graph(k), f"path-{k}")]
    if family == "complete":
        (n,) = map(int, pos)
        return [doc(complete_graph(n), f"complete-{n}")]
    if family == "petersen":
        if pos:
            raise ValueError("petersen takes no parameters")
        return [doc(petersen_graph(), "petersen")]
    if family == "multipartite":
        sizes = list(map(int, pos))
        name = "multipartite-" + "x".join(map(str, sizes))
        return [doc(complete_multipartite(sizes), name)]
    if family == "gnp":
        n, p = int(pos[0]), float(pos[1])
        return [
            doc(gnp(n, p, seed + i), f"gnp-{n}-{p}-{seed + i}") for i in range(count)
        ]
    if family == "bipartite":
        a, b, p = int(pos[0]), int(pos[1]), float(pos[2])
        return [
            doc(random_bipartite(a, b, p, seed + i), f"bipartite-{a}-{b}-{seed + i}")
            for i in range(count)
        ]
    if family == "chordal":
        (n,) = map(int, pos)
        return [
            doc(random_chordal(n, seed + i), f"chordal-{n}-{seed + i}")
            for i in range(count)
        ]
    if family == "decorated":
        k, extras = int(pos[0]), int(pos[1])
        return [
            doc(
                decorated_odd_cycle(k, extras, seed + i),
                f"decorated-{k}-{extras}-{seed + i}",
            )
            for i in range(count)
        ]
    raise ValueError(f"unknown family {family!r}")
