from oddhole import (
    Graph,
    classify_candidate,
    is_odd_hole,
    test_clean,
    test_heavy_cleanable,
)
from oddhole.generators import (
    complete_graph,
    cycle_graph,
    petersen_graph,
    small_graphs,
)
from oddhole.oracle import (
    oracle_find_jewel,
    oracle_find_odd_hole,
    oracle_find_pyramid,
    shortest_odd_holes,
)
from oddhole.probes import is_clean, major_vertices
from oddhole.graph import bits
from .conftest import random_graphs


def test_clean_finds_plain_odd_cycles():
    for k in (5, 7, 9, 11):
        hole = test_clean(cycle_graph(k))
        assert hole is not None and len(hole) == k


def test_clean_rejects_holeless():
    assert test_clean(cycle_graph(6)) is None
    assert test_clean(complete_graph(6)) is None


def test_clean_respects_mask():
    c7 = cycle_graph(7)
    within = c7.full_mask & ~1  # drop vertex 0: what remains is a path
    assert test_clean(c7, within) is None


def test_clean_witnesses_verify():
    for g in random_graphs(200, 5, 10, seed=31):
        hole = test_clean(g)
        if hole is not None:
            assert is_odd_hole(g, hole)


def test_clean_complete_on_clean_small_graphs():
    """Pyramid/jewel-free graphs with a clean shortest odd hole are found."""
    exercised = 0
    pool = [g for n in range(5, 8) for g in small_graphs(n)]
    pool += random_graphs(300, 8, 9, seed=29)
    for g in pool:
        holes = shortest_odd_holes(g)
        if not holes:
            continue
        if oracle_find_pyramid(g) is not None or oracle_find_jewel(g) is not None:
            continue
        if not any(is_clean(g, h) for h in holes):
            continue
        exercised += 1
        assert test_clean(g) is not None
    assert exercised >= 50


def test_heavy_cleanable_examples():
    hole = test_heavy_cleanable(cycle_graph(7))
    assert hole is not None and len(hole) == 7
    assert test_heavy_cleanable(cycle_graph(6)) is None


def _has_dominating_edge(g, h):
    majors = list(bits(major_vertices(g, h)))
    k = len(h)
    for i in range(k):
        u, v = h[i], h[(i + 1) % k]
        if u in majors or v in majors:
            continue
        if all(g.has_edge(m, u) or g.has_edge(m, v) for m in majors):
            return True
    return False


def test_heavy_cleanable_on_dominated_instances():
    """Graphs whose every shortest odd hole has a dominating edge are caught."""
    exercised = 0
    pool = [g for n in range(5, 8) for g in small_graphs(n)]
    pool += random_graphs(200, 8, 9, seed=37)
    for g in pool:
        holes = shortest_odd_holes(g)
        if not holes:
            continue
        if oracle_find_pyramid(g) is not None or oracle_find_jewel(g) is not None:
            continue
        if not any(_has_dominating_edge(g, h) for h in holes):
            continue
        exercised += 1
        assert test_heavy_cleanable(g) is not None
    assert exercised >= 50


def test_classify_examples():
    hole = classify_candidate(cycle_graph(5))
    assert hole is not None and len(hole) == 5
    assert classify_candidate(cycle_graph(6)) is None
    hole = classify_candidate(petersen_graph())
    assert hole is not None and is_odd_hole(petersen_graph(), hole)


def test_classify_candidate_implies_no_configurations():
    for g in random_graphs(200, 5, 9, seed=41):
        if classify_candidate(g) is None:
            assert oracle_find_pyramid(g) is None
            assert oracle_find_jewel(g) is None


def test_classify_witnesses_verify():
    for g in random_graphs(300, 5, 10, seed=51):
        hole = classify_candidate(g)
        if hole is not None:
            assert is_odd_hole(g, hole)


def test_small_graph_shortcut():
    assert classify_candidate(complete_graph(4)) is None
    assert classify_candidate(Graph(0)) is None
