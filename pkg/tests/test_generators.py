import pytest

from oddhole.generators import (
    canonical_code,
    complete_multipartite,
    connected_small_graphs,
    cycle_graph,
    decorated_odd_cycle,
    generate_corpus,
    gnp,
    petersen_graph,
    random_bipartite,
    random_chordal,
    small_graphs,
)
from oddhole.graph import bfs_distances, bits
from oddhole.oracle import oracle_find_odd_hole
from oddhole.probes import major_vertices


def test_small_graph_counts_match_known_sequences():
    assert [len(small_graphs(n)) for n in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044]
    assert [len(connected_small_graphs(n)) for n in range(1, 8)] == [
        1, 1, 2, 6, 21, 112, 853,
    ]


def test_canonical_code_invariant_under_relabeling():
    import random

    rng = random.Random(9)
    for i in range(40):
        g = gnp(7, 0.45, i)
        perm = list(range(7))
        rng.shuffle(perm)
        assert canonical_code(g) == canonical_code(g.relabel(perm))


def test_gnp_deterministic():
    assert gnp(10, 0.3, 1) == gnp(10, 0.3, 1)
    assert gnp(10, 0.3, 1) != gnp(10, 0.3, 2)


def test_bipartite_has_no_odd_cycles():
    for i in range(10):
        g = random_bipartite(5, 6, 0.5, i)
        assert oracle_find_odd_hole(g) is None


def _is_chordal(g):
    """Simplicial elimination check."""
    alive = set(range(g.n))
    while alive:
        for v in sorted(alive):
            nbrs = [u for u in g.neighbors_of[v] if u in alive]
            if all(
                g.has_edge(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1:]
            ):
                alive.remove(v)
                break
        else:
            return False
    return True


def test_chordal_generator_produces_chordal_graphs():
    for i in range(25):
        g = random_chordal(9, i)
        assert _is_chordal(g)
        assert oracle_find_odd_hole(g) is None


def test_multipartite_and_petersen():
    octa = complete_multipartite([2, 2, 2])
    assert octa.n == 6 and octa.edge_count() == 12
    pet = petersen_graph()
    assert pet.n == 10 and pet.edge_count() == 15
    assert all(pet.degree(v) == 3 for v in range(10))


def test_decorated_cycle_extras_are_major():
    for seed in range(20):
        g = decorated_odd_cycle(9, 2, seed)
        hole = tuple(range(9))
        majors = major_vertices(g, hole)
        assert majors >> 9 & 1 and majors >> 10 & 1
        assert oracle_find_odd_hole(g) is not None


def test_decorated_cycle_rejects_bad_parameters():
    with pytest.raises(ValueError):
        decorated_odd_cycle(6, 1, 0)
    with pytest.raises(ValueError):
        decorated_odd_cycle(3, 1, 0)


def test_corpus_specs():
    (doc,) = generate_corpus("cycle 7")
    assert doc.graph == cycle_graph(7) and doc.name == "cycle-7"
    docs = generate_corpus("gnp 10 0.3 seed=1 count=3")
    assert len(docs) == 3
    assert docs[0].graph == gnp(10, 0.3, 1)
    again = generate_corpus("gnp 10 0.3 seed=1 count=3")
    assert [d.graph for d in docs] == [d.graph for d in again]
    (pet,) = generate_corpus("petersen")
    assert pet.graph == petersen_graph()
    (m,) = generate_corpus("multipartite 2 3 4")
    assert m.graph.n == 9
    docs = generate_corpus("decorated 9 2 seed=5 count=2")
    assert len(docs) == 2 and docs[0].graph.n == 11


def test_corpus_spec_errors():
    with pytest.raises(ValueError):
        generate_corpus("")
    with pytest.raises(ValueError):
        generate_corpus("whatever 3")
    with pytest.raises(ValueError):
        generate_corpus("cycle 7 bogus=1")
