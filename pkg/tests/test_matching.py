from __future__ import annotations

import random

import networkx as nx

from dhpgraph.matching import matching_pairs, maximum_matching, perfect_matching


def _random_edges(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def test_triangle_plus_pendant():
    mate = maximum_matching(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert len(matching_pairs(mate)) == 2
    assert perfect_matching(4, [(0, 1), (1, 2), (2, 0), (2, 3)]) is not None


def test_odd_cycle_has_no_perfect_matching():
    assert perfect_matching(5, [(i, (i + 1) % 5) for i in range(5)]) is None


def test_blossom_needed():
    # two triangles joined through a path; greedy choices must be undone
    edges = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]
    pairs = matching_pairs(maximum_matching(7, edges))
    assert len(pairs) == 3


def test_matches_networkx_on_random_graphs():
    rng = random.Random(5)
    for _ in range(500):
        n = rng.randint(1, 14)
        edges = _random_edges(rng, n, rng.uniform(0.1, 0.7))
        mate = maximum_matching(n, edges)
        pairs = matching_pairs(mate)
        es = {frozenset(e) for e in edges}
        assert all(frozenset(p) in es for p in pairs)
        assert len({v for p in pairs for v in p}) == 2 * len(pairs)
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        assert len(pairs) == len(nx.max_weight_matching(g, maxcardinality=True))
