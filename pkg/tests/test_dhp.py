from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhpgraph.dhp import (
    check_dhp,
    check_dhp_general,
    deficiency,
    describe_witness,
    is_dhp,
    max_deficiency_witness,
    two_neighborhood,
    two_neighborhood_general,
)
from dhpgraph.errors import PreconditionError, SizeCapError
from dhpgraph.extremal import complete_tree_dhp
from dhpgraph.graphs import BipartiteGraph, Graph, mask_of
from dhpgraph.sampling import random_bipartite


def brute_dhp(g: BipartiteGraph) -> tuple[int, ...] | None:
    """Smallest, then lexicographically first, X with |N^2(X)| < |X|; straight from the definition."""
    for size in range(2, g.a_count + 1):
        for combo in combinations(range(g.a_count), size):
            count = 0
            for j in range(g.b_count):
                hits = sum(1 for a in combo if g.adjacency[j] >> a & 1)
                count += hits >= 2
            if count < size:
                return combo
    return None


def test_two_neighborhood_c4(c4):
    assert two_neighborhood(c4, 0b11) == 0b11


def test_two_neighborhood_small_sets_are_empty(tree4):
    for a in range(4):
        assert two_neighborhood(tree4, 1 << a) == 0
    assert two_neighborhood(tree4, 0) == 0


def test_two_neighborhood_star(star):
    assert two_neighborhood(star, 0b111) == 0b1


def test_c4_holds(c4):
    assert check_dhp(c4).holds
    assert is_dhp(c4)


def test_star_first_witness_is_minimum_size(star):
    v = check_dhp(star)
    assert not v.holds
    assert v.witness == (0, 1)
    assert v.deficiency == 1
    assert describe_witness(star, v) == "X = [0, 1] has 2-neighborhood [0] of size 1 < 2"


def test_star_max_deficiency_witness(star):
    v = max_deficiency_witness(star)
    assert v.witness == (0, 1, 2)
    assert v.deficiency == 2
    assert deficiency(star, 0b111) == 2


def test_complete_tree_8_holds():
    assert check_dhp(complete_tree_dhp(8)).holds


def test_preconditions_and_cap():
    with pytest.raises(PreconditionError):
        check_dhp(BipartiteGraph.from_edge_list(1, 1, [(0, 0)]))
    g = BipartiteGraph(5, 0, ())
    with pytest.raises(SizeCapError):
        check_dhp(g, cap=4)


def test_general_triangle_has_pair_witness():
    v = check_dhp_general(Graph.complete(3))
    assert not v.holds and v.witness == (0, 1)
    assert two_neighborhood_general(Graph.complete(3), 0b111) == 0b111


def test_general_k4_holds():
    assert check_dhp_general(Graph.complete(4)).holds
    assert two_neighborhood_general(Graph.complete(4), 0b11) == 0b1100


def test_general_single_edge():
    v = check_dhp_general(Graph.from_edges(2, [(0, 1)]))
    assert v.witness == (0, 1)


def test_pruned_scan_matches_definition_on_random_graphs():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(2, 7)
        g = random_bipartite(n, rng.randint(0, n + 3), rng, min_degree=1)
        v = check_dhp(g)
        expected = brute_dhp(g)
        assert v.witness == expected
        assert v.holds == (expected is None)
        assert max_deficiency_witness(g).holds == v.holds


def test_pruning_examines_fewer_subsets_on_tree():
    v = check_dhp(complete_tree_dhp(16))
    assert v.holds
    assert v.subsets_examined < 2 ** 16


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(0, 2 ** n - 1), max_size=8), st.integers(0, 2 ** n - 1))))
def test_adding_edges_preserves_dhp(data):
    n, adj, extra = data
    g = BipartiteGraph(n, len(adj), tuple(adj))
    if not adj or not check_dhp(g).holds:
        return
    bigger = BipartiteGraph(n, len(adj), (adj[0] | extra,) + tuple(adj[1:]))
    assert check_dhp(bigger).holds


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(0, 2 ** n - 1), max_size=8),
    st.integers(0, 2 ** n - 1), st.integers(0, 2 ** n - 1))))
def test_two_neighborhood_is_monotone(data):
    n, adj, x, y = data
    g = BipartiteGraph(n, len(adj), tuple(adj))
    small, big = x & y, x | y
    assert two_neighborhood(g, small) & ~two_neighborhood(g, big) == 0


def test_witness_is_violating(star):
    v = check_dhp(star)
    x = mask_of(v.witness)
    assert two_neighborhood(star, x).bit_count() < x.bit_count()
