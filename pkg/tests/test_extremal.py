from __future__ import annotations

import math

import pytest

from dhpgraph.dhp import check_dhp
from dhpgraph.errors import GraphError, PreconditionError
from dhpgraph.extremal import (
    BinaryTreeSpec,
    balance_degrees,
    binary_tree_dhp,
    check_lower_bound,
    complete_tree_dhp,
    crossing_colors,
    edge_potential,
    lower_bound,
    upper_bound,
)
from dhpgraph.graphs import to_colored_multigraph


def test_complete_tree_sizes():
    assert complete_tree_dhp(2).edges() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    for n, e in [(2, 4), (4, 12), (8, 32), (16, 80)]:
        g = complete_tree_dhp(n)
        assert g.edge_count == e == n * int(math.log2(n)) + n
        assert g.b_count == n


def test_tree_spec_validation():
    with pytest.raises(GraphError):
        BinaryTreeSpec({0: (1,)})
    with pytest.raises(GraphError):
        BinaryTreeSpec({0: (1, 2), 1: (2, 3)})
    with pytest.raises(PreconditionError):
        BinaryTreeSpec.complete(6)


def test_from_nested_and_leaf_order():
    spec = BinaryTreeSpec.from_nested(((None, None), None))
    assert spec.leaves() == [2, 3, 4]
    assert spec.internal_bfs() == [0, 1]
    g = binary_tree_dhp(spec)
    assert [g.degree_a(a) for a in range(3)] == [3, 3, 2]
    assert check_dhp(g).holds


def test_random_and_caterpillar_trees_are_dhp():
    for n in range(2, 11):
        assert check_dhp(binary_tree_dhp(BinaryTreeSpec.random(n, n))).holds
        assert check_dhp(binary_tree_dhp(BinaryTreeSpec.caterpillar(n))).holds


def test_edge_potential(c4, tree4):
    m = to_colored_multigraph(c4)
    assert edge_potential(m, 0b01) == 0
    assert edge_potential(m, 0b11) == 2
    m = to_colored_multigraph(tree4)
    assert edge_potential(m, 0b1111) == tree4.edge_count - tree4.b_count == 8
    assert crossing_colors(m, 0b0011, 0b1100) == 2


def test_lower_bound_examples(c4, tree4):
    r = check_lower_bound(c4)
    assert r.holds and r.bound == 3
    r = check_lower_bound(tree4)
    assert r.holds and r.bound == 8 and r.upper == 12
    r = check_lower_bound(complete_tree_dhp(8))
    assert r.holds and r.bound == 20 and r.edges == 32
    assert lower_bound(16, 16) == 48 and upper_bound(16) == 80


def test_lower_bound_rejects_isolated_and_non_dhp(star):
    with pytest.raises(PreconditionError):
        check_lower_bound(star)


def test_balance_degrees_drops_edges():
    g = binary_tree_dhp(BinaryTreeSpec.caterpillar(6))
    assert [g.degree_a(a) for a in range(6)] == [2, 3, 4, 5, 6, 6]
    h = balance_degrees(g, 5, 0, verify=True)
    assert h.edge_count == g.edge_count - (6 - 2 - 2) == 24
    assert check_dhp(h).holds
    h = balance_degrees(g, 3, 0)
    assert h.edge_count == g.edge_count - 1
    with pytest.raises(PreconditionError):
        balance_degrees(g, 1, 0)
