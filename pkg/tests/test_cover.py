from __future__ import annotations

import random

import pytest

from dhpgraph.dhp import check_dhp
from dhpgraph.errors import PreconditionError
from dhpgraph.graphs import BipartiteGraph
from dhpgraph.rainbow import cover_cycle_deg_2n, deg2n_construction, independence_number, small_color_graph
from dhpgraph.sampling import sample_dhp


def test_c4(c4):
    fam = cover_cycle_deg_2n(c4)
    assert len(fam.cycles[0]) == 4
    fam.validate(c4.to_graph(), min_length=4, even=True)


def test_triangle_pattern_plus_full_vertex():
    g = BipartiteGraph.from_edge_list(
        3, 4, [(0, 0), (1, 0), (1, 1), (2, 1), (0, 2), (2, 2), (0, 3), (1, 3), (2, 3)])
    con = deg2n_construction(g)
    assert con.k == 1
    assert len(con.partition) == 1
    assert len(con.cycle.cycles[0]) == 6
    assert {v for v in con.cycle.cycles[0] if v < 3} == {0, 1, 2}


def test_no_large_colors_uses_complete_small_graph():
    # every pair needs two B-vertices of its own, so each pair is doubled
    pairs = [(0, 1), (1, 2), (0, 2)] * 2
    g = BipartiteGraph.from_edge_list(3, 6, [(a, j) for j, p in enumerate(pairs) for a in p])
    assert check_dhp(g).holds
    con = deg2n_construction(g)
    assert con.k == 0 and con.partition is None
    assert len(con.cycle.cycles[0]) == 6


def test_rejects_other_degrees():
    g = BipartiteGraph.from_edge_list(4, 4, [(0, 0), (1, 0), (2, 0)] + [(a, j) for j in (1, 2, 3) for a in range(4)])
    with pytest.raises(PreconditionError):
        small_color_graph(g)


def test_rejects_non_dhp(star):
    with pytest.raises(PreconditionError):
        deg2n_construction(star)


def test_sampled_instances():
    rng = random.Random(8)
    for seed in range(40):
        n = rng.randint(2, 8)
        g = sample_dhp(n, rng.randint(n, 2 * n), "two-n", seed).graph
        con = deg2n_construction(g)
        if con.partition is not None:
            assert len(con.partition) <= con.k
            assert independence_number(con.small_graph) <= con.k
