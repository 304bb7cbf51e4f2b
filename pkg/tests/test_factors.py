from __future__ import annotations

import random

import pytest

from dhpgraph.errors import PreconditionError, SizeCapError
from dhpgraph.factors import (
    ParityFactorSpec,
    check_belck,
    check_lovasz,
    covering_spec,
    find_belck_violation,
    find_covering_two_factor,
    find_general_two_factor,
    find_lovasz_violation,
    find_two_factor_exhaustive,
    q_count,
    two_factor_spec,
)
from dhpgraph.graphs import BipartiteGraph, Graph
from dhpgraph.sampling import random_bipartite, sample_dhp


def k33() -> BipartiteGraph:
    return BipartiteGraph.from_edge_list(3, 3, [(a, b) for a in range(3) for b in range(3)])


def test_covering_spec_c4(c4):
    spec = covering_spec(c4)
    assert spec.f == (2, 2, 2, 2)
    assert spec.g == (2, 2, 0, 0)


def test_covering_spec_single_vertex():
    spec = covering_spec(BipartiteGraph(1, 0, ()))
    assert spec.f == (2,) and spec.g == (2,)
    assert find_two_factor_exhaustive(BipartiteGraph(1, 0, ())) is None


def test_spec_validation():
    with pytest.raises(PreconditionError):
        ParityFactorSpec((2, 1), (0, 0))
    with pytest.raises(PreconditionError):
        ParityFactorSpec((2,), (4,))


def test_q_count_examples(c4, star):
    spec = covering_spec(c4)
    assert q_count(c4, [], [0], spec) == 0
    assert q_count(c4, [], [], spec) == 0
    assert q_count(star, [], [0, 1], covering_spec(star)) == 0
    with pytest.raises(PreconditionError):
        q_count(c4, [0], [0])


def test_lovasz_pairs(c4, star):
    r = check_lovasz(c4, covering_spec(c4), [], [0])
    assert (r.lhs, r.rhs, r.satisfied) == (2, 2, True)
    assert r.rewritten == (2, 2)
    r = check_lovasz(c4, covering_spec(c4), [], [])
    assert (r.lhs, r.rhs, r.satisfied) == (0, 0, True)
    r = check_lovasz(star, covering_spec(star), [], [0, 1])
    assert (r.lhs, r.rhs, r.satisfied) == (4, 2, False)


def test_lovasz_scan(c4, star):
    assert find_lovasz_violation(c4, covering_spec(c4)).satisfied
    bad = find_lovasz_violation(star, covering_spec(star))
    assert not bad.satisfied
    assert not check_lovasz(star, covering_spec(star), bad.violating_s, bad.violating_t).satisfied


def test_lovasz_cap():
    g = BipartiteGraph(9, 9, (0b11,) * 9)
    with pytest.raises(SizeCapError):
        find_lovasz_violation(g, covering_spec(g))


def test_pruned_and_unpruned_lovasz_agree():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(2, 4)
        g = random_bipartite(n, rng.randint(0, n + 1), rng, min_degree=1)
        spec = covering_spec(g)
        a = find_lovasz_violation(g, spec, prune=True)
        b = find_lovasz_violation(g, spec, prune=False, restrict_t=False)
        assert a.satisfied == b.satisfied == (find_two_factor_exhaustive(g) is not None)


def test_gadget_examples(c4, star):
    fam = find_covering_two_factor(c4)
    assert fam is not None and len(fam.cycles) == 1 and len(fam.cycles[0]) == 4
    assert find_covering_two_factor(star) is None
    g = k33()
    fam = find_covering_two_factor(g)
    fam.validate(g.to_graph(), min_length=4, even=True)
    assert set(range(3)) <= fam.vertices()


def test_exhaustive_examples(c4, star):
    assert find_two_factor_exhaustive(c4) is not None
    assert find_two_factor_exhaustive(star) is None


def test_gadget_matches_exhaustive_small_sweep():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(2, 5)
        g = random_bipartite(n, rng.randint(0, 5), rng, min_degree=1)
        assert (find_covering_two_factor(g) is None) == (find_two_factor_exhaustive(g) is None)


def test_dhp_samples_satisfy_factor_condition():
    for seed in range(20):
        g = sample_dhp(4, 5, "uniform", seed).graph
        assert find_lovasz_violation(g, covering_spec(g)).satisfied
        assert find_covering_two_factor(g) is not None


def test_belck_examples():
    k4 = Graph.complete(4)
    r = check_belck(k4, [], [0])
    assert (r.lhs, r.rhs, r.satisfied) == (1, 1, True)
    assert check_belck(k4, [1], []).satisfied
    p3 = Graph.path(3)
    r = check_belck(p3, [], [0, 2])
    assert (r.lhs, r.rhs, r.satisfied) == (2, 1, False)
    with pytest.raises(PreconditionError):
        check_belck(p3, [], [0, 1])


def test_general_two_factor_examples():
    tri = find_general_two_factor(Graph.complete(3))
    assert tri.cycles == ((0, 1, 2),)
    k4 = find_general_two_factor(Graph.complete(4))
    k4.validate(Graph.complete(4))
    assert len(k4.cycles) == 1 and len(k4.cycles[0]) == 4
    assert find_general_two_factor(Graph.path(3)) is None
    assert find_two_factor_exhaustive(Graph.path(3)) is None
    assert find_belck_violation(Graph.complete(4)).satisfied
    assert not find_belck_violation(Graph.path(3)).satisfied


def test_two_factor_spec():
    spec = two_factor_spec(Graph.complete(3))
    assert spec.f == spec.g == (2, 2, 2)
