from __future__ import annotations

import random
from itertools import combinations

import pytest

from dhpgraph.errors import PaperContradiction, PreconditionError
from dhpgraph.graphs import Graph
from dhpgraph.rainbow import (
    EdgeColoredGraph,
    double_factorial_bound,
    find_rainbow_path,
    independence_number,
    maximum_independent_set,
    min_path_partition_size,
    minimal_span_slack,
    path_partition_gallai_milgram,
    rainbow_path_search,
    span_condition_witness,
)


def brute_alpha(h: Graph) -> int:
    for size in range(h.vertex_count, 0, -1):
        for combo in combinations(range(h.vertex_count), size):
            if h.is_independent(sum(1 << v for v in combo)):
                return size
    return 0


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def proper_coloring_k6() -> EdgeColoredGraph:
    # 1-factorization of K6: vertex 5 is the hub, rotate around 0..4
    colors = {}
    for r in range(5):
        pairs = [(r, 5)] + [((r + i) % 5, (r - i) % 5) for i in (1, 2)]
        for u, v in pairs:
            colors[(min(u, v), max(u, v))] = r
    return EdgeColoredGraph(6, colors)


def test_independence_numbers():
    assert independence_number(Graph.empty(5)) == 5
    assert independence_number(Graph.complete(5)) == 1
    assert independence_number(Graph.cycle(5)) == 2


def test_alpha_matches_brute_force():
    rng = random.Random(2)
    for _ in range(300):
        h = random_graph(rng, rng.randint(1, 9), rng.random())
        mis = maximum_independent_set(h)
        assert h.is_independent(mis)
        assert mis.bit_count() == brute_alpha(h)


def test_gallai_milgram_examples():
    p = path_partition_gallai_milgram(Graph.empty(4), 4)
    assert sorted(p.paths) == [(0,), (1,), (2,), (3,)]
    p = path_partition_gallai_milgram(Graph.path(5), 1)
    assert len(p) == 1 and sorted(p.paths[0]) == [0, 1, 2, 3, 4]
    p = path_partition_gallai_milgram(Graph.cycle(5), 2)
    assert len(p) <= 2
    p.validate(Graph.cycle(5))


def test_gallai_milgram_budget_violation_is_reported():
    with pytest.raises(PaperContradiction):
        path_partition_gallai_milgram(Graph.empty(3), 2)


def test_gallai_milgram_certificate_on_random_graphs():
    rng = random.Random(4)
    for _ in range(300):
        h = random_graph(rng, rng.randint(1, 10), rng.random())
        p = path_partition_gallai_milgram(h)
        p.validate(h)
        assert len(p) == len(p.independent) <= independence_number(h)
        if h.vertex_count <= 8:
            assert min_path_partition_size(h) <= len(p)


def test_min_path_partition_examples():
    assert min_path_partition_size(Graph.cycle(5)) == 1
    assert min_path_partition_size(Graph.empty(3)) == 3
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert min_path_partition_size(star) == 2


def test_double_factorial_bound_values():
    assert double_factorial_bound(0, 0) == 1
    assert double_factorial_bound(3, 1) == 4
    assert double_factorial_bound(1, 2) == 9
    assert double_factorial_bound(0, 2) == 6
    assert double_factorial_bound(0, 3) == 45
    with pytest.raises(PreconditionError):
        double_factorial_bound(-1, 2)


def test_span_condition_needs_slack_for_single_vertices():
    gc = proper_coloring_k6()
    assert span_condition_witness(gc, 0) == (0,)
    assert span_condition_witness(gc, 1) is None
    assert minimal_span_slack(gc) == 1


def test_rainbow_path_trivial_lengths():
    gc = EdgeColoredGraph(2, {(0, 1): 0})
    assert find_rainbow_path(gc, 0, 0, check=False).vertices == (0,)
    p = find_rainbow_path(gc, 0, 1, check=False)
    assert p.vertices == (0, 1) and p.colors == (0,)


def test_rainbow_path_on_proper_k6():
    gc = proper_coloring_k6()
    p = find_rainbow_path(gc, 0, 2, check=False)
    p.validate(gc)
    assert p.length == 2


def test_rainbow_path_checks_preconditions():
    gc = proper_coloring_k6()
    with pytest.raises(PreconditionError):
        find_rainbow_path(gc, 0, 2)  # singletons violate the span condition
    with pytest.raises(PreconditionError):
        find_rainbow_path(gc, 1, 2)  # 6 < n0(1, 2) = 9
    p = find_rainbow_path(gc, 1, 1)
    p.validate(gc)


def test_monochromatic_graph_has_no_long_rainbow_path():
    gc = EdgeColoredGraph(4, {(u, v): 0 for u in range(4) for v in range(u + 1, 4)})
    assert rainbow_path_search(gc, 2) is None
    assert find_rainbow_path(gc, 0, 2, check=False) is None
