from __future__ import annotations

import random

import pytest

from dhpgraph.errors import SizeCapError
from dhpgraph.graphs import ColoredMultigraph, to_colored_multigraph
from dhpgraph.rainbow import (
    covering_cycle,
    find_rainbow_hamiltonian_cycle,
    rainbow_cycle_oracle,
    rainbow_hamiltonian_search,
)
from dhpgraph.sampling import random_bipartite


def test_c4_cycle(c4):
    fam, res = covering_cycle(c4)
    assert res.exhaustive and res.cycle is not None
    assert res.cycle.order == (0, 1)
    assert set(res.cycle.colors) == {0, 1}
    assert fam.cycles == ((0, 2, 1, 3),)
    fam.validate(c4.to_graph(), min_length=4, even=True)


def test_tree4_has_cycle(tree4):
    m = to_colored_multigraph(tree4)
    cyc = find_rainbow_hamiltonian_cycle(m)
    assert cyc is not None
    cyc.validate(m)
    fam = cyc.to_cycle_family(tree4)
    fam.validate(tree4.to_graph(), min_length=4, even=True)


def test_single_color_triangle_has_none():
    m = ColoredMultigraph(3, {0: 0b111})
    res = rainbow_hamiltonian_search(m)
    assert res.cycle is None and res.exhaustive
    assert rainbow_cycle_oracle(m) is None


def test_node_limit_marks_result_inexhaustive():
    m = ColoredMultigraph(6, {i: 0b111111 for i in range(5)})
    res = rainbow_hamiltonian_search(m, node_limit=3)
    assert res.cycle is None
    assert res.exhaustive  # fewer colors than vertices is decided without search
    m = ColoredMultigraph(6, {i: 0b111111 if i else 0b11 for i in range(6)})
    res = rainbow_hamiltonian_search(m, node_limit=2)
    assert not res.exhaustive


def test_cap():
    m = ColoredMultigraph(15, {0: (1 << 15) - 1})
    with pytest.raises(SizeCapError):
        rainbow_hamiltonian_search(m)


def test_search_matches_oracle_on_random_multigraphs():
    rng = random.Random(23)
    for _ in range(400):
        n = rng.randint(2, 6)
        g = random_bipartite(n, rng.randint(n - 1, n + 2), rng)
        m = to_colored_multigraph(g)
        res = rainbow_hamiltonian_search(m)
        oracle = rainbow_cycle_oracle(m)
        assert (res.cycle is None) == (oracle is None)
        if res.cycle:
            res.cycle.validate(m)
