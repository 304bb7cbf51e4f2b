from __future__ import annotations

import pytest

from dhpgraph.extremal import complete_tree_dhp
from dhpgraph.graphs import BipartiteGraph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def c4() -> BipartiteGraph:
    # a0 - b0 - a1 - b1 - a0
    return BipartiteGraph.from_edge_list(2, 2, [(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def star() -> BipartiteGraph:
    return BipartiteGraph.from_edge_list(3, 1, [(0, 0), (1, 0), (2, 0)])


@pytest.fixture
def tree4() -> BipartiteGraph:
    return complete_tree_dhp(4)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
