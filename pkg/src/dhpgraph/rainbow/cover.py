"""Covering cycles when every B-vertex has degree 2 or |A|.

B-vertices of degree |A| are *large* colors, those of degree 2 are
*small*. The small colors form a graph H on A whose independence number
is at most the number k of large colors, so A splits into at most k paths
of H. Consecutive paths are then joined through distinct large B-vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..dhp import check_dhp, describe_witness
from ..errors import PreconditionError
from ..graphs import BipartiteGraph, CycleFamily, Graph, iter_bits
from .paths import PathPartition, path_partition_gallai_milgram


@dataclass(frozen=True)
class Deg2nConstruction:
    cycle: CycleFamily
    small_graph: Graph
    large: tuple[int, ...]
    partition: PathPartition | None

    @property
    def k(self) -> int:
        return len(self.large)


def small_color_graph(g: BipartiteGraph) -> tuple[Graph, dict[tuple[int, int], int], tuple[int, ...]]:
    """(H, B-vertex per H-edge, large B-vertices). With |A| = 2 every B-vertex counts as large."""
    n = g.a_count
    large = []
    witness: dict[tuple[int, int], int] = {}
    for j, m in enumerate(g.adjacency):
        d = m.bit_count()
        if d == n:
            large.append(j)
        elif d == 2:
            u, v = iter_bits(m)
            witness.setdefault((u, v), j)
        else:
            raise PreconditionError(f"B-vertex {j} has degree {d}, not 2 or {n}")
    return Graph.from_edges(n, witness), witness, tuple(large)


def deg2n_construction(g: BipartiteGraph, verify: bool = True) -> Deg2nConstruction:
    if g.a_count < 2:
        raise PreconditionError("need |A| >= 2")
    h, via, large = small_color_graph(g)
    if verify:
        verdict = check_dhp(g)
        if not verdict.holds:
            raise PreconditionError(describe_witness(g, verdict))
    n = g.a_count
    k = len(large)

    def small(u: int, v: int) -> int:
        return g.b_vertex(via[(u, v) if u < v else (v, u)])

    seq: list[int] = []
    partition = None
    if k == 0:
        # then alpha(H) = 1, so H is complete and 0, 1, ..., n-1 closes up
        for i in range(n):
            seq.append(i)
            seq.append(small(i, (i + 1) % n))
    else:
        partition = path_partition_gallai_milgram(h, k)
        for p, big in zip(partition.paths, large):
            for i, a in enumerate(p):
                seq.append(a)
                if i + 1 < len(p):
                    seq.append(small(a, p[i + 1]))
            seq.append(g.b_vertex(big))
    cycle = CycleFamily((tuple(seq),))
    cycle.validate(g.to_graph(), min_length=4, even=True)
    return Deg2nConstruction(cycle, h, large, partition)


def cover_cycle_deg_2n(g: BipartiteGraph) -> CycleFamily:
    """A single cycle through every A-vertex of a dHp graph with B-degrees in {2, |A|}."""
    return deg2n_construction(g).cycle
