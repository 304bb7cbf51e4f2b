"""Balanced orientations of multigraphs and color thinning of colored multigraphs."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from ..errors import GraphError, InvariantError, PreconditionError
from ..graphs import ColoredMultigraph, iter_bits


@dataclass(frozen=True)
class Orientation:
    """``arcs[i]`` is edge i of the input as (tail, head)."""

    vertex_count: int
    arcs: tuple[tuple[int, int], ...]
    out_degree: tuple[int, ...]
    in_degree: tuple[int, ...]

    def imbalance(self, v: int) -> int:
        return self.out_degree[v] - self.in_degree[v]

    @property
    def max_imbalance(self) -> int:
        return max((abs(self.imbalance(v)) for v in range(self.vertex_count)), default=0)


def balanced_orientation(vertex_count: int, edges: Sequence[tuple[int, int]]) -> Orientation:
    """Orient a loopless multigraph so that |out - in| <= 1 at every vertex.

    Odd-degree vertices are joined to an auxiliary vertex, which makes every
    component Eulerian; edges are oriented in the direction an Euler tour
    traverses them and the auxiliary arcs are dropped. Tours start at the
    lowest vertex with unused edges and take incident edges in id order.
    """
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) out of range")
    aux = vertex_count
    all_edges = list(edges)
    degree = [0] * vertex_count
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    for v in range(vertex_count):
        if degree[v] % 2:
            all_edges.append((v, aux))
    incident: list[list[int]] = [[] for _ in range(vertex_count + 1)]
    for i, (u, v) in enumerate(all_edges):
        incident[u].append(i)
        incident[v].append(i)
    used = [False] * len(all_edges)
    ptr = [0] * (vertex_count + 1)
    direction: list[tuple[int, int] | None] = [None] * len(all_edges)

    for start in range(vertex_count + 1):
        stack = [start]
        while stack:
            v = stack[-1]
            inc = incident[v]
            while ptr[v] < len(inc) and used[inc[ptr[v]]]:
                ptr[v] += 1
            if ptr[v] == len(inc):
                stack.pop()
                continue
            e = inc[ptr[v]]
            used[e] = True
            a, b = all_edges[e]
            w = b if a == v else a
            direction[e] = (v, w)
            stack.append(w)

    arcs = tuple(direction[i] for i in range(len(edges)))
    out_deg = [0] * vertex_count
    in_deg = [0] * vertex_count
    for tail, head in arcs:
        out_deg[tail] += 1
        in_deg[head] += 1
    result = Orientation(vertex_count, arcs, tuple(out_deg), tuple(in_deg))
    if result.max_imbalance > 1:
        raise InvariantError("orientation is not balanced")
    return result


def thinning_bound(delta: int) -> int:
    """ceil(C(delta, 2) / 2)."""
    return (comb(delta, 2) + 1) // 2


def afr_precondition(delta: int, n: int) -> bool:
    """Whether ceil(C(delta, 2) / 2) < n / 64."""
    return 64 * thinning_bound(delta) < n


@dataclass(frozen=True)
class ThinnedColoring:
    """One color per edge of the complete graph, keyed by (u, v) with u < v."""

    chosen: dict[tuple[int, int], int]
    usage: dict[int, int]
    delta: int
    bound: int
    imbalance: int = 0  # max |d+ - d-| in the orientation of the color multigraph

    @property
    def max_usage(self) -> int:
        return max(self.usage.values(), default=0)


def thin_colors(m: ColoredMultigraph) -> ThinnedColoring:
    """Pick one color per edge so that no color is used more than ceil(C(delta,2)/2) times.

    Each edge keeps its two smallest color ids. Those pairs form a multigraph
    on the colors, one edge per original edge; after a balanced orientation
    each original edge takes the color at the head of its arc.
    """
    n = m.vertex_count
    mat = m.edge_color_matrix
    pairs = []
    kept = []
    for u in range(n):
        for v in range(u + 1, n):
            cs = mat[u][v]
            if cs.bit_count() < 2:
                raise PreconditionError(f"edge ({u}, {v}) carries fewer than 2 colors")
            it = iter_bits(cs)
            c1 = next(it)
            c2 = next(it)
            pairs.append((u, v))
            kept.append((c1, c2))
    index = {c: i for i, c in enumerate(m.color_ids)}
    orient = balanced_orientation(len(index), [(index[a], index[b]) for a, b in kept])
    chosen = {}
    usage = {c: 0 for c in m.color_ids}
    for edge, (_, head) in zip(pairs, orient.arcs):
        color = m.color_ids[head]
        chosen[edge] = color
        usage[color] += 1
    delta = m.max_clique_size
    bound = thinning_bound(delta)
    result = ThinnedColoring(chosen, usage, delta, bound, orient.max_imbalance)
    if result.max_usage > bound:
        raise InvariantError(f"color used {result.max_usage} times, bound {bound}")
    return result
