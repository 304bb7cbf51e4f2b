"""Sparse double-Hall graphs from binary trees, edge-count bounds, degree balancing."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Any, Mapping

from .dhp import check_dhp, describe_witness
from .errors import GraphError, PreconditionError
from .graphs import BipartiteGraph, ColoredMultigraph, iter_bits

BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class BinaryTreeSpec:
    """Rooted tree in which every internal node has exactly two children.

    ``children`` maps each internal node to its (left, right) children; the
    root is ``root`` and every node not in ``children`` is a leaf.
    """

    children: Mapping[int, tuple[int, ...]]
    root: int = 0

    def __post_init__(self):
        parent: dict[int, int] = {}
        for node, kids in self.children.items():
            if len(kids) != 2:
                raise GraphError(f"node {node} has {len(kids)} children, need 2")
            for kid in kids:
                if kid in parent or kid == self.root:
                    raise GraphError(f"node {kid} has more than one parent")
                parent[kid] = node
        # every node must hang below the root
        seen = {self.root}
        stack = [self.root]
        while stack:
            for kid in self.children.get(stack.pop(), ()):
                seen.add(kid)
                stack.append(kid)
        if len(seen) != len(parent) + 1:
            raise GraphError("tree is disconnected or cyclic")

    @classmethod
    def complete(cls, n: int) -> BinaryTreeSpec:
        """Complete tree with n leaves (n a power of 2); nodes in heap order."""
        if n < 1 or n & (n - 1):
            raise PreconditionError(f"complete tree needs a power of 2 leaves, got {n}")
        return cls({i: (2 * i + 1, 2 * i + 2) for i in range(n - 1)})

    @classmethod
    def random(cls, n: int, seed: int | random.Random) -> BinaryTreeSpec:
        """Split uniformly chosen leaves until there are n of them."""
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        children: dict[int, tuple[int, int]] = {}
        leaves = [0]
        nxt = 1
        while len(leaves) < n:
            leaf = leaves.pop(rng.randrange(len(leaves)))
            children[leaf] = (nxt, nxt + 1)
            leaves += [nxt, nxt + 1]
            nxt += 2
        return cls(children)

    @classmethod
    def caterpillar(cls, n: int) -> BinaryTreeSpec:
        """Every internal node has a leaf as left child; leaf depths 1, 2, ..., n-1, n-1."""
        children = {}
        spine = 0
        nxt = 1
        for _ in range(n - 1):
            children[spine] = (nxt, nxt + 1)
            spine = nxt + 1
            nxt += 2
        return cls(children)

    @classmethod
    def from_nested(cls, tree: Any) -> BinaryTreeSpec:
        """Build from nested pairs, a leaf being ``None``: ``((None, None), None)``."""
        children: dict[int, tuple[int, ...]] = {}
        counter = [0]

        def walk(t: Any) -> int:
            me = counter[0]
            counter[0] += 1
            if t is not None:
                children[me] = tuple(walk(s) for s in t)
            return me

        walk(tree)
        return cls(children)

    def leaves(self) -> list[int]:
        """Leaves from left to right."""
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            kids = self.children.get(node)
            if kids is None:
                out.append(node)
            else:
                stack.extend(reversed(kids))
        return out

    def internal_bfs(self) -> list[int]:
        out = []
        queue = deque([self.root])
        while queue:
            node = queue.popleft()
            if node in self.children:
                out.append(node)
                queue.extend(self.children[node])
        return out

    def ancestors(self) -> dict[int, list[int]]:
        anc: dict[int, list[int]] = {self.root: []}
        stack = [self.root]
        while stack:
            node = stack.pop()
            for kid in self.children.get(node, ()):
                anc[kid] = anc[node] + [node]
                stack.append(kid)
        return anc


def binary_tree_dhp(spec: BinaryTreeSpec) -> BipartiteGraph:
    """A = leaves, B = internal nodes (BFS order) then an extra vertex y.

    Each leaf is joined to all of its ancestors and to y.
    """
    leaves = spec.leaves()
    if len(leaves) < 2:
        raise PreconditionError("need at least 2 leaves")
    internal = spec.internal_bfs()
    b_index = {node: j for j, node in enumerate(internal)}
    y = len(internal)
    anc = spec.ancestors()
    edges = []
    for a, leaf in enumerate(leaves):
        for node in anc[leaf]:
            edges.append((a, b_index[node]))
        edges.append((a, y))
    return BipartiteGraph.from_edge_list(len(leaves), y + 1, edges)


def complete_tree_dhp(n: int) -> BipartiteGraph:
    return binary_tree_dhp(BinaryTreeSpec.complete(n))


def edge_potential(m: ColoredMultigraph, w: int) -> int:
    """Sum over colors with an edge inside ``w`` of (restricted clique size - 1)."""
    total = 0
    for clique in m.cliques.values():
        r = (clique & w).bit_count()
        if r >= 2:
            total += r - 1
    return total


def crossing_colors(m: ColoredMultigraph, s: int, t: int) -> int:
    """Number of colors with an edge between the disjoint sets ``s`` and ``t``."""
    return sum(1 for c in m.cliques.values() if c & s and c & t)


def lower_bound(n: int, b_count: int) -> float:
    return 0.5 * n * math.log2(n) + b_count


def upper_bound(n: int) -> float:
    return n * math.log2(n) + n


@dataclass(frozen=True)
class BoundReport:
    holds: bool
    edges: int
    bound: float
    upper: float

    def as_dict(self) -> dict:
        return {"holds": self.holds, "edges": self.edges,
                "lower_bound": self.bound, "upper_bound_tree": self.upper}


def check_lower_bound(g: BipartiteGraph, verify: bool = True) -> BoundReport:
    """e(G) >= n log2(n) / 2 + |B| for a dHp graph without isolated vertices."""
    for a in range(g.a_count):
        if g.degree_a(a) == 0:
            raise PreconditionError(f"A-vertex {a} is isolated")
    for j in range(g.b_count):
        if g.degree_b(j) == 0:
            raise PreconditionError(f"B-vertex {j} is isolated")
    if verify:
        verdict = check_dhp(g)
        if not verdict.holds:
            raise PreconditionError(describe_witness(g, verdict))
    bound = lower_bound(g.a_count, g.b_count)
    return BoundReport(g.edge_count >= bound - BOUND_SLACK, g.edge_count, bound,
                       upper_bound(g.a_count))


def balance_degrees(g: BipartiteGraph, u: int, v: int, verify: bool = False) -> BipartiteGraph:
    """Give u the neighborhood of v, then add a new B-vertex adjacent to both.

    Requires d(u) > d(v) + 2; the edge count drops by d(u) - d(v) - 2.
    """
    du, dv = g.degree_a(u), g.degree_a(v)
    if du <= dv + 2:
        raise PreconditionError(f"need d(u) > d(v) + 2, have d({u}) = {du}, d({v}) = {dv}")
    if verify:
        verdict = check_dhp(g)
        if not verdict.holds:
            raise PreconditionError(describe_witness(g, verdict))
    nv = g.a_adjacency[v]
    adj = []
    for j, m in enumerate(g.adjacency):
        m &= ~(1 << u)
        if nv >> j & 1:
            m |= 1 << u
        adj.append(m)
    adj.append(1 << u | 1 << v)
    return BipartiteGraph(g.a_count, g.b_count + 1, tuple(adj))


__all__ = [
    "BinaryTreeSpec", "binary_tree_dhp", "complete_tree_dhp", "edge_potential",
    "crossing_colors", "lower_bound", "upper_bound", "BoundReport", "check_lower_bound",
    "balance_degrees", "iter_bits",
]
