"""Exact search for rainbow Hamiltonian cycles in colored multigraphs.

A rainbow Hamiltonian cycle of the colored multigraph of a bipartite graph
G(A, B) is the same thing as a cycle of G through every A-vertex: the
chosen color of each edge names the B-vertex between its two ends.

The search fixes vertex 0 as the start and extends a path one vertex at a
time. Colors are not branched on: the edges of the current path keep a
system of distinct representatives, extended by one augmenting-path step
per new edge, so a vertex sequence is accepted as soon as *some* distinct
color choice exists. Reflections are removed by requiring the second vertex
to be smaller than the last.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..errors import InvariantError, SizeCapError
from ..graphs import BipartiteGraph, ColoredMultigraph, CycleFamily, iter_bits, to_colored_multigraph

HAMILTON_CAP = 14
ORACLE_CAP = 8


@dataclass(frozen=True)
class RainbowCycle:
    """Hamiltonian vertex order with ``colors[i]`` on edge order[i] -> order[i+1]."""

    order: tuple[int, ...]
    colors: tuple[int, ...]

    def validate(self, m: ColoredMultigraph) -> None:
        n = m.vertex_count
        if sorted(self.order) != list(range(n)):
            raise InvariantError(f"{self.order} is not a Hamiltonian order")
        if len(self.colors) != n:
            raise InvariantError("one color per cycle edge required")
        if len(set(self.colors)) != n:
            raise InvariantError(f"colors {self.colors} are not distinct")
        mat = m.edge_color_matrix
        for i, c in enumerate(self.colors):
            u, v = self.order[i], self.order[(i + 1) % n]
            if not mat[u][v] >> c & 1:
                raise InvariantError(f"color {c} not on edge ({u}, {v})")

    def to_cycle_family(self, g: BipartiteGraph) -> CycleFamily:
        """The covering cycle in ``g``: A-vertices interleaved with the color B-vertices."""
        seq = []
        for v, c in zip(self.order, self.colors):
            seq.append(v)
            seq.append(g.b_vertex(c))
        return CycleFamily((tuple(seq),))


@dataclass(frozen=True)
class HamiltonSearchResult:
    cycle: RainbowCycle | None
    nodes_expanded: int
    exhaustive: bool

    def as_dict(self) -> dict:
        return {
            "found": self.cycle is not None,
            "order": list(self.cycle.order) if self.cycle else None,
            "colors": list(self.cycle.colors) if self.cycle else None,
            "nodes_expanded": self.nodes_expanded,
            "exhaustive": self.exhaustive,
        }


class _NodeLimit(Exception):
    pass


def _augment(slot: int, slot_masks: list[int], owner: dict[int, int],
             slot_color: list[int], seen: list[int]) -> bool:
    """Kuhn step giving ``slot`` a color; ``seen[0]`` is the mask of colors already tried.

    A color nobody holds is taken before any re-seating is attempted.
    """
    cand = slot_masks[slot] & ~seen[0]
    seen[0] |= cand
    held = []
    while cand:
        low = cand & -cand
        cand ^= low
        c = low.bit_length() - 1
        if c not in owner:
            owner[c] = slot
            slot_color[slot] = c
            return True
        held.append(c)
    for c in held:
        if _augment(owner[c], slot_masks, owner, slot_color, seen):
            owner[c] = slot
            slot_color[slot] = c
            return True
    return False


def rainbow_hamiltonian_search(m: ColoredMultigraph, cap: int = HAMILTON_CAP,
                               node_limit: int | None = None) -> HamiltonSearchResult:
    """Exhaustive backtracking; ``cycle is None`` with ``exhaustive`` proves non-existence.

    For n = 2 the cycle is the doubled edge with two distinct colors.
    """
    n = m.vertex_count
    if n > cap:
        raise SizeCapError("n", n, cap)
    mat = m.edge_color_matrix
    if n == 2:
        cs = list(iter_bits(mat[0][1]))
        if len(cs) < 2:
            return HamiltonSearchResult(None, 1, True)
        return HamiltonSearchResult(RainbowCycle((0, 1), (cs[0], cs[1])), 1, True)
    if len(m.cliques) < n:
        return HamiltonSearchResult(None, 0, True)

    order = [0]
    slot_masks: list[int] = [0] * n
    nodes = 0
    found: list[RainbowCycle] = []
    full = (1 << n) - 1
    cliques = [(1 << c, mask) for c, mask in m.cliques.items()]

    def budget_ok(reach: int, future: int, depth: int, owner: dict[int, int],
                  slot_color: list[int]) -> bool:
        # the remaining edges stay inside ``reach`` and need colors the path can spare
        usable = 0
        for bit, mask in cliques:
            y = mask & reach
            if y & (y - 1):
                usable |= bit
        if usable.bit_count() < future:
            return False
        free = usable
        for c in owner:
            free &= ~(1 << c)
        if free.bit_count() >= future:
            return True
        masks = slot_masks[:depth] + [usable] * future
        own, sc = dict(owner), slot_color[:depth] + [-1] * future
        return all(_augment(depth + k, masks, own, sc, [0]) for k in range(future))

    def rec(cur: int, visited: int, owner: dict[int, int], slot_color: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _NodeLimit
        depth = len(order)
        if depth == n:
            slot = n - 1
            slot_masks[slot] = mat[cur][0]
            own, sc = dict(owner), list(slot_color)
            if slot_masks[slot] and _augment(slot, slot_masks, own, sc, [0]):
                found.append(RainbowCycle(tuple(order), tuple(sc)))
                return True
            return False
        row = mat[cur]
        cands = [v for v in range(1, n) if not visited >> v & 1 and row[v]]
        if depth == n - 1:
            cands = [v for v in cands if v > order[1]]
        cands.sort(key=lambda v: (row[v].bit_count(), v))
        slot = depth - 1
        for v in cands:
            slot_masks[slot] = row[v]
            own, sc = dict(owner), list(slot_color)
            if not _augment(slot, slot_masks, own, sc, [0]):
                continue
            rest = visited | 1 << v
            reach = (full & ~rest) | 1 << v | 1
            if not budget_ok(reach, n - depth, depth, own, sc):
                continue
            order.append(v)
            if rec(v, rest, own, sc):
                return True
            order.pop()
        return False

    try:
        rec(0, 1, {}, [-1] * n)
    except _NodeLimit:
        return HamiltonSearchResult(None, nodes, False)
    cycle = found[0] if found else None
    if cycle is not None:
        cycle.validate(m)
    return HamiltonSearchResult(cycle, nodes, True)


def find_rainbow_hamiltonian_cycle(m: ColoredMultigraph,
                                   cap: int = HAMILTON_CAP) -> RainbowCycle | None:
    return rainbow_hamiltonian_search(m, cap).cycle


def _distinct_choice(sets: list[list[int]], i: int, used: set[int], out: list[int]) -> bool:
    if i == len(sets):
        return True
    for c in sets[i]:
        if c not in used:
            used.add(c)
            out.append(c)
            if _distinct_choice(sets, i + 1, used, out):
                return True
            out.pop()
            used.discard(c)
    return False


def rainbow_cycle_oracle(m: ColoredMultigraph, cap: int = ORACLE_CAP) -> RainbowCycle | None:
    """Brute force over all vertex permutations and all color choices."""
    n = m.vertex_count
    if n > cap:
        raise SizeCapError("n", n, cap)
    if n == 2:
        cs = m.edge_colors(0, 1)
        return RainbowCycle((0, 1), (cs[0], cs[1])) if len(cs) >= 2 else None
    for perm in permutations(range(1, n)):
        order = (0,) + perm
        sets = [m.edge_colors(order[i], order[(i + 1) % n]) for i in range(n)]
        out: list[int] = []
        if _distinct_choice(sets, 0, set(), out):
            return RainbowCycle(order, tuple(out))
    return None


def covering_cycle(g: BipartiteGraph, cap: int = HAMILTON_CAP) -> tuple[CycleFamily | None, HamiltonSearchResult]:
    """A single cycle of ``g`` through all of A, via the colored multigraph."""
    m = to_colored_multigraph(g, skip_low_degree=True)
    res = rainbow_hamiltonian_search(m, cap)
    if res.cycle is None:
        return None, res
    return res.cycle.to_cycle_family(g), res
