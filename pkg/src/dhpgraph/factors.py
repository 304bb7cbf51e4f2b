"""2-factors: parity-factor conditions, violation scanners and constructions.

Constructions go through a vertex gadget and a perfect matching. Each
vertex v with a degree target of 2 becomes d(v) external nodes (one per
incident edge) plus two internal nodes, every external joined to both
internals. An original edge uv joins its external node at u to its
external node at v. Edge uv is in the factor exactly when both of its
external nodes are matched to internals. Vertices allowed to have degree 0
get an extra edge between their two internals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import InvariantError, PreconditionError, SizeCapError
from .graphs import BipartiteGraph, CycleFamily, Graph, cycles_from_degree2, iter_bits, mask_of
from .matching import perfect_matching

AnyGraph = Union[Graph, BipartiteGraph]

LOVASZ_VERTEX_CAP = 16
BELCK_VERTEX_CAP = 12
EXHAUSTIVE_EDGE_CAP = 64


@dataclass(frozen=True)
class ParityFactorSpec:
    """Degree bounds g(v) <= deg(v) <= f(v) with deg(v) = f(v) mod 2."""

    f: tuple[int, ...]
    g: tuple[int, ...]

    def __post_init__(self):
        if len(self.f) != len(self.g):
            raise PreconditionError("f and g must cover the same vertices")
        for v, (fv, gv) in enumerate(zip(self.f, self.g)):
            if gv < 0 or gv > fv:
                raise PreconditionError(f"need 0 <= g <= f at vertex {v}")
            if (fv - gv) % 2:
                raise PreconditionError(f"g and f differ in parity at vertex {v}")

    def f_sum(self, mask: int) -> int:
        return sum(self.f[v] for v in iter_bits(mask))

    def g_sum(self, mask: int) -> int:
        return sum(self.g[v] for v in iter_bits(mask))


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of evaluating (or scanning) a factor condition.

    For the Belck condition ``q_value`` holds the component term
    sum_C floor(e(C,T)/2).
    """

    satisfied: bool
    violating_s: tuple[int, ...] | None = None
    violating_t: tuple[int, ...] | None = None
    lhs: int = 0
    rhs: int = 0
    q_value: int = 0
    pairs_examined: int = 0
    rewritten: tuple[int, int] | None = field(default=None, compare=False)

    def as_dict(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "S": list(self.violating_s) if self.violating_s is not None else None,
            "T": list(self.violating_t) if self.violating_t is not None else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "q": self.q_value,
            "pairs_examined": self.pairs_examined,
        }


def _as_graph(x: AnyGraph) -> Graph:
    return x.to_graph() if isinstance(x, BipartiteGraph) else x


def covering_spec(g: BipartiteGraph) -> ParityFactorSpec:
    """f = 2 everywhere, g = 2 on A and 0 on B (unified vertex ids)."""
    n, m = g.a_count, g.b_count
    return ParityFactorSpec(f=(2,) * (n + m), g=(2,) * n + (0,) * m)


def two_factor_spec(graph: Graph) -> ParityFactorSpec:
    return ParityFactorSpec(f=(2,) * graph.vertex_count, g=(2,) * graph.vertex_count)


def _is_covering(g: AnyGraph, spec: ParityFactorSpec) -> bool:
    return isinstance(g, BipartiteGraph) and spec == covering_spec(g)


def _disjoint_masks(s: Iterable[int], t: Iterable[int]) -> tuple[int, int]:
    sm, tm = mask_of(s), mask_of(t)
    if sm & tm:
        raise PreconditionError(f"S and T overlap in {sorted(iter_bits(sm & tm))}")
    return sm, tm


def _q_mask(graph: Graph, sm: int, tm: int, spec: ParityFactorSpec | None) -> int:
    adj = graph.adjacency
    rest = graph.full & ~(sm | tm)
    q = 0
    for comp in graph.components(rest):
        total = 0
        for x in iter_bits(comp):
            total += (adj[x] & tm).bit_count()
            if spec is not None:
                total += spec.g[x]
        q += total & 1
    return q


def q_count(g: AnyGraph, s: Iterable[int], t: Iterable[int],
            spec: ParityFactorSpec | None = None) -> int:
    """Number of components C of G - (S u T) with g(C) + e(C, T) odd.

    ``spec=None`` takes g as identically zero.
    """
    graph = _as_graph(g)
    sm, tm = _disjoint_masks(s, t)
    return _q_mask(graph, sm, tm, spec)


def _lovasz_sides(graph: Graph, spec: ParityFactorSpec, sm: int, tm: int) -> tuple[int, int, int]:
    adj = graph.adjacency
    q = _q_mask(graph, sm, tm, spec)
    lhs = spec.g_sum(tm) + q
    rhs = spec.f_sum(sm) + sum((adj[v] & ~sm).bit_count() for v in iter_bits(tm))
    return lhs, rhs, q


def check_lovasz(g: AnyGraph, spec: ParityFactorSpec, s: Iterable[int],
                 t: Iterable[int]) -> ConditionReport:
    """Evaluate g(T) + q(S,T) <= f(S) + sum_{v in T} d_{G-S}(v) for one pair.

    For the covering spec of a bipartite graph the rewritten form
    2|T n A| + q <= 2|S| + sum d_{G-S}(v) is evaluated separately and must agree.
    """
    graph = _as_graph(g)
    sm, tm = _disjoint_masks(s, t)
    lhs, rhs, q = _lovasz_sides(graph, spec, sm, tm)
    rewritten = None
    if _is_covering(g, spec):
        adj = graph.adjacency
        lhs2 = 2 * (tm & g.full_a).bit_count() + _q_mask(graph, sm, tm, None)
        rhs2 = 2 * sm.bit_count() + sum((adj[v] & ~sm).bit_count() for v in iter_bits(tm))
        if (lhs2, rhs2) != (lhs, rhs):
            raise InvariantError(f"rewritten condition disagrees: {(lhs2, rhs2)} vs {(lhs, rhs)}")
        rewritten = (lhs2, rhs2)
    ok = lhs <= rhs
    return ConditionReport(
        satisfied=ok,
        violating_s=None if ok else tuple(iter_bits(sm)),
        violating_t=None if ok else tuple(iter_bits(tm)),
        lhs=lhs, rhs=rhs, q_value=q, pairs_examined=1, rewritten=rewritten)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def find_lovasz_violation(g: AnyGraph, spec: ParityFactorSpec, cap: int = LOVASZ_VERTEX_CAP,
                          restrict_t: bool | None = None, prune: bool = True) -> ConditionReport:
    """Scan disjoint pairs (S, T) for a violation of the parity-factor condition.

    ``restrict_t`` limits T to subsets of A; it defaults to on exactly for the
    covering spec of a bipartite graph, where T n B = {} loses nothing.

    With ``prune`` the S-search for a fixed T is a branch and bound. It uses
    q(S,T) <= #{x outside S u T : g(x) + |N(x) n T| odd} (every odd component
    holds such a vertex), which turns the slack into a sum of independent
    per-vertex terms.
    """
    graph = _as_graph(g)
    nv = graph.vertex_count
    if len(spec.f) != nv:
        raise PreconditionError("spec does not match the graph")
    if nv > cap:
        raise SizeCapError("|V|", nv, cap)
    if restrict_t is None:
        restrict_t = _is_covering(g, spec)
    if restrict_t and not isinstance(g, BipartiteGraph):
        raise PreconditionError("restricting T to A needs a bipartite graph")
    t_universe = g.full_a if restrict_t else graph.full
    full = graph.full
    adj = graph.adjacency
    examined = 0

    def violation(sm: int, tm: int, lhs: int, rhs: int, q: int) -> ConditionReport:
        return ConditionReport(False, tuple(iter_bits(sm)), tuple(iter_bits(tm)),
                               lhs, rhs, q, examined)

    for tm in range(t_universe + 1):
        if tm & ~t_universe:
            continue
        free = full & ~tm
        if not prune:
            for sm in _submasks(free):
                examined += 1
                lhs, rhs, q = _lovasz_sides(graph, spec, sm, tm)
                if lhs > rhs:
                    return violation(sm, tm, lhs, rhs, q)
            continue
        c = [(adj[x] & tm).bit_count() for x in range(nv)]
        base = spec.g_sum(tm) - sum(c[x] for x in iter_bits(tm))
        order = list(iter_bits(free))
        opt_s = [-spec.f[x] for x in order]
        opt_r = [((spec.g[x] + c[x]) & 1) - c[x] for x in order]
        suffix = [0] * (len(order) + 1)
        for i in range(len(order) - 1, -1, -1):
            suffix[i] = suffix[i + 1] + max(opt_s[i], opt_r[i])
        if base + suffix[0] <= 0:
            continue
        # iterative DFS over (index, S mask, partial bound)
        stack = [(0, 0, base)]
        while stack:
            i, sm, part = stack.pop()
            if part + suffix[i] <= 0:
                continue
            if i == len(order):
                examined += 1
                lhs, rhs, q = _lovasz_sides(graph, spec, sm, tm)
                if lhs > rhs:
                    return violation(sm, tm, lhs, rhs, q)
                continue
            x = order[i]
            stack.append((i + 1, sm | 1 << x, part + opt_s[i]))
            stack.append((i + 1, sm, part + opt_r[i]))
    return ConditionReport(True, pairs_examined=examined)


def _gadget_factor(graph: Graph, required: int) -> list[tuple[int, int]] | None:
    """Edges of a subgraph with degree 2 on ``required`` and 0 or 2 elsewhere."""
    nv = graph.vertex_count
    for v in iter_bits(required):
        if graph.degree(v) < 2:
            return None
    edges = graph.sorted_edges()
    # internals of v: 2v, 2v+1; externals follow
    inner = 2 * nv
    gadget: list[tuple[int, int]] = []
    ext: list[tuple[int, int]] = []
    for k, (u, v) in enumerate(edges):
        xu, xv = inner + 2 * k, inner + 2 * k + 1
        ext.append((xu, xv))
        gadget.append((xu, xv))
        for x, w in ((xu, u), (xv, v)):
            gadget.append((x, 2 * w))
            gadget.append((x, 2 * w + 1))
    for v in range(nv):
        if not required >> v & 1:
            gadget.append((2 * v, 2 * v + 1))
    mate = perfect_matching(inner + 2 * len(edges), gadget)
    if mate is None:
        return None
    chosen = []
    for (u, v), (xu, xv) in zip(edges, ext):
        in_u = mate[xu] < inner
        in_v = mate[xv] < inner
        if in_u != in_v:
            raise InvariantError(f"edge ({u}, {v}) matched inward at one end only")
        if in_u:
            if mate[xu] // 2 != u or mate[xv] // 2 != v:
                raise InvariantError(f"edge ({u}, {v}) matched to a foreign internal node")
            chosen.append((u, v))
    deg = [0] * nv
    for u, v in chosen:
        deg[u] += 1
        deg[v] += 1
    for v in range(nv):
        if deg[v] not in (0, 2) or (required >> v & 1 and deg[v] != 2):
            raise InvariantError(f"vertex {v} has degree {deg[v]} in the reconstructed factor")
    return chosen


def find_covering_two_factor(g: BipartiteGraph) -> CycleFamily | None:
    """Vertex-disjoint cycles through every A-vertex (unified vertex ids), or None."""
    if g.a_count < 2:
        raise PreconditionError("need |A| >= 2")
    chosen = _gadget_factor(g.to_graph(), g.full_a)
    return None if chosen is None else cycles_from_degree2(chosen)


def find_general_two_factor(graph: Graph) -> CycleFamily | None:
    """Spanning 2-regular subgraph as a cycle family, or None."""
    if graph.vertex_count < 2:
        raise PreconditionError("need at least 2 vertices")
    chosen = _gadget_factor(graph, graph.full)
    return None if chosen is None else cycles_from_degree2(chosen)


def find_two_factor_exhaustive(g: AnyGraph, spec: ParityFactorSpec | None = None,
                               cap: int = EXHAUSTIVE_EDGE_CAP) -> CycleFamily | None:
    """Exact edge-by-edge backtracking for a (g,f)-parity factor with f in {0, 2}.

    Used as ground truth for the gadget reduction. ``spec`` defaults to the
    covering spec for bipartite input and to a full 2-factor otherwise.
    """
    graph = _as_graph(g)
    if spec is None:
        spec = covering_spec(g) if isinstance(g, BipartiteGraph) else two_factor_spec(graph)
    if any(fv not in (0, 2) for fv in spec.f):
        raise PreconditionError("exhaustive oracle supports f(v) in {0, 2} only")
    edges = graph.sorted_edges()
    if len(edges) > cap:
        raise SizeCapError("e(G)", len(edges), cap)
    nv = graph.vertex_count
    f, lo = spec.f, spec.g
    remaining = [graph.degree(v) for v in range(nv)]
    deg = [0] * nv
    for v in range(nv):
        if remaining[v] < lo[v]:
            return None
    chosen: list[tuple[int, int]] = []

    def ok(x: int) -> bool:
        if deg[x] + remaining[x] < lo[x]:
            return False
        return remaining[x] > 0 or (deg[x] - f[x]) % 2 == 0

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        if deg[u] < f[u] and deg[v] < f[v]:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            if ok(u) and ok(v) and rec(i + 1):
                return True
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if ok(u) and ok(v) and rec(i + 1):
            return True
        remaining[u] += 1
        remaining[v] += 1
        return False

    if not rec(0):
        return None
    return cycles_from_degree2(chosen)


def _belck_sides(graph: Graph, sm: int, tm: int) -> tuple[int, int, int]:
    adj = graph.adjacency
    rest = graph.full & ~(sm | tm)
    term = 0
    for comp in graph.components(rest):
        e = sum((adj[x] & tm).bit_count() for x in iter_bits(comp))
        term += e // 2
    return tm.bit_count(), sm.bit_count() + term, term


def check_belck(graph: Graph, s: Iterable[int], t: Iterable[int]) -> ConditionReport:
    """Evaluate |T| <= |S| + sum_C floor(e(C,T)/2) over components C of G - (S u T)."""
    sm, tm = _disjoint_masks(s, t)
    if not graph.is_independent(tm):
        raise PreconditionError("T must be an independent set")
    lhs, rhs, term = _belck_sides(graph, sm, tm)
    ok = lhs <= rhs
    return ConditionReport(ok, None if ok else tuple(iter_bits(sm)),
                           None if ok else tuple(iter_bits(tm)), lhs, rhs, term, 1)


def find_belck_violation(graph: Graph, cap: int = BELCK_VERTEX_CAP) -> ConditionReport:
    """Scan all (S, T) with T independent; first violation or satisfied overall."""
    nv = graph.vertex_count
    if nv > cap:
        raise SizeCapError("|V|", nv, cap)
    examined = 0
    for tm in range(graph.full + 1):
        if not graph.is_independent(tm):
            continue
        for sm in _submasks(graph.full & ~tm):
            examined += 1
            lhs, rhs, term = _belck_sides(graph, sm, tm)
            if lhs > rhs:
                return ConditionReport(False, tuple(iter_bits(sm)), tuple(iter_bits(tm)),
                                       lhs, rhs, term, examined)
    return ConditionReport(True, pairs_examined=examined)
