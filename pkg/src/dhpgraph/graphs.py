"""Core graph types: bipartite graphs, simple graphs, colored multigraphs, cycle families.

Vertex sets are bitmasks throughout. In a :class:`BipartiteGraph` the
adjacency is stored per B-vertex as a mask over A, which makes
2-neighborhood queries a popcount per B-vertex.

When a bipartite graph is viewed as a plain :class:`Graph` (``to_graph``),
A-vertices keep ids ``0..n-1`` and B-vertex ``j`` becomes ``n + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, InvariantError, PreconditionError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph G(A, B).

    ``adjacency[j]`` is the mask of A-vertices adjacent to B-vertex ``j``.
    """

    a_count: int
    b_count: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if self.a_count < 1:
            raise GraphError(f"a_count must be positive, got {self.a_count}")
        if self.b_count < 0:
            raise GraphError(f"b_count must be non-negative, got {self.b_count}")
        if len(self.adjacency) != self.b_count:
            raise GraphError(
                f"adjacency has {len(self.adjacency)} entries for b_count={self.b_count}")
        full = (1 << self.a_count) - 1
        for j, m in enumerate(self.adjacency):
            if m < 0 or m & ~full:
                raise GraphError(f"B-vertex {j} has neighbors outside A")

    @classmethod
    def from_edge_list(cls, a_count: int, b_count: int,
                       edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        if a_count < 1:
            raise GraphError(f"a_count must be positive, got {a_count}")
        if b_count < 0:
            raise GraphError(f"b_count must be non-negative, got {b_count}")
        adj = [0] * b_count
        for a, b in edges:
            if not (0 <= a < a_count) or not (0 <= b < b_count):
                raise GraphError(f"edge ({a}, {b}) out of range for A={a_count}, B={b_count}")
            if adj[b] >> a & 1:
                raise GraphError(f"duplicate edge ({a}, {b})")
            adj[b] |= 1 << a
        return cls(a_count, b_count, tuple(adj))

    @property
    def n(self) -> int:
        return self.a_count

    @property
    def full_a(self) -> int:
        return (1 << self.a_count) - 1

    @cached_property
    def a_adjacency(self) -> tuple[int, ...]:
        """Per A-vertex, the mask of adjacent B-vertices."""
        out = [0] * self.a_count
        for j, m in enumerate(self.adjacency):
            for a in iter_bits(m):
                out[a] |= 1 << j
        return tuple(out)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (a, b) pairs, sorted lexicographically."""
        return sorted((a, j) for j, m in enumerate(self.adjacency) for a in iter_bits(m))

    @cached_property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adjacency)

    def degree_a(self, a: int) -> int:
        return self.a_adjacency[a].bit_count()

    def degree_b(self, b: int) -> int:
        return self.adjacency[b].bit_count()

    def b_vertex(self, j: int) -> int:
        """Unified id of B-vertex ``j`` in :meth:`to_graph`."""
        return self.a_count + j

    def is_a(self, v: int) -> bool:
        return v < self.a_count

    def label(self, v: int) -> str:
        return f"a{v}" if v < self.a_count else f"b{v - self.a_count}"

    def to_graph(self) -> Graph:
        n = self.a_count
        return Graph.from_edges(n + self.b_count, ((a, n + b) for a, b in self.edges()))

    @property
    def a_mask_unified(self) -> int:
        return self.full_a

    def with_extra_edges(self, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        return BipartiteGraph.from_edge_list(self.a_count, self.b_count,
                                             list(self.edges()) + list(edges))


def from_edge_list(a_count: int, b_count: int,
                   edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    return BipartiteGraph.from_edge_list(a_count, b_count, edges)


def strip_degree_le1(g: BipartiteGraph) -> BipartiteGraph:
    """Drop B-vertices of degree at most 1; the remaining B-vertices keep their order."""
    kept = tuple(m for m in g.adjacency if m.bit_count() >= 2)
    return BipartiteGraph(g.a_count, len(kept), kept)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphError("vertex_count must be positive")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise GraphError(f"bad edge ({u}, {v})")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(vertex_count, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, frozenset())

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def full(self) -> int:
        return (1 << self.vertex_count) - 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adjacency[v] & mask) for v in iter_bits(mask))

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``mask``, as masks,
        ordered by lowest vertex."""
        if mask is None:
            mask = self.full
        adj = self.adjacency
        out = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= adj[v]
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            out.append(comp)
            rest &= ~comp
        return out


@dataclass(frozen=True, eq=True)
class ColoredMultigraph:
    """Complete graph on ``vertex_count`` vertices whose colors are cliques.

    ``cliques`` maps a color id to the vertex mask of its clique. The color
    set of an edge {u, v} is every color whose clique contains both ends.
    Colors derived from a bipartite graph keep the B-vertex index as id.
    """

    vertex_count: int
    cliques: dict[int, int]

    def __post_init__(self):
        if self.vertex_count < 2:
            raise GraphError("a colored multigraph needs at least 2 vertices")
        full = (1 << self.vertex_count) - 1
        for c, m in self.cliques.items():
            if c < 0:
                raise GraphError(f"negative color id {c}")
            if m & ~full:
                raise GraphError(f"color {c} has vertices out of range")
            if m.bit_count() < 2:
                raise GraphError(f"color {c} clique has fewer than 2 vertices")

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def color_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.cliques))

    @cached_property
    def edge_color_matrix(self) -> tuple[tuple[int, ...], ...]:
        """``matrix[u][v]`` is the mask of color ids on edge {u, v}."""
        n = self.vertex_count
        mat = [[0] * n for _ in range(n)]
        for c, m in self.cliques.items():
            vs = bits(m)
            bit = 1 << c
            for i, u in enumerate(vs):
                for v in vs[i + 1:]:
                    mat[u][v] |= bit
                    mat[v][u] |= bit
        return tuple(tuple(row) for row in mat)

    def edge_colors(self, u: int, v: int) -> list[int]:
        return bits(self.edge_color_matrix[u][v])

    def span_count(self, x: int) -> int:
        """Number of colors appearing on at least one edge inside vertex set ``x``."""
        return sum(1 for m in self.cliques.values() if (m & x) & ((m & x) - 1))

    @property
    def max_clique_size(self) -> int:
        return max((m.bit_count() for m in self.cliques.values()), default=0)


def to_colored_multigraph(g: BipartiteGraph, skip_low_degree: bool = False) -> ColoredMultigraph:
    """Color i's clique is N(b_i).

    B-vertices of degree < 2 are rejected unless ``skip_low_degree`` is set,
    in which case they are ignored (equivalent to :func:`strip_degree_le1`
    but keeping the original B indices as color ids).
    """
    if g.a_count < 2:
        raise PreconditionError("need |A| >= 2 for a colored multigraph")
    cliques = {}
    for j, m in enumerate(g.adjacency):
        if m.bit_count() < 2:
            if skip_low_degree:
                continue
            raise PreconditionError(f"B-vertex {j} has degree {m.bit_count()} < 2")
        cliques[j] = m
    return ColoredMultigraph(g.a_count, cliques)


@dataclass(frozen=True)
class CycleFamily:
    """Vertex-disjoint cycles, each a vertex sequence without repeating the start.

    ``colors``, if given, holds one color per cycle edge: ``colors[i][k]`` is
    the color of the edge from ``cycles[i][k]`` to ``cycles[i][k+1]`` (cyclically).
    """

    cycles: tuple[tuple[int, ...], ...]
    colors: tuple[tuple[int, ...], ...] | None = None

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for cyc in self.cycles:
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                out.add((u, v) if u < v else (v, u))
        return out

    def vertices(self) -> set[int]:
        return {v for cyc in self.cycles for v in cyc}

    def degree_map(self) -> dict[int, int]:
        deg: dict[int, int] = {}
        for u, v in self.edges():
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        return deg

    def validate(self, host: Graph, min_length: int = 3, even: bool = False) -> None:
        """Raise :class:`InvariantError` unless this is a valid family in ``host``."""
        seen: set[int] = set()
        for cyc in self.cycles:
            if len(cyc) < min_length:
                raise InvariantError(f"cycle {cyc} shorter than {min_length}")
            if even and len(cyc) % 2:
                raise InvariantError(f"cycle {cyc} has odd length")
            for v in cyc:
                if v in seen:
                    raise InvariantError(f"vertex {v} repeated")
                seen.add(v)
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                if not host.has_edge(u, v):
                    raise InvariantError(f"({u}, {v}) is not an edge")
        if self.colors is not None:
            used: set[int] = set()
            if len(self.colors) != len(self.cycles):
                raise InvariantError("color list does not match cycles")
            for cyc, cols in zip(self.cycles, self.colors):
                if len(cols) != len(cyc):
                    raise InvariantError("one color per cycle edge required")
                for c in cols:
                    if c in used:
                        raise InvariantError(f"color {c} used twice")
                    used.add(c)


def cycles_from_degree2(edges: Sequence[tuple[int, int]]) -> CycleFamily:
    """Decompose an edge set in which every touched vertex has degree 2 into cycles.

    Each walk starts at the lowest unvisited vertex and leaves via its lower neighbor.
    """
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for v, ns in nbrs.items():
        if len(ns) != 2:
            raise InvariantError(f"vertex {v} has degree {len(ns)} in a 2-regular edge set")
        ns.sort()
    cycles = []
    visited: set[int] = set()
    for start in sorted(nbrs):
        if start in visited:
            continue
        cyc = [start]
        visited.add(start)
        prev, cur = start, nbrs[start][0]
        while cur != start:
            cyc.append(cur)
            visited.add(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return CycleFamily(tuple(cycles))
