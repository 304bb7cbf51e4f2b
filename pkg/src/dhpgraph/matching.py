"""Maximum cardinality matching in general graphs (Edmonds' blossom shrinking).

Straightforward O(V^3) formulation: a BFS from each exposed vertex grows an
alternating forest, odd cycles are contracted by relabelling their vertices
to a common base, and an augmenting path is flipped as soon as one reaches
an exposed vertex. A vertex from which no augmenting path exists can be
skipped for the rest of the run.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


def _adjacency(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u].append(v)
        adj[v].append(u)
    return adj


class _Blossom:
    def __init__(self, n: int, adj: list[list[int]]):
        self.n = n
        self.adj = adj
        self.mate = [-1] * n

    def greedy(self) -> None:
        mate = self.mate
        for v in range(self.n):
            if mate[v] == -1:
                for w in self.adj[v]:
                    if mate[w] == -1:
                        mate[v], mate[w] = w, v
                        break

    def _lca(self, a: int, b: int, base: list[int], parent: list[int]) -> int:
        mate = self.mate
        seen = [False] * self.n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def _mark(self, v: int, b: int, child: int, base: list[int], parent: list[int],
              blossom: list[bool]) -> None:
        mate = self.mate
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def augment_from(self, root: int) -> bool:
        n, adj, mate = self.n, self.adj, self.mate
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = self._lca(v, to, base, parent)
                    blossom = [False] * n
                    self._mark(v, cur, to, base, parent, blossom)
                    self._mark(to, cur, v, base, parent, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # flip the augmenting path ending at `to`
                        w = to
                        while w != -1:
                            pw = parent[w]
                            nxt = mate[pw]
                            mate[w], mate[pw] = pw, w
                            w = nxt
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False


def maximum_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or -1."""
    solver = _Blossom(n, _adjacency(n, edges))
    solver.greedy()
    for v in range(n):
        if solver.mate[v] == -1:
            solver.augment_from(v)
    return solver.mate


def perfect_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[int] | None:
    """A perfect matching as a ``mate`` list, or None if none exists.

    Stops at the first vertex that cannot be matched.
    """
    if n % 2:
        return None
    solver = _Blossom(n, _adjacency(n, edges))
    solver.greedy()
    for v in range(n):
        if solver.mate[v] == -1 and not solver.augment_from(v):
            return None
    return solver.mate


def matching_pairs(mate: list[int]) -> list[tuple[int, int]]:
    return [(v, w) for v, w in enumerate(mate) if v < w]
