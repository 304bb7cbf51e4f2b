"""Double Hall property: 2-neighborhoods and exhaustive verification.

The check enumerates subsets X of A level by level (size ascending,
lexicographic within a level). A subset whose 2-neighborhood already has
at least |A| elements is *saturated*; since N^2 is monotone under
inclusion every superset is then safe and never generated. A candidate of
size s+1 is generated only if all of its s-subsets were unsaturated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import PreconditionError, SizeCapError
from .graphs import BipartiteGraph, Graph, bits, iter_bits

DEFAULT_CAP = 24


@dataclass(frozen=True)
class DhpVerdict:
    holds: bool
    witness: tuple[int, ...] | None = None
    deficiency: int | None = None
    subsets_examined: int = 0

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "deficiency": self.deficiency,
            "subsets_examined": self.subsets_examined,
        }


def _two_nbhd_count(masks: Sequence[int], x: int) -> int:
    count = 0
    for m in masks:
        y = m & x
        if y & (y - 1):
            count += 1
    return count


def _two_nbhd_mask(masks: Sequence[int], x: int) -> int:
    out = 0
    for j, m in enumerate(masks):
        y = m & x
        if y & (y - 1):
            out |= 1 << j
    return out


def two_neighborhood(g: BipartiteGraph, x: int) -> int:
    """Mask of B-vertices with at least two neighbors in the A-subset ``x``."""
    return _two_nbhd_mask(g.adjacency, x)


def two_neighborhood_general(g: Graph, x: int) -> int:
    """Vertices of ``g`` (possibly inside ``x``) with at least two neighbors in ``x``."""
    return _two_nbhd_mask(g.adjacency, x)


def _levelwise_scan(masks: Sequence[int], universe: int, target: int) -> DhpVerdict:
    """Find the first X (size >= 2, size-ascending, lex) with |N^2(X)| < |X|.

    ``masks`` are the neighborhoods (as masks over the universe) of the
    vertices that can lie in N^2; ``target`` is the saturation threshold.
    """
    examined = 0
    # unsaturated subsets of the current size as (mask, largest element),
    # kept in lexicographic order of their sorted element tuples
    level = [(1 << v, v) for v in range(universe)]
    size = 1
    while level and size < universe:
        size += 1
        unsat_prev = {m for m, _ in level}
        nxt = []
        for pmask, last in level:
            for j in range(last + 1, universe):
                cand = pmask | 1 << j
                if size > 2 and any(cand ^ (1 << v) not in unsat_prev for v in iter_bits(pmask)):
                    continue
                examined += 1
                cnt = _two_nbhd_count(masks, cand)
                if cnt < size:
                    return DhpVerdict(False, tuple(iter_bits(cand)), size - cnt, examined)
                if cnt < target:
                    nxt.append((cand, j))
        level = nxt
    return DhpVerdict(True, None, None, examined)


def check_dhp(g: BipartiteGraph, cap: int = DEFAULT_CAP) -> DhpVerdict:
    """Decide whether ``g`` has the double Hall property.

    Returns the lexicographically smallest violating set among those of
    minimum size when the property fails.
    """
    if g.a_count < 2:
        raise PreconditionError("the double Hall property needs |A| >= 2")
    if g.a_count > cap:
        raise SizeCapError("|A|", g.a_count, cap)
    return _levelwise_scan(g.adjacency, g.a_count, g.a_count)


def check_dhp_general(g: Graph, cap: int = DEFAULT_CAP) -> DhpVerdict:
    """Same check for an arbitrary graph, with X ranging over subsets of V(G)."""
    if g.vertex_count < 2:
        raise PreconditionError("need at least 2 vertices")
    if g.vertex_count > cap:
        raise SizeCapError("|V|", g.vertex_count, cap)
    return _levelwise_scan(g.adjacency, g.vertex_count, g.vertex_count)


def is_dhp(g: BipartiteGraph, cap: int = DEFAULT_CAP) -> bool:
    return g.a_count >= 2 and check_dhp(g, cap).holds


def deficiency(g: BipartiteGraph, x: int) -> int:
    """|X| - |N^2(X)| for the A-subset ``x``."""
    return x.bit_count() - two_neighborhood(g, x).bit_count()


def max_deficiency_witness(g: BipartiteGraph, cap: int = DEFAULT_CAP) -> DhpVerdict:
    """Unpruned scan for the X (|X| >= 2) maximizing |X| - |N^2(X)|.

    Ties go to the smaller, then lexicographically first, set. ``holds`` is
    true when the maximum deficiency is at most 0.
    """
    if g.a_count < 2:
        raise PreconditionError("the double Hall property needs |A| >= 2")
    if g.a_count > cap:
        raise SizeCapError("|A|", g.a_count, cap)
    best = None
    examined = 0
    for size in range(2, g.a_count + 1):
        for combo in combinations(range(g.a_count), size):
            x = 0
            for v in combo:
                x |= 1 << v
            examined += 1
            d = size - _two_nbhd_count(g.adjacency, x)
            if best is None or d > best[0]:
                best = (d, combo)
    d, combo = best
    if d <= 0:
        return DhpVerdict(True, None, None, examined)
    return DhpVerdict(False, combo, d, examined)


def describe_witness(g: BipartiteGraph, verdict: DhpVerdict) -> str:
    if verdict.holds:
        return "double Hall property holds"
    x = 0
    for v in verdict.witness:
        x |= 1 << v
    nb = bits(two_neighborhood(g, x))
    return (f"X = {list(verdict.witness)} has 2-neighborhood {nb} "
            f"of size {len(nb)} < {len(verdict.witness)}")


__all__ = [
    "DhpVerdict", "two_neighborhood", "two_neighborhood_general", "check_dhp",
    "check_dhp_general", "is_dhp", "max_deficiency_witness", "deficiency", "describe_witness", "iter_bits",
]
