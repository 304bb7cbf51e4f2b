"""Seeded random dHp instances and exhaustive enumeration of tiny ones."""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .dhp import check_dhp
from .errors import PreconditionError, SamplingError
from .extremal import BinaryTreeSpec, binary_tree_dhp
from .graphs import BipartiteGraph
from .instance import InstanceFile

PROFILES = ("uniform", "two-n", "tree")
DEFAULT_RETRY_CAP = 20000


def _random_subset(rng: random.Random, n: int, size: int) -> int:
    mask = 0
    for a in rng.sample(range(n), size):
        mask |= 1 << a
    return mask


def random_bipartite(n: int, b_count: int, rng: random.Random,
                     min_degree: int = 2, max_degree: int | None = None) -> BipartiteGraph:
    """Each B-vertex picks a uniform degree in [min_degree, max_degree], then a uniform neighborhood."""
    hi = n if max_degree is None else min(max_degree, n)
    lo = min(min_degree, hi)
    adj = tuple(_random_subset(rng, n, rng.randint(lo, hi)) for _ in range(b_count))
    return BipartiteGraph(n, b_count, adj)


def _draw_uniform(n: int, b_count: int, rng: random.Random) -> BipartiteGraph:
    return random_bipartite(n, b_count, rng)


def _draw_two_n(n: int, b_count: int, rng: random.Random) -> BipartiteGraph:
    # the number of large B-vertices is drawn first so that sparse and dense mixes both occur
    k = rng.randint(1, b_count)
    large = set(rng.sample(range(b_count), k))
    full = (1 << n) - 1
    adj = tuple(full if j in large else _random_subset(rng, n, 2) for j in range(b_count))
    return BipartiteGraph(n, b_count, adj)


def _draw_tree(n: int, b_count: int, rng: random.Random) -> tuple[BipartiteGraph, int]:
    base = binary_tree_dhp(BinaryTreeSpec.random(n, rng))
    adj = list(base.adjacency)
    for _ in range(b_count - base.b_count):
        adj.append(_random_subset(rng, n, rng.randint(2, n)))
    r = rng.randint(0, n)
    for _ in range(r):
        j = rng.randrange(len(adj))
        adj[j] |= 1 << rng.randrange(n)
    return BipartiteGraph(n, b_count, tuple(adj)), r


def sample_dhp(n: int, b_count: int, profile: str = "uniform", seed: int = 0,
               retry_cap: int = DEFAULT_RETRY_CAP) -> InstanceFile:
    """Draw graphs of the given profile until one has the double Hall property.

    Profiles: ``uniform`` (random B-degrees in [2, n]), ``two-n`` (every
    B-degree 2 or n) and ``tree`` (random binary-tree graph, padded to
    ``b_count`` B-vertices, plus up to n random extra edges; always dHp).
    """
    if profile not in PROFILES:
        raise PreconditionError(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
    if n < 2:
        raise PreconditionError(f"need n >= 2, got {n}")
    if b_count < n:
        raise PreconditionError(f"b_count = {b_count} < n = {n}; X = A would violate the property")
    rng = random.Random(seed)
    rejected: Counter[int] = Counter()
    for attempt in range(1, retry_cap + 1):
        meta: dict[str, str] = {"generator": "sample", "seed": str(seed), "profile": profile}
        if profile == "uniform":
            g = _draw_uniform(n, b_count, rng)
        elif profile == "two-n":
            g = _draw_two_n(n, b_count, rng)
        else:
            g, r = _draw_tree(n, b_count, rng)
            meta["extra_edges"] = str(r)
        verdict = check_dhp(g)
        if verdict.holds:
            meta["attempts"] = str(attempt)
            return InstanceFile(g, meta)
        rejected[len(verdict.witness)] += 1
    stats = {"attempts": retry_cap, "rejected_by_witness_size": dict(sorted(rejected.items()))}
    raise SamplingError(f"no dHp sample for n={n}, b={b_count}, profile={profile}", stats)


def enumerate_instances(n: int, max_b: int, min_b: int | None = None) -> Iterator[BipartiteGraph]:
    """All graphs with |A| = n and min_b <= |B| <= max_b, B-degrees >= 2, up to relabeling B.

    B-neighborhoods are listed as a non-decreasing sequence of masks, so
    each isomorphism class under B-permutations appears once.
    """
    if min_b is None:
        min_b = n
    masks = [m for size in range(2, n + 1) for c in combinations(range(n), size)
             for m in [sum(1 << v for v in c)]]
    masks.sort()
    for b in range(min_b, max_b + 1):
        for combo in combinations_with_replacement(masks, b):
            yield BipartiteGraph(n, b, tuple(combo))
