"""Counterexample hunt: does every dHp graph have a single cycle through all of A?

Each instance gets its own seed derived from the run seed and its index,
so results do not depend on how instances are spread over workers.
Outcomes are sorted by index before aggregation.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .dhp import check_dhp, max_deficiency_witness
from .errors import PreconditionError
from .factors import find_covering_two_factor
from .graphs import BipartiteGraph, to_colored_multigraph
from .instance import emit_instance
from .rainbow.hamiltonian import HAMILTON_CAP, ORACLE_CAP, rainbow_cycle_oracle, rainbow_hamiltonian_search
from .sampling import PROFILES, enumerate_instances, sample_dhp

REVERIFY_ORACLE_MAX_N = 7


@dataclass(frozen=True)
class SearchConfig:
    n_min: int = 3
    n_max: int = 6
    samples: int = 100
    seed: int = 0
    profile: str = "uniform"  # one of PROFILES, or "mixed"
    b_extra: int = 2  # |B| is drawn from [n, n + b_extra]
    workers: int = 1
    cap: int = HAMILTON_CAP
    node_limit: int | None = None
    oracle_max_n: int = 0  # cross-check every instance with n <= this against the permutation oracle
    exhaustive: bool = False  # enumerate all graphs with n in [n_min, n_max], |B| <= max_b
    max_b: int = 5

    def validate(self) -> None:
        if self.profile not in PROFILES + ("mixed",):
            raise PreconditionError(f"unknown profile {self.profile!r}")
        if not 2 <= self.n_min <= self.n_max:
            raise PreconditionError(f"need 2 <= n_min <= n_max, got {self.n_min}, {self.n_max}")
        if self.n_max > self.cap:
            raise PreconditionError(f"n_max = {self.n_max} exceeds the search cap {self.cap}")
        if self.oracle_max_n > ORACLE_CAP:
            raise PreconditionError(f"oracle_max_n above {ORACLE_CAP} is not supported")
        if self.samples < 0 or self.b_extra < 0 or self.workers < 1:
            raise PreconditionError("samples, b_extra must be >= 0 and workers >= 1")


@dataclass(frozen=True)
class InstanceOutcome:
    index: int
    seed: int | None
    n: int
    b: int
    dhp: bool
    two_factor: bool = False
    cycle: bool = False
    nodes: int = 0
    exhaustive: bool = True
    oracle_checked: bool = False
    oracle_agrees: bool = True
    contradiction: str | None = None
    counterexample: dict | None = None


@dataclass
class SearchReport:
    config: SearchConfig
    tested: int = 0
    dhp_holding: int = 0
    two_factors_found: int = 0
    cycles_found: int = 0
    oracle_checked: int = 0
    nodes_expanded: int = 0
    unresolved: list[int] = field(default_factory=list)
    oracle_disagreements: list[int] = field(default_factory=list)
    contradictions: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def confirmed_counterexamples(self) -> list[dict]:
        return [c for c in self.counterexamples if c["reverification"]["confirmed"]]

    def exit_code(self) -> int:
        if self.contradictions or self.oracle_disagreements:
            return 4
        if self.counterexamples or self.unresolved:
            return 1
        return 0

    def as_dict(self, include_timing: bool = False) -> dict:
        config = asdict(self.config)
        del config["workers"]  # the report must not depend on the worker count
        out = {
            "config": config,
            "instances_tested": self.tested,
            "dhp_holding": self.dhp_holding,
            "two_factors_found": self.two_factors_found,
            "cycles_found": self.cycles_found,
            "oracle_checked": self.oracle_checked,
            "nodes_expanded": self.nodes_expanded,
            "unresolved": self.unresolved,
            "oracle_disagreements": self.oracle_disagreements,
            "contradictions": self.contradictions,
            "counterexamples": self.counterexamples,
        }
        if include_timing:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out


def instance_seed(run_seed: int, index: int) -> int:
    return random.Random(f"{run_seed}/{index}").getrandbits(48)


def reverify(g: BipartiteGraph) -> dict:
    """Independent second look at a candidate: unpruned dHp scan plus brute force when small."""
    verdict = max_deficiency_witness(g)
    out = {"dhp_unpruned": verdict.holds, "oracle_run": False, "oracle_found": None}
    if g.a_count <= REVERIFY_ORACLE_MAX_N:
        m = to_colored_multigraph(g, skip_low_degree=True)
        out["oracle_run"] = True
        out["oracle_found"] = rainbow_cycle_oracle(m) is not None
    out["confirmed"] = verdict.holds and not out["oracle_found"]
    return out


def evaluate_instance(g: BipartiteGraph, index: int, seed: int | None, config: SearchConfig,
                      metadata: dict | None = None) -> InstanceOutcome:
    n, b = g.a_count, g.b_count
    if not check_dhp(g).holds:
        return InstanceOutcome(index, seed, n, b, False)
    contradiction = None
    family = find_covering_two_factor(g)
    if family is None:
        contradiction = "dHp graph without a covering 2-factor"
    m = to_colored_multigraph(g, skip_low_degree=True)
    res = rainbow_hamiltonian_search(m, config.cap, config.node_limit)
    found = res.cycle is not None
    oracle_checked = n <= config.oracle_max_n
    agrees = True
    if oracle_checked:
        agrees = (rainbow_cycle_oracle(m) is not None) == found
    counterexample = None
    if not found and res.exhaustive:
        counterexample = {
            "index": index,
            "seed": seed,
            "instance": emit_instance(g, metadata),
            "attestation": {"nodes_expanded": res.nodes_expanded, "exhaustive": True,
                            "cap": config.cap},
            "reverification": reverify(g),
        }
    return InstanceOutcome(index, seed, n, b, True, family is not None, found, res.nodes_expanded,
                           res.exhaustive, oracle_checked, agrees, contradiction, counterexample)


def _sampled(index: int, config: SearchConfig) -> InstanceOutcome:
    seed = instance_seed(config.seed, index)
    rng = random.Random(seed)
    n = rng.randint(config.n_min, config.n_max)
    b = rng.randint(n, n + config.b_extra)
    profile = rng.choice(PROFILES) if config.profile == "mixed" else config.profile
    inst = sample_dhp(n, b, profile, seed=rng.getrandbits(48))
    return evaluate_instance(inst.graph, index, seed, config, inst.metadata)


def _enumerated(job: tuple[int, BipartiteGraph, SearchConfig]) -> InstanceOutcome:
    index, g, config = job
    return evaluate_instance(g, index, None, config, {"generator": "enumerate"})


def _sampled_job(job: tuple[int, SearchConfig]) -> InstanceOutcome:
    return _sampled(*job)


def search_counterexamples(config: SearchConfig) -> SearchReport:
    config.validate()
    start = time.perf_counter()
    if config.exhaustive:
        jobs = [(i, g, config) for i, g in enumerate(
            g for n in range(config.n_min, config.n_max + 1)
            for g in enumerate_instances(n, config.max_b))]
        fn = _enumerated
    else:
        jobs = [(i, config) for i in range(config.samples)]
        fn = _sampled_job
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * config.workers))))
    else:
        outcomes = [fn(j) for j in jobs]
    outcomes.sort(key=lambda o: o.index)

    report = SearchReport(config)
    for o in outcomes:
        report.tested += 1
        if not o.dhp:
            continue
        report.dhp_holding += 1
        report.two_factors_found += o.two_factor
        report.cycles_found += o.cycle
        report.oracle_checked += o.oracle_checked
        report.nodes_expanded += o.nodes
        if not o.exhaustive:
            report.unresolved.append(o.index)
        if not o.oracle_agrees:
            report.oracle_disagreements.append(o.index)
        if o.contradiction:
            report.contradictions.append({"index": o.index, "seed": o.seed, "reason": o.contradiction})
        if o.counterexample:
            report.counterexamples.append(o.counterexample)
    report.wall_time = time.perf_counter() - start
    return report
