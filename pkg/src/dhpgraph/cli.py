"""Command-line interface.

Every subcommand writes one result document to stdout (JSON with a fixed
key order, or DOT with ``--format dot`` where a drawing makes sense).
Exit codes: 0 holds / found, 1 fails / none, 2 usage, parse or
precondition error, 3 size cap exceeded, 4 a proven guarantee failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .dhp import DEFAULT_CAP, check_dhp, two_neighborhood
from .errors import (
    GraphError,
    InstanceFormatError,
    PaperContradiction,
    PreconditionError,
    SamplingError,
    SizeCapError,
)
from .extremal import BinaryTreeSpec, binary_tree_dhp, check_lower_bound
from .factors import LOVASZ_VERTEX_CAP, covering_spec, find_covering_two_factor, find_lovasz_violation
from .graphs import BipartiteGraph, CycleFamily, bits, mask_of, to_colored_multigraph
from .instance import emit_instance, export_dot, read_instance
from .rainbow import (
    EdgeColoredGraph,
    deg2n_construction,
    double_factorial_bound,
    find_rainbow_path,
    minimal_span_slack,
    rainbow_hamiltonian_search,
    thin_colors,
)
from .rainbow.hamiltonian import HAMILTON_CAP
from .sampling import DEFAULT_RETRY_CAP, PROFILES, sample_dhp
from .search import SearchConfig, search_counterexamples

EXIT_OK, EXIT_NONE, EXIT_USAGE, EXIT_CAP, EXIT_CONTRADICTION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _effective_cap(args: argparse.Namespace, default: int) -> int:
    cap = args.cap if args.cap is not None else default
    if cap > default and not args.unsafe_cap:
        raise UsageError(f"--cap {cap} is above the default {default}; add --unsafe-cap to allow it")
    return cap


def _load(args: argparse.Namespace):
    if args.instance == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.instance, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.instance}: {exc.strerror}") from None
    return read_instance(text)


def _summary(g: BipartiteGraph) -> dict:
    return {"a_count": g.a_count, "b_count": g.b_count, "edges": g.edge_count}


def _labels(g: BipartiteGraph, seq: Sequence[int]) -> list[str]:
    return [g.label(v) for v in seq]


def _family_doc(g: BipartiteGraph, fam: CycleFamily) -> list[list[str]]:
    return [_labels(g, cyc) for cyc in fam.cycles]


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def cmd_check_dhp(args) -> int:
    g = _load(args).graph
    verdict = check_dhp(g, _effective_cap(args, DEFAULT_CAP))
    doc = {"command": "check-dhp", "instance": _summary(g), **verdict.as_dict()}
    if not verdict.holds:
        doc["two_neighborhood"] = _labels(g, [g.b_vertex(j) for j in bits(
            two_neighborhood(g, mask_of(verdict.witness)))])
    _emit(doc)
    return EXIT_OK if verdict.holds else EXIT_NONE


def cmd_two_factor(args) -> int:
    g = _load(args).graph
    fam = find_covering_two_factor(g)
    doc = {"command": "two-factor", "instance": _summary(g), "found": fam is not None}
    if fam is not None:
        if args.format == "dot":
            sys.stdout.write(export_dot(g, fam))
            return EXIT_OK
        doc["cycles"] = _family_doc(g, fam)
        _emit(doc)
        return EXIT_OK
    nv = g.a_count + g.b_count
    if nv <= _effective_cap(args, LOVASZ_VERTEX_CAP):
        report = find_lovasz_violation(g, covering_spec(g), cap=nv)
        doc["certificate"] = report.as_dict()
        if report.satisfied:
            raise PaperContradiction("no covering 2-factor although the factor condition holds")
    else:
        doc["certificate"] = None
    verdict = check_dhp(g)
    doc["dhp"] = verdict.holds
    _emit(doc)
    if verdict.holds:
        sys.stderr.write("dhp: graph has the double Hall property but no covering 2-factor\n")
        return EXIT_CONTRADICTION
    return EXIT_NONE


def cmd_find_cycle(args) -> int:
    g = _load(args).graph
    m = to_colored_multigraph(g, skip_low_degree=True)
    res = rainbow_hamiltonian_search(m, _effective_cap(args, HAMILTON_CAP), args.node_limit)
    if res.cycle is not None and args.format == "dot":
        sys.stdout.write(export_dot(g, res.cycle.to_cycle_family(g)))
        return EXIT_OK
    doc = {"command": "find-cycle", "instance": _summary(g), **res.as_dict()}
    if res.cycle is not None:
        doc["cycle"] = _family_doc(g, res.cycle.to_cycle_family(g))[0]
    _emit(doc)
    return EXIT_OK if res.cycle is not None else EXIT_NONE


def cmd_cover_deg2n(args) -> int:
    g = _load(args).graph
    verdict = check_dhp(g, _effective_cap(args, DEFAULT_CAP))
    if not verdict.holds:
        _emit({"command": "cover-deg2n", "instance": _summary(g), "dhp": False,
               "witness": list(verdict.witness)})
        return EXIT_NONE
    con = deg2n_construction(g, verify=False)
    if args.format == "dot":
        sys.stdout.write(export_dot(g, con.cycle))
        return EXIT_OK
    doc = {
        "command": "cover-deg2n",
        "instance": _summary(g),
        "dhp": True,
        "large": [f"b{j}" for j in con.large],
        "k": con.k,
        "paths": [list(p) for p in con.partition.paths] if con.partition else None,
        "independent": list(con.partition.independent) if con.partition else None,
        "cycle": _family_doc(g, con.cycle)[0],
    }
    _emit(doc)
    return EXIT_OK


def cmd_thin_colors(args) -> int:
    g = _load(args).graph
    m = to_colored_multigraph(g, skip_low_degree=True)
    thinned = thin_colors(m)
    doc = {
        "command": "thin-colors",
        "instance": _summary(g),
        "delta": thinned.delta,
        "bound": thinned.bound,
        "max_usage": thinned.max_usage,
        "usage": {f"b{c}": k for c, k in sorted(thinned.usage.items())},
        "coloring": [[u, v, f"b{c}"] for (u, v), c in sorted(thinned.chosen.items())],
        "orientation_imbalance": thinned.imbalance,
    }
    _emit(doc)
    return EXIT_OK if thinned.max_usage <= thinned.bound else EXIT_NONE


def cmd_rainbow_path(args) -> int:
    g = _load(args).graph
    thinned = thin_colors(to_colored_multigraph(g, skip_low_degree=True))
    gc = EdgeColoredGraph(g.a_count, dict(thinned.chosen))
    k = args.k if args.k is not None else minimal_span_slack(gc)
    path = find_rainbow_path(gc, k, args.length, check=not args.no_check)
    doc = {"command": "rainbow-path", "instance": _summary(g), "k": k, "length": args.length,
           "n0": double_factorial_bound(k, args.length), "found": path is not None}
    if path is not None:
        doc.update({"vertices": list(path.vertices), "colors": [f"b{c}" for c in path.colors],
                    "route": path.route})
    _emit(doc)
    return EXIT_OK if path is not None else EXIT_NONE


def cmd_gen_tree(args) -> int:
    if args.n < 2:
        raise PreconditionError("need n >= 2")
    if args.shape == "complete":
        spec = BinaryTreeSpec.complete(args.n)
    elif args.shape == "random":
        spec = BinaryTreeSpec.random(args.n, args.seed)
    else:
        spec = BinaryTreeSpec.caterpillar(args.n)
    g = binary_tree_dhp(spec)
    if args.format == "dot":
        sys.stdout.write(export_dot(g))
    else:
        meta = {"generator": "tree", "tree": args.shape}
        if args.shape == "random":
            meta["seed"] = args.seed
        sys.stdout.write(emit_instance(g, meta))
    return EXIT_OK


def cmd_sample(args) -> int:
    b = args.b if args.b is not None else args.n
    try:
        inst = sample_dhp(args.n, b, args.profile, args.seed, args.retry_cap)
    except SamplingError as exc:
        _emit({"command": "sample", "found": False, "stats": exc.stats})
        return EXIT_NONE
    if args.format == "dot":
        sys.stdout.write(export_dot(inst.graph))
    else:
        sys.stdout.write(emit_instance(inst.graph, inst.metadata))
    return EXIT_OK


def cmd_search(args) -> int:
    n_min = args.n_min if args.n_min is not None else args.n
    n_max = args.n_max if args.n_max is not None else args.n
    config = SearchConfig(
        n_min=n_min, n_max=n_max, samples=args.samples, seed=args.seed, profile=args.profile,
        b_extra=args.b_extra, workers=args.workers, cap=_effective_cap(args, HAMILTON_CAP),
        node_limit=args.node_limit, oracle_max_n=args.oracle_max_n,
        exhaustive=args.exhaustive, max_b=args.max_b,
    )
    report = search_counterexamples(config)
    _emit({"command": "search", **report.as_dict()})
    sys.stderr.write(f"dhp: search finished in {report.wall_time:.2f} s\n")
    return report.exit_code()


def cmd_bounds(args) -> int:
    g = _load(args).graph
    report = check_lower_bound(g)
    _emit({"command": "bounds", "instance": _summary(g), **report.as_dict()})
    if not report.holds:
        raise PaperContradiction(f"{report.edges} edges is below the lower bound {report.bound}")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load(args).graph
    fam = None
    if args.highlight == "factor":
        fam = find_covering_two_factor(g)
    elif args.highlight == "cycle":
        m = to_colored_multigraph(g, skip_low_degree=True)
        res = rainbow_hamiltonian_search(m, _effective_cap(args, HAMILTON_CAP))
        fam = res.cycle.to_cycle_family(g) if res.cycle else None
    sys.stdout.write(export_dot(g, fam))
    return EXIT_OK if args.highlight == "none" or fam is not None else EXIT_NONE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dhp", description="Double Hall property toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "dot"), default="text")
    common.add_argument("--cap", type=int, default=None, help="size cap for exponential routines")
    common.add_argument("--unsafe-cap", action="store_true", help="allow --cap above the default")

    def instance_cmd(name: str, fn: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("instance", help="instance file, or - for stdin")
        p.set_defaults(func=fn)
        return p

    instance_cmd("check-dhp", cmd_check_dhp, "decide the double Hall property")
    instance_cmd("two-factor", cmd_two_factor, "covering 2-factor via the matching gadget")
    p = instance_cmd("find-cycle", cmd_find_cycle, "single cycle through all of A (rainbow search)")
    p.add_argument("--node-limit", type=int, default=None)
    instance_cmd("cover-deg2n", cmd_cover_deg2n, "covering cycle when B-degrees are 2 or |A|")
    instance_cmd("thin-colors", cmd_thin_colors, "one color per edge with bounded usage")
    p = instance_cmd("rainbow-path", cmd_rainbow_path, "rainbow path in the thinned coloring")
    p.add_argument("--length", type=int, default=2, help="number of edges")
    p.add_argument("--k", type=int, default=None, help="span slack (default: smallest valid)")
    p.add_argument("--no-check", action="store_true", help="skip the precondition checks")
    instance_cmd("bounds", cmd_bounds, "edge-count lower bound")
    p = instance_cmd("export-dot", cmd_export_dot, "Graphviz drawing")
    p.add_argument("--highlight", choices=("none", "factor", "cycle"), default="none")

    p = sub.add_parser("gen-tree", parents=[common], help="binary-tree dHp instance")
    p.add_argument("--n", type=int, required=True, help="number of leaves (= |A|)")
    p.add_argument("--shape", choices=("complete", "random", "caterpillar"), default="complete")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen_tree)

    p = sub.add_parser("sample", parents=[common], help="random dHp instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, default=None, help="|B| (default: n)")
    p.add_argument("--profile", choices=PROFILES, default="uniform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retry-cap", type=int, default=DEFAULT_RETRY_CAP)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("search", parents=[common], help="counterexample search")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", choices=PROFILES + ("mixed",), default="uniform")
    p.add_argument("--b-extra", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--oracle-max-n", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--max-b", type=int, default=5)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, InstanceFormatError, PreconditionError, GraphError) as exc:
        sys.stderr.write(f"dhp: error: {exc}\n")
        return EXIT_USAGE
    except SizeCapError as exc:
        sys.stderr.write(f"dhp: size cap: {exc}\n")
        return EXIT_CAP
    except PaperContradiction as exc:
        sys.stderr.write(f"dhp: guarantee violated: {exc}\n")
        return EXIT_CONTRADICTION


if __name__ == "__main__":
    sys.exit(main())
