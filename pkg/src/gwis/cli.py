"""The `gwis` command line.

Subcommands::

    solve            optimum weight and one optimal set
    check            uniqueness verdict by a chosen method
    epsilon          stability margin of a unique optimum
    stability        re-solve seeded perturbations inside the margin
    reduce           emit a ui1/ui2 hardness gadget instance
    matching-check   unique-maximum-matching test for edge-weighted graphs
    auction          winner determination + uniqueness for bid files
    gen              write seeded random instances
    fuzz             cross-validate fast checks against the oracle

Exit codes: 0 unique/pass, 1 usage or input error, 2 capacity error,
3 not-unique (a verdict, not a failure), 4 cross-validation disagreement.
With --json-lines each command prints machine-readable `key=value` records
instead of prose.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .auctions import parse_auction, resolve_auction
from .characterizations import (
    DEFAULT_SUBSET_CAP,
    AlternateAlphaSet,
    BoundaryViolation,
    DeletionSurvivor,
    Method,
    UniquenessReport,
    ViolatingSubset,
    check_lemma1,
    check_oracle,
    check_thm1,
    check_thm2_tree,
    check_thm3,
    check_thm4,
    check_unique_matching,
)
from .errors import CapacityError, GwisError, InputError
from .formats import parse_edge_weighted_graph, parse_graph, serialize_graph
from .fuzz import cross_validate
from .generate import MODES, FuzzConfig, generate_random, make_instance
from .graph import EdgeWeightedGraph, VertexSet, WeightedGraph
from .perturbation import DEFAULT_RESOLUTION, compute_radius, verify_stability
from .reductions import reduce_ui1, reduce_ui2
from .solver import (
    DEFAULT_ORACLE_CAP,
    enumerate_alpha_sets,
    solve_bnb,
    solve_oracle,
    weighted_matching_oracle,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAPACITY = 2
EXIT_NOT_UNIQUE = 3
EXIT_DISAGREEMENT = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; our contract reserves 2 for
    capacity problems, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class Emitter:
    """Switches between prose and `key=value` record output."""

    def __init__(self, json_lines: bool) -> None:
        self.json_lines = json_lines

    @staticmethod
    def _fmt(value) -> str:
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, (tuple, list, frozenset, set)):
            return ",".join(str(v) for v in sorted(value)) or "-"
        return str(value)

    def record(self, event: str, **fields) -> None:
        if self.json_lines:
            parts = [f"event={event}"]
            parts += [f"{k}={self._fmt(v)}" for k, v in fields.items()]
            print(" ".join(parts))

    def text(self, line: str = "") -> None:
        if not self.json_lines:
            print(line)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> WeightedGraph:
    doc = parse_graph(_read_text(path), source=path)
    for warning in doc.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return doc.graph


def _load_edge_weighted(path: str) -> EdgeWeightedGraph:
    return parse_edge_weighted_graph(_read_text(path), source=path)


def _parse_label_set(g: WeightedGraph, text: str) -> VertexSet:
    labels = [tok for tok in text.replace(",", " ").split() if tok]
    return g.set_by_labels(labels)


def _alpha_set(g: WeightedGraph, args) -> VertexSet:
    if getattr(args, "set", None):
        return _parse_label_set(g, args.set)
    return solve_oracle(g, args.cap).witness


def _unique_alpha_set(g: WeightedGraph, args) -> VertexSet:
    if getattr(args, "set", None):
        return _parse_label_set(g, args.set)
    family = enumerate_alpha_sets(g, args.cap)
    if not family.unique:
        raise InputError(
            f"graph has {len(family.sets)} optimal sets; pass --set to pick one "
            f"or use a unique instance"
        )
    return family.sets[0]


def _describe_witness(g: WeightedGraph, report: UniquenessReport) -> str | None:
    w = report.witness
    if w is None:
        return None
    if isinstance(w, DeletionSurvivor):
        return (
            f"deletion survivor {g.label(w.vertex)}: optimum without it is "
            f"{w.alpha_without}, not below {report.alpha}"
        )
    if isinstance(w, ViolatingSubset):
        return (
            f"violating subset {{{' '.join(g.labels_of(w.subset))}}}: weight "
            f"{w.subset_weight} vs pocket value {w.rival_weight}"
        )
    if isinstance(w, BoundaryViolation):
        return (
            f"boundary violation {{{' '.join(g.labels_of(w.subset))}}}: weight "
            f"{w.subset_weight} vs inside neighbors {w.boundary_weight}"
        )
    if isinstance(w, AlternateAlphaSet):
        return f"second optimal set {{{' '.join(g.labels_of(w.other))}}}"
    return str(w)


def _witness_record(g: WeightedGraph, report: UniquenessReport) -> str | None:
    w = report.witness
    if w is None:
        return None
    if isinstance(w, DeletionSurvivor):
        return g.label(w.vertex)
    if isinstance(w, (ViolatingSubset, BoundaryViolation)):
        return ",".join(g.labels_of(w.subset))
    if isinstance(w, AlternateAlphaSet):
        return ",".join(g.labels_of(w.other))
    return None


# -- subcommands ---------------------------------------------------------------


def _cmd_solve(args) -> int:
    g = _load_graph(args.file)
    result = solve_bnb(g) if args.solver == "bnb" else solve_oracle(g, args.cap)
    out = Emitter(args.json_lines)
    out.record(
        "solve",
        solver=args.solver,
        alpha=result.alpha,
        alpha_set=g.labels_of(result.witness),
    )
    out.text(f"alpha = {result.alpha}")
    out.text(f"alpha-set: {' '.join(g.labels_of(result.witness)) or '(empty)'}")
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _load_graph(args.file)
    if args.method == "oracle":
        i = _parse_label_set(g, args.set) if args.set else None
        report = check_oracle(g, i, args.cap)
    else:
        i = _alpha_set(g, args)
        if args.method == "thm1":
            report = check_thm1(g, i)
        elif args.method == "lemma1":
            report = check_lemma1(g, i, args.subset_cap)
        elif args.method == "tree":
            report = check_thm2_tree(g, i, args.subset_cap)
        elif args.method == "thm3":
            report = check_thm3(g, i, args.subset_cap)
        else:
            report = check_thm4(g, i, args.subset_cap)
    out = Emitter(args.json_lines)
    out.record(
        "check",
        method=report.method.value,
        verdict=report.verdict.value,
        alpha=report.alpha,
        alpha_set=g.labels_of(report.alpha_set),
        witness=_witness_record(g, report),
    )
    out.text(f"method = {report.method.value}")
    out.text(f"alpha = {report.alpha}")
    out.text(f"alpha-set: {' '.join(g.labels_of(report.alpha_set)) or '(empty)'}")
    out.text(f"verdict = {report.verdict.value}")
    described = _describe_witness(g, report)
    if described:
        out.text(f"witness: {described}")
    return EXIT_OK if report.passed else EXIT_NOT_UNIQUE


def _cmd_epsilon(args) -> int:
    g = _load_graph(args.file)
    i = _unique_alpha_set(g, args)
    radius = compute_radius(g, i, args.cap, args.subset_cap)
    out = Emitter(args.json_lines)
    out.record(
        "radius",
        alpha_set=g.labels_of(i),
        sigma=radius.sigma,
        eta=radius.eta,
        nu=radius.nu,
        delta=radius.delta,
        epsilon=radius.epsilon,
        n=radius.n,
    )
    out.text(f"alpha-set: {' '.join(g.labels_of(i))}")
    out.text(f"sigma = {radius.sigma}")
    out.text(f"eta = {radius.eta}")
    out.text(f"nu = {radius.nu if radius.nu is not None else '(undefined)'}")
    out.text(f"delta = {radius.delta}")
    out.text(f"epsilon = {radius.epsilon}  (delta / (n + 1), n = {radius.n})")
    return EXIT_OK


def _cmd_stability(args) -> int:
    g = _load_graph(args.file)
    i = _unique_alpha_set(g, args)
    epsilon = Fraction(args.epsilon) if args.epsilon else None
    report = verify_stability(
        g,
        i,
        trials=args.trials,
        seed=args.seed,
        epsilon=epsilon,
        resolution=args.resolution,
        oracle_cap=args.cap,
    )
    out = Emitter(args.json_lines)
    out.record(
        "stability",
        trials=report.trials,
        epsilon=report.epsilon,
        failures=len(report.failures),
        passed=report.passed,
    )
    out.text(
        f"epsilon = {report.epsilon}; trials = {report.trials}; "
        f"failures = {len(report.failures)}"
    )
    if report.passed:
        out.text("stability: PASS (the optimum survived every sampled perturbation)")
        return EXIT_OK
    for failure in report.failures:
        out.record(
            "stability-failure",
            trial=failure.trial,
            seed=failure.seed,
            alpha=failure.alpha,
            sets=len(failure.alpha_sets),
        )
        out.text(
            f"stability: FAIL at trial {failure.trial} (seed {failure.seed}) -- "
            f"this contradicts the computed margin and means a bug; "
            f"counterexample follows"
        )
        sys.stdout.write(
            serialize_graph(
                failure.graph,
                comments=[f"stability counterexample, trial {failure.trial}, "
                          f"seed {failure.seed}"],
            )
        )
    return EXIT_DISAGREEMENT


def _cmd_reduce(args) -> int:
    g = _load_graph(args.file)
    if args.gadget == "ui1":
        inst = reduce_ui1(g, args.k)
        h = inst.graph
        comments = [
            f"ui1 gadget instance: k={args.k} over a {g.n}-vertex graph",
            f"candidate set: {' '.join(h.labels_of(inst.candidate))}",
        ]
        extra = {"candidate": h.labels_of(inst.candidate)}
    else:
        inst = reduce_ui2(g, args.k)
        h = inst.graph
        comments = [
            f"ui2 gadget instance: k={args.k} over a {g.n}-vertex graph",
            f"block set: {' '.join(h.labels_of(inst.gadget_i))}",
            f"pendant pair: {' '.join(h.labels_of(inst.gadget_r))}",
        ]
        extra = {
            "block": h.labels_of(inst.gadget_i),
            "pendant": h.labels_of(inst.gadget_r),
        }
    document = serialize_graph(h, comments=comments)
    out = Emitter(args.json_lines)
    out.record("reduce", gadget=args.gadget, k=args.k, n=h.n, m=h.edge_count, **extra)
    if args.output:
        Path(args.output).write_text(document, encoding="utf-8")
        out.text(f"wrote {args.output} ({h.n} vertices, {h.edge_count} edges)")
    elif not args.json_lines:
        sys.stdout.write(document)
    return EXIT_OK


def _cmd_matching_check(args) -> int:
    g = _load_edge_weighted(args.file)
    alpha_prime, families = weighted_matching_oracle(g, args.cap)
    if args.edge:
        index = {}
        for idx, (u, v, _) in enumerate(g.edges):
            index[(g.label(u), g.label(v))] = idx
            index[(g.label(v), g.label(u))] = idx
        chosen = []
        for a, b in args.edge:
            if (a, b) not in index:
                raise InputError(f"no edge {a} {b} in the graph")
            chosen.append(index[(a, b)])
        matching = tuple(sorted(chosen))
    else:
        matching = families[0]
    report = check_unique_matching(g, matching, args.cap)
    labels = [g.edge_label(e) for e in matching]
    out = Emitter(args.json_lines)
    out.record(
        "matching-check",
        alpha_prime=alpha_prime,
        matching=labels,
        verdict=report.verdict.value,
        maximum_matchings=len(families),
    )
    out.text(f"maximum matching weight = {alpha_prime}")
    out.text(f"matching: {' '.join(labels) or '(empty)'}")
    out.text(f"verdict = {report.verdict.value}")
    if report.witness is not None and isinstance(report.witness, DeletionSurvivor):
        out.text(
            f"witness: removing edge {g.edge_label(report.witness.vertex)} keeps "
            f"weight {report.witness.alpha_without}"
        )
    return EXIT_OK if report.passed else EXIT_NOT_UNIQUE


def _cmd_auction(args) -> int:
    auction = parse_auction(_read_text(args.file))
    outcome = resolve_auction(auction, args.cap)
    out = Emitter(args.json_lines)
    out.record(
        "auction",
        winners=outcome.winners,
        revenue=outcome.revenue,
        unique=outcome.unique,
        winner_sets=len(outcome.winner_sets),
        epsilon=outcome.margin.epsilon if outcome.margin else None,
    )
    out.text(f"winners: {' '.join(sorted(outcome.winners)) or '(none)'}")
    out.text(f"revenue = {outcome.revenue}")
    out.text(f"unique = {'true' if outcome.unique else 'false'}")
    if outcome.unique:
        out.text(f"margin epsilon = {outcome.margin.epsilon}")
        return EXIT_OK
    for alt in outcome.winner_sets:
        out.text(f"tied winner set: {' '.join(sorted(alt))}")
        out.record("tied-winner-set", winners=alt)
    return EXIT_NOT_UNIQUE


def _build_config(args) -> FuzzConfig:
    denominators = tuple(int(tok) for tok in args.denominators.split(",") if tok)
    return FuzzConfig(
        count=args.count,
        n_min=args.n_min,
        n_max=args.n_max,
        edge_probability=args.edge_prob,
        denominators=denominators,
        weight_max=args.weight_max,
        seed=args.seed,
        mode=args.mode,
        trials=args.trials,
    )


def _cmd_gen(args) -> int:
    cfg = _build_config(args)
    out = Emitter(args.json_lines)
    if args.output_dir:
        directory = Path(args.output_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for index, g in enumerate(generate_random(cfg)):
            path = directory / f"{cfg.mode}-{cfg.seed}-{index:04d}.gwis"
            path.write_text(
                serialize_graph(
                    g, comments=[f"mode={cfg.mode} seed={cfg.seed} index={index}"]
                ),
                encoding="utf-8",
            )
        out.record("gen", count=cfg.count, dir=str(directory))
        out.text(f"wrote {cfg.count} instances to {directory}")
        return EXIT_OK
    if cfg.count != 1:
        raise InputError("writing multiple instances to stdout would concatenate "
                         "documents; pass --output-dir")
    g = make_instance(cfg, 0)
    out.record("gen", count=1, n=g.n, m=g.edge_count)
    sys.stdout.write(
        serialize_graph(g, comments=[f"mode={cfg.mode} seed={cfg.seed} index=0"])
    )
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    cfg = _build_config(args)
    report = cross_validate(
        cfg,
        oracle_cap=args.cap,
        subset_cap=args.subset_cap,
        reproducer_dir=args.reproducer_dir,
        jobs=args.jobs,
    )
    out = Emitter(args.json_lines)
    out.record(
        "fuzz",
        mode=report.mode,
        instances=report.instances,
        disagreements=len(report.disagreements),
        **report.stats,
    )
    out.text(f"mode = {report.mode}; instances = {report.instances}")
    for key in sorted(report.stats):
        out.text(f"{key} = {report.stats[key]}")
    if report.ok:
        out.text("cross-validation: PASS (zero disagreements)")
        return EXIT_OK
    for d in report.disagreements:
        out.record(
            "disagreement",
            index=d.index,
            kind=d.kind,
            reproducer=d.reproducer,
        )
        where = f" [reproducer: {d.reproducer}]" if d.reproducer else ""
        out.text(f"DISAGREEMENT at instance {d.index}: {d.kind}: {d.detail}{where}")
    out.text(f"cross-validation: FAIL ({len(report.disagreements)} disagreements)")
    return EXIT_DISAGREEMENT


# -- parser wiring ---------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="gwis",
        description="unique maximum-weight independent set toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_ORACLE_CAP,
        help="exhaustive enumeration cap (vertices/edges, default %(default)s)",
    )
    common.add_argument(
        "--subset-cap",
        type=int,
        default=DEFAULT_SUBSET_CAP,
        help="subset enumeration cap for the pocket/boundary checks",
    )
    common.add_argument(
        "--json-lines",
        action="store_true",
        help="emit machine-readable key=value records instead of prose",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="optimum weight and one optimal set")
    p.add_argument("file", help="vertex-weighted graph file ('-' for stdin)")
    p.add_argument("--solver", choices=("oracle", "bnb"), default="oracle")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", parents=[common], help="uniqueness verdict")
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default="oracle",
    )
    p.add_argument("--set", help="comma-separated vertex labels of the optimal set")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("epsilon", parents=[common], help="stability margin")
    p.add_argument("file")
    p.add_argument("--set")
    p.set_defaults(func=_cmd_epsilon)

    p = sub.add_parser("stability", parents=[common], help="perturbation trials")
    p.add_argument("file")
    p.add_argument("--set")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", help="override the computed margin (p/q or decimal)")
    p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("reduce", parents=[common], help="emit a hardness gadget")
    p.add_argument("gadget", choices=("ui1", "ui2"))
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True, help="target weight (unary gadget size)")
    p.add_argument("-o", "--output", help="write the instance here instead of stdout")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser(
        "matching-check", parents=[common], help="unique maximum matching test"
    )
    p.add_argument("file", help="edge-weighted graph file")
    p.add_argument(
        "--edge",
        nargs=2,
        action="append",
        metavar=("A", "B"),
        help="matching edge by endpoint labels (repeatable); default: a maximum matching",
    )
    p.set_defaults(func=_cmd_matching_check)

    p = sub.add_parser("auction", parents=[common], help="winner determination")
    p.add_argument("file", help="auction bid file")
    p.set_defaults(func=_cmd_auction)

    gen_common = argparse.ArgumentParser(add_help=False)
    gen_common.add_argument("--count", type=int, default=1)
    gen_common.add_argument("--n-min", type=int, default=1)
    gen_common.add_argument("--n-max", type=int, default=10)
    gen_common.add_argument(
        "--edge-prob",
        type=float,
        default=None,
        help="edge probability (default: drawn per instance)",
    )
    gen_common.add_argument("--denominators", default="1,2,3")
    gen_common.add_argument("--weight-max", type=int, default=4)
    gen_common.add_argument("--seed", type=int, default=0)
    gen_common.add_argument("--trials", type=int, default=5)

    p = sub.add_parser("gen", parents=[common, gen_common], help="random instances")
    p.add_argument("--mode", choices=("general", "trees"), default="general")
    p.add_argument("-o", "--output-dir")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("fuzz", parents=[common, gen_common], help="cross-validation")
    p.add_argument("--mode", choices=MODES, default="general")
    p.add_argument("--reproducer-dir", help="where to dump disagreement reproducers")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"gwis: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except GwisError as exc:
        print(f"gwis: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"gwis: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"gwis: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
