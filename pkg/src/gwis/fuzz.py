"""Cross-validation harness: every fast path must agree with the oracle.

For each generated instance the harness compares the deletion, pocket-optimum
and boundary tests (plus the tree test in tree mode) against exhaustive
enumeration, re-verifies every emitted witness, and checks that the
pocket-sum condition never vouches for a non-unique graph.  Reduction mode
replays both hardness gadgets; perturbation mode re-solves sampled
reweightings inside the computed stability margin.

Any disagreement is collected, optionally dumped as a reproducer file, and
makes the run fail.  Instances are evaluated independently, so runs can be
spread over worker processes without changing the outcome.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .characterizations import (
    DEFAULT_SUBSET_CAP,
    Verdict,
    check_lemma1,
    check_thm1,
    check_thm2_tree,
    check_thm3,
    check_thm4,
    recheck_witness,
)
from .formats import serialize_graph
from .generate import FuzzConfig, make_instance
from .graph import WeightedGraph
from .perturbation import compute_radius, verify_stability
from .reductions import reduce_ui1, reduce_ui2, verify_reduction_ui1, verify_reduction_ui2
from .solver import DEFAULT_ORACLE_CAP, enumerate_alpha_sets, solve_oracle


@dataclass(frozen=True)
class Disagreement:
    index: int
    kind: str
    detail: str
    reproducer: str | None = None


@dataclass(frozen=True)
class CrossValidationReport:
    mode: str
    instances: int
    stats: dict[str, int]
    disagreements: tuple[Disagreement, ...]

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _bump(stats: dict[str, int], key: str, by: int = 1) -> None:
    stats[key] = stats.get(key, 0) + by


def _check_general(
    g: WeightedGraph,
    tree_mode: bool,
    oracle_cap: int,
    subset_cap: int,
) -> tuple[dict[str, int], list[tuple[str, str]]]:
    stats: dict[str, int] = {}
    problems: list[tuple[str, str]] = []
    family = enumerate_alpha_sets(g, oracle_cap)
    unique = family.unique
    _bump(stats, "unique" if unique else "not_unique")
    for i in family.sets:
        _bump(stats, "alpha_sets_checked")
        checks = [
            check_thm1(g, i),
            check_thm3(g, i, subset_cap),
            check_thm4(g, i, subset_cap),
        ]
        if tree_mode:
            checks.append(check_thm2_tree(g, i, subset_cap))
        for report in checks:
            if (report.verdict is Verdict.UNIQUE) != unique:
                problems.append(
                    (
                        "equivalence",
                        f"{report.method.value} said {report.verdict.value} on set "
                        f"{','.join(g.labels_of(i))} but the family has "
                        f"{len(family.sets)} sets",
                    )
                )
            elif not recheck_witness(g, report, oracle_cap):
                problems.append(
                    ("witness", f"{report.method.value} witness failed re-verification")
                )
        lemma = check_lemma1(g, i, subset_cap)
        if lemma.verdict is Verdict.CONDITION_HOLDS:
            _bump(stats, "lemma_holds")
            if not unique:
                problems.append(
                    (
                        "lemma-soundness",
                        f"condition holds on set {','.join(g.labels_of(i))} but the "
                        f"family has {len(family.sets)} sets",
                    )
                )
        else:
            if unique:
                _bump(stats, "lemma_fails_unique")
            if not recheck_witness(g, lemma, oracle_cap):
                problems.append(("witness", "lemma1 witness failed re-verification"))
    return stats, problems


def _check_reductions(
    g: WeightedGraph,
    instance_seed: int,
    oracle_cap: int,
) -> tuple[dict[str, int], list[tuple[str, str]]]:
    stats: dict[str, int] = {}
    problems: list[tuple[str, str]] = []
    rng = random.Random(instance_seed ^ 0x5EED)
    alpha = solve_oracle(g, oracle_cap).alpha
    ks = {rng.randint(1, int(alpha) + 2)}
    if alpha.denominator == 1 and alpha >= 1:
        ks.add(int(alpha))  # always exercise the tie k = alpha
    for k in sorted(ks):
        _bump(stats, "pairs")
        if k == alpha:
            _bump(stats, "tie_pairs")
        inst1 = reduce_ui1(g, k)
        if (
            inst1.graph.n != g.n + k
            or inst1.graph.edge_count != g.edge_count + g.n * k
        ):
            problems.append(("gadget-shape", f"ui1 counts wrong for k={k}"))
        if not verify_reduction_ui1(g, k, oracle_cap):
            problems.append(("reduction", f"ui1 equivalence failed for k={k}"))
        inst2 = reduce_ui2(g, k)
        if (
            inst2.graph.n != g.n + k + 3
            or inst2.graph.edge_count != g.edge_count + (k + 1) * (g.n + 2) + 1
        ):
            problems.append(("gadget-shape", f"ui2 counts wrong for k={k}"))
        if solve_oracle(inst2.graph, oracle_cap).alpha != max(alpha, k) + 1:
            problems.append(("gadget-shape", f"ui2 optimum is not max(k, alpha)+1 for k={k}"))
        if not verify_reduction_ui2(g, k, oracle_cap):
            problems.append(("reduction", f"ui2 equivalence failed for k={k}"))
    return stats, problems


def _check_perturbation(
    g: WeightedGraph,
    instance_seed: int,
    trials: int,
    oracle_cap: int,
    subset_cap: int,
) -> tuple[dict[str, int], list[tuple[str, str]]]:
    stats: dict[str, int] = {}
    problems: list[tuple[str, str]] = []
    family = enumerate_alpha_sets(g, oracle_cap)
    if not family.unique:
        _bump(stats, "skipped_not_unique")
        return stats, problems
    _bump(stats, "unique")
    radius = compute_radius(g, family.sets[0], oracle_cap, subset_cap)
    report = verify_stability(
        g, family.sets[0], trials, instance_seed, radius.epsilon, oracle_cap=oracle_cap
    )
    _bump(stats, "trials", trials)
    for failure in report.failures:
        problems.append(
            (
                "stability",
                f"trial {failure.trial} (seed {failure.seed}) moved the optimum "
                f"within epsilon={radius.epsilon}",
            )
        )
    return stats, problems


def _evaluate(
    args: tuple[int, WeightedGraph, str, int, int, int, int]
) -> tuple[int, dict[str, int], list[tuple[str, str]]]:
    index, g, mode, oracle_cap, subset_cap, instance_seed, trials = args
    if mode == "reductions":
        stats, problems = _check_reductions(g, instance_seed, oracle_cap)
    elif mode == "perturbation":
        stats, problems = _check_perturbation(
            g, instance_seed, trials, oracle_cap, subset_cap
        )
    else:
        stats, problems = _check_general(g, mode == "trees", oracle_cap, subset_cap)
    return index, stats, problems


def cross_validate(
    cfg: FuzzConfig,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    reproducer_dir: str | Path | None = None,
    jobs: int = 1,
) -> CrossValidationReport:
    """Run the configured corpus and report every disagreement."""
    payloads = [
        (
            index,
            make_instance(cfg, index),
            cfg.mode,
            oracle_cap,
            subset_cap,
            cfg.instance_seed(index),
            cfg.trials,
        )
        for index in range(cfg.count)
    ]
    if jobs > 1 and payloads:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, payloads, chunksize=8))
    else:
        results = [_evaluate(p) for p in payloads]
    results.sort(key=lambda r: r[0])

    stats: dict[str, int] = {}
    disagreements: list[Disagreement] = []
    for index, inst_stats, problems in results:
        for key, value in inst_stats.items():
            _bump(stats, key, value)
        for kind, detail in problems:
            path = None
            if reproducer_dir is not None:
                path = _dump_reproducer(
                    Path(reproducer_dir), cfg, index, payloads[index][1], kind, detail
                )
            disagreements.append(Disagreement(index, kind, detail, path))
    return CrossValidationReport(cfg.mode, cfg.count, stats, tuple(disagreements))


def _dump_reproducer(
    directory: Path,
    cfg: FuzzConfig,
    index: int,
    g: WeightedGraph,
    kind: str,
    detail: str,
) -> str:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{cfg.mode}-{cfg.seed}-{index:05d}.gwis"
    path.write_text(
        serialize_graph(
            g,
            comments=[
                f"reproducer: {kind}",
                detail,
                f"mode={cfg.mode} seed={cfg.seed} index={index}",
            ],
        ),
        encoding="utf-8",
    )
    return str(path)
