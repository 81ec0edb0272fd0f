"""Seeded random instance generators for fuzzing and cross-validation.

Everything here is a pure function of the configuration: the same seed
always produces bit-identical instance streams, and each instance is
derived from its own per-index generator so streams can be evaluated out
of order (or in parallel) without changing what gets generated.

Weights are drawn from a positive rational grid j/d with d taken from the
configured denominators.  The grid deliberately excludes zero: zero-weight
vertices create optimal families that differ only by padding, a degeneracy
the uniqueness characterizations are not meant for (the solvers still
accept such graphs; they are exercised by dedicated unit tests instead).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InputError
from .graph import EdgeWeightedGraph, WeightedGraph

MODES = ("general", "trees", "reductions", "perturbation")


@dataclass(frozen=True)
class FuzzConfig:
    """Fully determines a random instance stream."""

    count: int = 100
    n_min: int = 1
    n_max: int = 10
    edge_probability: float | None = None  # None: drawn per instance from [0.1, 0.9]
    denominators: tuple[int, ...] = (1, 2, 3)
    weight_max: int = 4
    seed: int = 0
    mode: str = "general"
    trials: int = 5  # stability trials per unique instance (perturbation mode)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.count < 0:
            raise InputError("count must be nonnegative")
        if not 0 <= self.n_min <= self.n_max:
            raise InputError(f"bad vertex range {self.n_min}..{self.n_max}")
        if self.mode == "trees" and self.n_min < 1:
            raise InputError("trees need at least one vertex")
        if self.edge_probability is not None and not 0 <= self.edge_probability <= 1:
            raise InputError("edge probability must be in [0, 1]")
        object.__setattr__(self, "denominators", tuple(self.denominators))
        if not self.denominators or any(d < 1 for d in self.denominators):
            raise InputError("denominators must be a nonempty tuple of positive ints")
        if self.weight_max < 1:
            raise InputError("weight_max must be at least 1")
        if self.trials < 0:
            raise InputError("trials must be nonnegative")

    def instance_seed(self, index: int) -> int:
        return self.seed * 1_000_003 + index


def random_weight(
    rng: random.Random, denominators: Sequence[int], weight_max: int
) -> Fraction:
    d = rng.choice(denominators)
    return Fraction(rng.randint(1, weight_max * d), d)


def random_graph(
    rng: random.Random,
    n: int,
    p: float,
    denominators: Sequence[int] = (1, 2, 3),
    weight_max: int = 4,
) -> WeightedGraph:
    """Erdos-Renyi style graph with grid-rational weights."""
    weights = [random_weight(rng, denominators, weight_max) for _ in range(n)]
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return WeightedGraph(weights, edges)


def random_tree(
    rng: random.Random,
    n: int,
    denominators: Sequence[int] = (1, 2, 3),
    weight_max: int = 4,
) -> WeightedGraph:
    """Uniform random labeled tree (decoded Pruefer sequence)."""
    if n < 1:
        raise InputError("trees need at least one vertex")
    weights = [random_weight(rng, denominators, weight_max) for _ in range(n)]
    if n == 1:
        return WeightedGraph(weights, [])
    if n == 2:
        return WeightedGraph(weights, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return WeightedGraph(weights, edges)


def random_edge_weighted_graph(
    rng: random.Random,
    n: int,
    max_edges: int,
    denominators: Sequence[int] = (1, 2, 3),
    weight_max: int = 4,
) -> EdgeWeightedGraph:
    """Random simple graph with at most `max_edges` weighted edges."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    count = rng.randint(0, min(max_edges, len(pairs)))
    chosen = sorted(rng.sample(pairs, count))
    return EdgeWeightedGraph(
        n,
        [(u, v, random_weight(rng, denominators, weight_max)) for u, v in chosen],
    )


def make_instance(cfg: FuzzConfig, index: int) -> WeightedGraph:
    """The index-th instance of cfg's stream."""
    rng = random.Random(cfg.instance_seed(index))
    n = rng.randint(cfg.n_min, cfg.n_max)
    if cfg.mode == "trees":
        return random_tree(rng, n, cfg.denominators, cfg.weight_max)
    p = cfg.edge_probability
    if p is None:
        p = rng.uniform(0.1, 0.9)
    return random_graph(rng, n, p, cfg.denominators, cfg.weight_max)


def generate_random(cfg: FuzzConfig) -> Iterator[WeightedGraph]:
    """The instance stream for cfg, deterministic per seed."""
    for index in range(cfg.count):
        yield make_instance(cfg, index)
