"""Weight-perturbation stability of a unique optimum.

For a graph whose maximum-weight independent set is unique, there is a
margin epsilon > 0 such that wiggling every vertex weight anywhere inside
(w(x) - epsilon, w(x) + epsilon) keeps the same set as the unique optimum.
`compute_radius` derives an explicit such margin from three exact gap
minimizations; `verify_stability` then hammers it with seeded random
perturbations and re-solves each one from scratch.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .characterizations import DEFAULT_SUBSET_CAP, max_pocket_set
from .errors import CapacityError, InputError
from .graph import VertexSet, WeightedGraph
from .solver import DEFAULT_ORACLE_CAP, _iter_independent, enumerate_alpha_sets

DEFAULT_RESOLUTION = 1000


@dataclass(frozen=True)
class PerturbationRadius:
    """The gap quantities behind the stability margin.

    * sigma: smallest advantage of a nonempty subset of the optimum over the
      best independent set inside its pocket.
    * eta: gap between the optimum and the second-best independent set.
    * nu: smallest gap below a pocket optimum over admissible runner-up
      independent sets of that pocket; None when no pocket has a runner-up.
    * delta: min of the defined gaps; epsilon = delta / (n + 1).
    """

    sigma: Fraction
    eta: Fraction
    nu: Fraction | None
    delta: Fraction
    epsilon: Fraction
    n: int


@dataclass(frozen=True)
class StabilityFailure:
    trial: int
    seed: int
    graph: WeightedGraph
    alpha: Fraction
    alpha_sets: tuple[VertexSet, ...]


@dataclass(frozen=True)
class StabilityReport:
    alpha_set: VertexSet
    epsilon: Fraction
    trials: int
    failures: tuple[StabilityFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def compute_radius(
    g: WeightedGraph,
    i: VertexSet,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> PerturbationRadius:
    """Exact stability margin for the unique optimum i of g.

    Raises InputError when i is not the unique optimum (verified by
    enumeration) and on the empty graph, where every gap minimization has
    an empty domain.
    """
    if g.n == 0:
        raise InputError("the empty graph has no perturbation radius")
    family = enumerate_alpha_sets(g, oracle_cap)
    if not family.unique or family.sets[0] != i:
        g._check_set(i)
        raise InputError("graph does not have the given set as its unique optimum")
    if len(i) > subset_cap:
        raise CapacityError(
            f"gap minimization over {len(i)} chosen vertices exceeds the subset cap "
            f"of {subset_cap}"
        )
    alpha = family.alpha

    sigma: Fraction | None = None
    nu: Fraction | None = None
    members = i.members()
    for r in range(1, len(members) + 1):
        for combo in itertools.combinations(members, r):
            sub = VertexSet(g.n, combo)
            best = max_pocket_set(g, sub, i)
            gap = g.weight_of(sub) - best.alpha
            if sigma is None or gap < sigma:
                sigma = gap
            # Runner-up gaps inside this pocket: independent sets strictly
            # below the pocket optimum (the empty set counts when the
            # optimum is nonzero).
            pocket_sub, _ = g.induced_subgraph(g.pocket(sub, i))
            for mask, scaled in _iter_independent(pocket_sub):
                w = Fraction(scaled, pocket_sub._den)
                if w < best.alpha:
                    runner_gap = best.alpha - w
                    if nu is None or runner_gap < nu:
                        nu = runner_gap
    assert sigma is not None  # i is nonempty: unique optima of n >= 1 graphs are

    eta_scaled: int | None = None
    alpha_scaled = g._scaled_weight(i.mask)
    for mask, scaled in _iter_independent(g):
        if mask == i.mask:
            continue
        gap = alpha_scaled - scaled
        if eta_scaled is None or gap < eta_scaled:
            eta_scaled = gap
    assert eta_scaled is not None and eta_scaled > 0
    eta = Fraction(eta_scaled, g._den)

    delta = min(sigma, eta) if nu is None else min(sigma, eta, nu)
    return PerturbationRadius(
        sigma=sigma,
        eta=eta,
        nu=nu,
        delta=delta,
        epsilon=delta / (g.n + 1),
        n=g.n,
    )


def sample_perturbation(
    g: WeightedGraph,
    epsilon: Fraction,
    seed: int,
    resolution: int = DEFAULT_RESOLUTION,
) -> WeightedGraph:
    """Random exact-rational reweighting strictly inside +-epsilon.

    Each weight moves by k/resolution * epsilon with k drawn uniformly from
    {-(resolution-1), ..., resolution-1}, so the result stays strictly
    inside the open interval.  A draw that would go negative is clamped to
    zero, which is still inside the interval (only reachable when
    w(x) < epsilon).  Deterministic per seed.
    """
    if epsilon <= 0:
        raise InputError(f"epsilon must be positive, got {epsilon}")
    if resolution < 2:
        raise InputError(f"resolution must be at least 2, got {resolution}")
    rng = random.Random(seed)
    new_weights = []
    for w in g.weights:
        k = rng.randint(-(resolution - 1), resolution - 1)
        moved = w + Fraction(k, resolution) * epsilon
        new_weights.append(moved if moved >= 0 else Fraction(0))
    return g.with_weights(new_weights)


def verify_stability(
    g: WeightedGraph,
    i: VertexSet,
    trials: int,
    seed: int,
    epsilon: Fraction | None = None,
    resolution: int = DEFAULT_RESOLUTION,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> StabilityReport:
    """Re-solve `trials` seeded perturbations and demand the same unique optimum.

    Trial t uses seed `seed + t`, so runs are reproducible and trials are
    independent.  Any failing trial is reported with the full perturbed
    graph; given a correct radius a failure can only mean an implementation
    bug, so callers should surface it loudly.
    """
    if trials < 0:
        raise InputError(f"trials must be nonnegative, got {trials}")
    if epsilon is None:
        epsilon = compute_radius(g, i, oracle_cap).epsilon
    failures = []
    for t in range(trials):
        trial_seed = seed + t
        perturbed = sample_perturbation(g, epsilon, trial_seed, resolution)
        family = enumerate_alpha_sets(perturbed, oracle_cap)
        if family.sets != (i,):
            failures.append(
                StabilityFailure(t, trial_seed, perturbed, family.alpha, family.sets)
            )
    return StabilityReport(i, epsilon, trials, tuple(failures))
