"""Uniqueness tests for maximum-weight independent sets.

Each check takes a graph and one of its optimal independent sets and decides
whether that optimum is the *only* one.  Available methods:

* ``oracle``  - enumerate the whole optimal family (ground truth).
* ``thm1``    - deletion test: unique iff removing any chosen vertex strictly
  lowers the optimum.
* ``lemma1``  - pocket-sum test: if every nonempty subset of the optimum
  outweighs its pocket, uniqueness follows.  Sufficient only; a failing
  condition is inconclusive.
* ``tree``    - the pocket-sum test again, which on trees is a complete
  characterization, not just sufficient.
* ``thm3``    - pocket-optimum test: unique iff every nonempty subset of the
  optimum outweighs the best independent set inside its pocket.
* ``thm4``    - boundary test: unique iff every nonempty independent set
  outside the optimum is outweighed by its neighbors inside it.  Cheap when
  the complement of the optimum is small.

Every negative verdict carries a witness that re-verifies under exact
arithmetic; `recheck_witness` does so against the exhaustive oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import CapacityError, InputError
from .graph import EdgeWeightedGraph, VertexSet, WeightedGraph, line_graph
from .solver import (
    DEFAULT_ORACLE_CAP,
    MwisResult,
    enumerate_alpha_sets,
    solve_bnb,
    solve_oracle,
    weighted_matching_oracle,
)

DEFAULT_SUBSET_CAP = 25


class Method(str, Enum):
    ORACLE = "oracle"
    THM1 = "thm1"
    LEMMA1 = "lemma1"
    THM2_TREE = "tree"
    THM3 = "thm3"
    THM4 = "thm4"


class Verdict(str, Enum):
    UNIQUE = "unique"
    NOT_UNIQUE = "not-unique"
    CONDITION_HOLDS = "condition-holds"
    CONDITION_FAILS = "condition-fails"


@dataclass(frozen=True)
class DeletionSurvivor:
    """A chosen vertex whose removal does not lower the optimum."""

    vertex: int
    alpha_without: Fraction


@dataclass(frozen=True)
class ViolatingSubset:
    """A subset of the optimum that fails its pocket inequality.

    `rival_weight` is the pocket's total weight for the pocket-sum tests
    (lemma1/tree) and the pocket's optimal independent-set weight for thm3.
    """

    subset: VertexSet
    subset_weight: Fraction
    rival_weight: Fraction


@dataclass(frozen=True)
class BoundaryViolation:
    """An outside independent set not outweighed by its neighbors inside."""

    subset: VertexSet
    subset_weight: Fraction
    boundary_weight: Fraction


@dataclass(frozen=True)
class AlternateAlphaSet:
    """A second optimal set, found by direct enumeration."""

    other: VertexSet


Witness = DeletionSurvivor | ViolatingSubset | BoundaryViolation | AlternateAlphaSet


@dataclass(frozen=True)
class UniquenessReport:
    method: Method
    verdict: Verdict
    witness: Witness | None
    alpha_set: VertexSet
    alpha: Fraction

    @property
    def passed(self) -> bool:
        """True for the affirmative verdicts (unique / condition holds)."""
        return self.verdict in (Verdict.UNIQUE, Verdict.CONDITION_HOLDS)


def _verified_alpha(g: WeightedGraph, i: VertexSet) -> Fraction:
    """Check that i really is an optimal independent set; return the optimum."""
    g._check_set(i)
    if not g.is_independent(i):
        raise InputError(f"{g.labels_of(i)} is not independent")
    alpha = solve_bnb(g).alpha
    w = g.weight_of(i)
    if w != alpha:
        raise InputError(
            f"set has weight {w} but the optimum is {alpha}; not a maximum set"
        )
    return alpha


def _subsets_ascending(members: tuple[int, ...]):
    """Nonempty subsets by ascending cardinality, lexicographic within each."""
    for r in range(1, len(members) + 1):
        yield from itertools.combinations(members, r)


def check_oracle(
    g: WeightedGraph, i: VertexSet | None = None, cap: int = DEFAULT_ORACLE_CAP
) -> UniquenessReport:
    """Ground-truth verdict by enumerating the whole optimal family."""
    family = enumerate_alpha_sets(g, cap)
    if i is None:
        i = family.sets[0]
    elif i not in family.sets:
        g._check_set(i)
        raise InputError("given set is not a maximum-weight independent set")
    witness = None
    if not family.unique:
        witness = AlternateAlphaSet(next(s for s in family.sets if s != i))
    verdict = Verdict.UNIQUE if family.unique else Verdict.NOT_UNIQUE
    return UniquenessReport(Method.ORACLE, verdict, witness, i, family.alpha)


def check_thm1(g: WeightedGraph, i: VertexSet) -> UniquenessReport:
    """Deletion test: unique iff zapping any chosen vertex lowers the optimum."""
    alpha = _verified_alpha(g, i)
    for x in i:
        alpha_without = solve_bnb(g.delete_vertex(x)).alpha
        if alpha_without >= alpha:
            return UniquenessReport(
                Method.THM1,
                Verdict.NOT_UNIQUE,
                DeletionSurvivor(x, alpha_without),
                i,
                alpha,
            )
    return UniquenessReport(Method.THM1, Verdict.UNIQUE, None, i, alpha)


def _pocket_sum_violation(
    g: WeightedGraph, i: VertexSet, subset_cap: int
) -> ViolatingSubset | None:
    if len(i) > subset_cap:
        raise CapacityError(
            f"pocket conditions over {len(i)} chosen vertices exceed the subset cap "
            f"of {subset_cap}"
        )
    for combo in _subsets_ascending(i.members()):
        sub = VertexSet(g.n, combo)
        pocket_w = g.weight_of(g.pocket(sub, i))
        sub_w = g.weight_of(sub)
        if pocket_w >= sub_w:
            return ViolatingSubset(sub, sub_w, pocket_w)
    return None


def check_lemma1(
    g: WeightedGraph, i: VertexSet, subset_cap: int = DEFAULT_SUBSET_CAP
) -> UniquenessReport:
    """Pocket-sum sufficient condition.

    condition-holds guarantees the optimum is unique; condition-fails decides
    nothing (uniqueness may still hold, as the bundled pentagon shows).
    """
    alpha = _verified_alpha(g, i)
    violation = _pocket_sum_violation(g, i, subset_cap)
    if violation is not None:
        return UniquenessReport(
            Method.LEMMA1, Verdict.CONDITION_FAILS, violation, i, alpha
        )
    return UniquenessReport(Method.LEMMA1, Verdict.CONDITION_HOLDS, None, i, alpha)


def check_thm2_tree(
    t: WeightedGraph, i: VertexSet, subset_cap: int = DEFAULT_SUBSET_CAP
) -> UniquenessReport:
    """Pocket-sum test on trees, where it characterizes uniqueness exactly."""
    if not t.is_tree():
        raise InputError(
            "graph is not a tree; use the thm3 (pocket-optimum) check instead"
        )
    alpha = _verified_alpha(t, i)
    violation = _pocket_sum_violation(t, i, subset_cap)
    if violation is not None:
        return UniquenessReport(
            Method.THM2_TREE, Verdict.NOT_UNIQUE, violation, i, alpha
        )
    return UniquenessReport(Method.THM2_TREE, Verdict.UNIQUE, None, i, alpha)


def max_pocket_set(
    g: WeightedGraph, i0: VertexSet, ambient: VertexSet
) -> MwisResult:
    """Best independent set inside the pocket of i0, in g's own indexing."""
    pocket = g.pocket(i0, ambient)
    sub, kept = g.induced_subgraph(pocket)
    result = solve_bnb(sub)
    mask = 0
    for local in result.witness:
        mask |= 1 << kept[local]
    return MwisResult(result.alpha, VertexSet.from_mask(g.n, mask))


def check_thm3(
    g: WeightedGraph, i: VertexSet, subset_cap: int = DEFAULT_SUBSET_CAP
) -> UniquenessReport:
    """Pocket-optimum test: a full characterization on every graph."""
    alpha = _verified_alpha(g, i)
    if len(i) > subset_cap:
        raise CapacityError(
            f"pocket conditions over {len(i)} chosen vertices exceed the subset cap "
            f"of {subset_cap}"
        )
    for combo in _subsets_ascending(i.members()):
        sub = VertexSet(g.n, combo)
        best = max_pocket_set(g, sub, i)
        sub_w = g.weight_of(sub)
        if best.alpha >= sub_w:
            # The violation must convert into a rival optimal set: swap the
            # subset out for its pocket optimum.  If this ever fails the
            # solver or the pocket operator is broken, so fail loudly.
            rival = (i - sub) | best.witness
            assert g.is_independent(rival) and g.weight_of(rival) >= alpha, (
                "violating subset did not yield an alternative optimum"
            )
            return UniquenessReport(
                Method.THM3,
                Verdict.NOT_UNIQUE,
                ViolatingSubset(sub, sub_w, best.alpha),
                i,
                alpha,
            )
    return UniquenessReport(Method.THM3, Verdict.UNIQUE, None, i, alpha)


def check_thm4(
    g: WeightedGraph, i: VertexSet, subset_cap: int = DEFAULT_SUBSET_CAP
) -> UniquenessReport:
    """Boundary test over independent sets outside the optimum."""
    alpha = _verified_alpha(g, i)
    outside = i.complement()
    if len(outside) > subset_cap:
        raise CapacityError(
            f"boundary conditions over {len(outside)} outside vertices exceed the "
            f"subset cap of {subset_cap}"
        )
    for combo in _subsets_ascending(outside.members()):
        j = VertexSet(g.n, combo)
        if not g.is_independent(j):
            continue
        boundary_w = g.weight_of(g.set_neighborhood(j) & i)
        j_w = g.weight_of(j)
        if boundary_w <= j_w:
            return UniquenessReport(
                Method.THM4,
                Verdict.NOT_UNIQUE,
                BoundaryViolation(j, j_w, boundary_w),
                i,
                alpha,
            )
    return UniquenessReport(Method.THM4, Verdict.UNIQUE, None, i, alpha)


def check_unique_matching(
    g: EdgeWeightedGraph,
    matching: tuple[int, ...] | list[int],
    cap: int = DEFAULT_ORACLE_CAP,
) -> UniquenessReport:
    """Is the given maximum-weight matching the only one?

    Verified against the exhaustive matching oracle, then decided by the
    deletion test on the line graph, where matchings of g are exactly the
    independent sets.  Witness vertices index edges of g.
    """
    edges = tuple(sorted(matching))
    used = 0
    for idx in edges:
        if not 0 <= idx < g.edge_count:
            raise InputError(f"edge index {idx} outside 0..{g.edge_count - 1}")
        u, v, _ = g.edges[idx]
        ends = (1 << u) | (1 << v)
        if used & ends:
            raise InputError("edge set is not a matching (shared endpoint)")
        used |= ends
    alpha_prime, _ = weighted_matching_oracle(g, cap)
    if g.matching_weight(edges) != alpha_prime:
        raise InputError(
            f"matching has weight {g.matching_weight(edges)} but the maximum is "
            f"{alpha_prime}"
        )
    lg = line_graph(g)
    return check_thm1(lg, VertexSet(lg.n, edges))


def recheck_witness(
    g: WeightedGraph, report: UniquenessReport, cap: int = DEFAULT_ORACLE_CAP
) -> bool:
    """Re-verify a report's witness from scratch with the exhaustive oracle.

    Checks run independently of the branch-and-bound path that produced the
    witness.  Reports without a witness re-verify trivially.
    """
    w = report.witness
    if w is None:
        return True
    if isinstance(w, DeletionSurvivor):
        alpha_without = solve_oracle(g.delete_vertex(w.vertex), cap).alpha
        return alpha_without == w.alpha_without and alpha_without >= report.alpha
    if isinstance(w, ViolatingSubset):
        sub_w = g.weight_of(w.subset)
        if sub_w != w.subset_weight or not w.subset.issubset(report.alpha_set):
            return False
        if report.method in (Method.LEMMA1, Method.THM2_TREE):
            rival = g.weight_of(g.pocket(w.subset, report.alpha_set))
        else:
            pocket = g.pocket(w.subset, report.alpha_set)
            sub, _ = g.induced_subgraph(pocket)
            rival = solve_oracle(sub, cap).alpha
        return rival == w.rival_weight and rival >= sub_w
    if isinstance(w, BoundaryViolation):
        if not w.subset.isdisjoint(report.alpha_set) or not g.is_independent(w.subset):
            return False
        boundary = g.weight_of(g.set_neighborhood(w.subset) & report.alpha_set)
        return (
            g.weight_of(w.subset) == w.subset_weight
            and boundary == w.boundary_weight
            and boundary <= w.subset_weight
        )
    if isinstance(w, AlternateAlphaSet):
        return (
            w.other != report.alpha_set
            and g.is_independent(w.other)
            and g.weight_of(w.other) == report.alpha
        )
    raise InputError(f"unknown witness type {type(w).__name__}")
