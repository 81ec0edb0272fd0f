"""Exact maximum-weight independent set solvers.

Two deliberately separate routes:

* `solve_oracle` / `enumerate_alpha_sets` / `weighted_matching_oracle` walk
  every independent set (or matching) outright.  They are the ground truth
  the rest of the package is validated against, so they stay free of any
  pruning that could hide a bug.  A configurable cap guards against
  accidentally asking for an astronomical enumeration.
* `solve_bnb` is a branch-and-bound solver with a residual-weight bound.
  It is exact but structurally independent of the oracle, which is what
  makes oracle-vs-solver cross-checks meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator

from .errors import CapacityError
from .graph import EdgeWeightedGraph, VertexSet, WeightedGraph, _bits

DEFAULT_ORACLE_CAP = 30


@dataclass(frozen=True)
class MwisResult:
    """Optimum weight and one optimal set (deterministically chosen)."""

    alpha: Fraction
    witness: VertexSet


@dataclass(frozen=True)
class AlphaSetFamily:
    """Every maximum-weight independent set, in ascending lexicographic order."""

    alpha: Fraction
    sets: tuple[VertexSet, ...]

    @property
    def unique(self) -> bool:
        return len(self.sets) == 1


def _check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise CapacityError(
            f"exhaustive enumeration over {size} {what} exceeds the cap of {cap}; "
            f"raise the cap explicitly if you really mean it"
        )


def _iter_independent(g: WeightedGraph) -> Iterator[tuple[int, int]]:
    """Yield (mask, scaled_weight) for every independent set of g, each once.

    Weights are integers on the graph's common denominator (`g._den`).
    Iteration order is an implementation detail; callers needing determinism
    sort afterwards.
    """
    adj = g._adj
    scaled = g._scaled
    # stack entries: (candidates still allowed, chosen mask, chosen weight);
    # candidates only ever contain vertices above the last chosen one, so
    # each independent set is produced exactly once.
    stack: list[tuple[int, int, int]] = [((1 << g.n) - 1, 0, 0)]
    while stack:
        allowed, mask, wt = stack.pop()
        yield mask, wt
        m = allowed
        while m:
            low = m & -m
            m &= m - 1
            v = low.bit_length() - 1
            stack.append((m & ~adj[v], mask | low, wt + scaled[v]))


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def solve_oracle(g: WeightedGraph, cap: int = DEFAULT_ORACLE_CAP) -> MwisResult:
    """Maximum-weight independent set by full enumeration.

    The witness is the lexicographically smallest optimal set under
    ascending vertex order, so results are reproducible everywhere.
    """
    _check_cap(g.n, cap, "vertices")
    best_w = -1
    best_mask = 0
    best_key: tuple[int, ...] = ()
    for mask, wt in _iter_independent(g):
        if wt > best_w:
            best_w, best_mask, best_key = wt, mask, _mask_key(mask)
        elif wt == best_w:
            key = _mask_key(mask)
            if key < best_key:
                best_mask, best_key = mask, key
    return MwisResult(Fraction(best_w, g._den), VertexSet.from_mask(g.n, best_mask))


def enumerate_alpha_sets(g: WeightedGraph, cap: int = DEFAULT_ORACLE_CAP) -> AlphaSetFamily:
    """The complete family of maximum-weight independent sets.

    This is the uniqueness ground truth: the graph has a unique optimum
    exactly when the family has one member.
    """
    _check_cap(g.n, cap, "vertices")
    best_w = -1
    masks: list[int] = []
    for mask, wt in _iter_independent(g):
        if wt > best_w:
            best_w = wt
            masks = [mask]
        elif wt == best_w:
            masks.append(mask)
    masks.sort(key=_mask_key)
    return AlphaSetFamily(
        Fraction(best_w, g._den),
        tuple(VertexSet.from_mask(g.n, m) for m in masks),
    )


def solve_bnb(g: WeightedGraph) -> MwisResult:
    """Branch-and-bound exact solver; same optimum as the oracle, no cap.

    Branches on the highest-degree vertex of the remaining subproblem and
    prunes when the chosen weight plus everything still available cannot
    beat the incumbent.  The witness is deterministic but need not match
    the oracle's lexicographic choice.
    """
    adj = g._adj
    scaled = g._scaled
    best_w = 0
    best_mask = 0

    def descend(allowed: int, cur_w: int, cur_mask: int, rest: int) -> None:
        nonlocal best_w, best_mask
        if cur_w > best_w:
            best_w, best_mask = cur_w, cur_mask
        if not allowed or cur_w + rest <= best_w:
            return
        v = -1
        deg = -1
        for u in _bits(allowed):
            d = (adj[u] & allowed).bit_count()
            if d > deg:
                v, deg = u, d
        vbit = 1 << v
        removed = (adj[v] & allowed) | vbit
        removed_w = sum(scaled[u] for u in _bits(removed))
        descend(allowed & ~removed, cur_w + scaled[v], cur_mask | vbit, rest - removed_w)
        descend(allowed & ~vbit, cur_w, cur_mask, rest - scaled[v])

    full = (1 << g.n) - 1
    descend(full, 0, 0, sum(scaled))
    return MwisResult(Fraction(best_w, g._den), VertexSet.from_mask(g.n, best_mask))


def weighted_matching_oracle(
    g: EdgeWeightedGraph, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[Fraction, tuple[tuple[int, ...], ...]]:
    """Maximum matching weight and every maximum-weight matching, exhaustively.

    Matchings are reported as sorted tuples of edge indices, the whole
    family in ascending lexicographic order.
    """
    m = g.edge_count
    _check_cap(m, cap, "edges")
    endpoint = [(1 << u) | (1 << v) for u, v, _ in g.edges]
    den = lcm(*(w.denominator for _, _, w in g.edges)) if m else 1
    scaled = [int(w * den) for _, _, w in g.edges]

    best_w = -1
    families: list[tuple[int, ...]] = []
    # stack entries: (next edge index to consider, used-vertex mask, weight, chosen edges)
    stack: list[tuple[int, int, int, tuple[int, ...]]] = [(0, 0, 0, ())]
    while stack:
        start, used, wt, chosen = stack.pop()
        if wt > best_w:
            best_w = wt
            families = [chosen]
        elif wt == best_w:
            families.append(chosen)
        for j in range(start, m):
            if endpoint[j] & used:
                continue
            stack.append((j + 1, used | endpoint[j], wt + scaled[j], chosen + (j,)))
    families.sort()
    return Fraction(best_w, den), tuple(families)
