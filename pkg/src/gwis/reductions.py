"""Hardness gadgets: weighted-independent-set instances in uniqueness clothing.

Both constructions graft unit-weight gadget vertices onto an arbitrary
weighted graph G so that "does G have an independent set of weight at least
k?" becomes a uniqueness question about the enlarged graph H:

* `reduce_ui1` adds k pairwise non-adjacent unit vertices, each joined to
  all of G.  The new vertices form the candidate set; it is the unique
  optimum of H exactly when G has no independent set of weight >= k.
* `reduce_ui2` adds an independent block I of k+1 unit vertices joined to
  everything else, plus a pendant pair R of two adjacent unit vertices
  joined only to I.  H has a unique optimum exactly when G has no
  independent set of weight >= k.

The `verify_*` helpers decide both sides of each equivalence with the
exhaustive oracle and report whether they agree; any False is a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .graph import VertexSet, WeightedGraph
from .solver import DEFAULT_ORACLE_CAP, enumerate_alpha_sets, solve_oracle


@dataclass(frozen=True)
class Ui1Instance:
    """Enlarged graph, the candidate set of new vertices, and the origin map
    (original vertex index, or None for gadget vertices)."""

    graph: WeightedGraph
    candidate: VertexSet
    origin: tuple[int | None, ...]


@dataclass(frozen=True)
class Ui2Instance:
    graph: WeightedGraph
    gadget_i: VertexSet
    gadget_r: VertexSet
    origin: tuple[int | None, ...]


def _fresh_labels(taken: Sequence[str], base: str, count: int) -> list[str]:
    """`count` labels of the form base1, base2, ... avoiding collisions."""
    used = set(taken)
    out: list[str] = []
    j = 1
    while len(out) < count:
        candidate = f"{base}{j}"
        while candidate in used:
            candidate = "_" + candidate
        used.add(candidate)
        out.append(candidate)
        j += 1
    return out


def reduce_ui1(g: WeightedGraph, k: int) -> Ui1Instance:
    """Join k independent unit-weight vertices to every vertex of g."""
    if k < 1:
        raise InputError(f"gadget size k must be at least 1, got {k}")
    n = g.n
    weights = list(g.weights) + [1] * k
    edges = list(g.edges())
    for new in range(n, n + k):
        edges.extend((orig, new) for orig in range(n))
    labels = list(g.labels) + _fresh_labels(g.labels, "u", k)
    graph = WeightedGraph(weights, edges, labels)
    candidate = VertexSet(n + k, range(n, n + k))
    origin = tuple(range(n)) + (None,) * k
    return Ui1Instance(graph, candidate, origin)


def reduce_ui2(g: WeightedGraph, k: int) -> Ui2Instance:
    """Add a dominating block of k+1 unit vertices and a pendant edge pair."""
    if k < 1:
        raise InputError(f"gadget size k must be at least 1, got {k}")
    n = g.n
    block = range(n, n + k + 1)
    r1, r2 = n + k + 1, n + k + 2
    weights = list(g.weights) + [1] * (k + 3)
    edges = list(g.edges())
    for b in block:
        edges.extend((orig, b) for orig in range(n))
        edges.extend(((b, r1), (b, r2)))
    edges.append((r1, r2))
    labels = list(g.labels)
    labels += _fresh_labels(labels, "u", k + 1)
    labels += _fresh_labels(labels, "r", 2)
    graph = WeightedGraph(weights, edges, labels)
    return Ui2Instance(
        graph,
        VertexSet(graph.n, block),
        VertexSet(graph.n, (r1, r2)),
        tuple(range(n)) + (None,) * (k + 3),
    )


def verify_reduction_ui1(
    g: WeightedGraph, k: int, cap: int = DEFAULT_ORACLE_CAP
) -> bool:
    """Oracle check of the first equivalence for one (g, k) pair.

    True iff [g has an independent set of weight >= k] matches [the candidate
    is not the unique optimum of the enlarged graph].
    """
    instance = reduce_ui1(g, k)
    has_heavy_set = solve_oracle(g, cap).alpha >= k
    family = enumerate_alpha_sets(instance.graph, cap)
    candidate_unique = family.unique and family.sets[0] == instance.candidate
    return has_heavy_set == (not candidate_unique)


def verify_reduction_ui2(
    g: WeightedGraph, k: int, cap: int = DEFAULT_ORACLE_CAP
) -> bool:
    """Oracle check of the second equivalence for one (g, k) pair.

    True iff [g has an independent set of weight >= k] matches [the enlarged
    graph has more than one optimum].
    """
    instance = reduce_ui2(g, k)
    has_heavy_set = solve_oracle(g, cap).alpha >= k
    family = enumerate_alpha_sets(instance.graph, cap)
    return has_heavy_set == (not family.unique)
