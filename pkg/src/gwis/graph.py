"""Vertex-weighted graphs, bit-indexed vertex sets, and neighborhood operators.

All types here are immutable after construction and safe to share across
threads or worker processes.  Weights are exact rationals
(`fractions.Fraction`) end to end, so the strict inequalities every
uniqueness verdict rests on never depend on floating-point rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Sequence

from .errors import InputError

Weight = Fraction

_WEIGHT_INPUT = (int, str, Fraction)


def as_weight(value: int | str | Fraction) -> Fraction:
    """Coerce a value to an exact nonnegative weight.

    Accepts ints, Fractions and strings in decimal ("2.5") or rational
    ("5/2") notation.  Floats are rejected: they already carry rounding
    error and would poison exact comparisons downstream.
    """
    if isinstance(value, float):
        raise InputError(
            f"refusing float weight {value!r}; pass a string or Fraction for exactness"
        )
    if not isinstance(value, _WEIGHT_INPUT):
        raise InputError(f"cannot interpret {value!r} as a weight")
    try:
        w = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse weight {value!r}") from exc
    if w < 0:
        raise InputError(f"weight must be nonnegative, got {value!r}")
    return w


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """An immutable subset of a graph's vertices {0..n-1}, stored as a bitmask.

    Instances are bound to a universe size `n`; set algebra between sets of
    different universes is an error.  Iteration is always in ascending
    vertex order, which keeps every enumeration in the package deterministic.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        if n < 0:
            raise InputError(f"universe size must be nonnegative, got {n}")
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} outside universe of size {n}")
            mask |= 1 << v
        self.n = n
        self.mask = mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> VertexSet:
        if mask < 0 or mask >> n:
            raise InputError(f"mask {mask:#x} does not fit a universe of size {n}")
        s = cls.__new__(cls)
        s.n = n
        s.mask = mask
        return s

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls.from_mask(n, (1 << n) - 1)

    def _check_universe(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise InputError(
                f"vertex sets belong to different universes ({self.n} vs {other.n})"
            )

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check_universe(other)
        return VertexSet.from_mask(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check_universe(other)
        return VertexSet.from_mask(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check_universe(other)
        return VertexSet.from_mask(self.n, self.mask & ~other.mask)

    def __xor__(self, other: VertexSet) -> VertexSet:
        self._check_universe(other)
        return VertexSet.from_mask(self.n, self.mask ^ other.mask)

    def complement(self) -> VertexSet:
        return VertexSet.from_mask(self.n, ~self.mask & ((1 << self.n) - 1))

    def issubset(self, other: VertexSet) -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def isdisjoint(self, other: VertexSet) -> bool:
        self._check_universe(other)
        return self.mask & other.mask == 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.mask >> v & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __reduce__(self):
        return (VertexSet.from_mask, (self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}} of {self.n})"


def _validated_labels(n: int, labels: Sequence[str] | None) -> tuple[str, ...]:
    if labels is None:
        return tuple(str(i + 1) for i in range(n))
    out = tuple(labels)
    if len(out) != n:
        raise InputError(f"expected {n} labels, got {len(out)}")
    seen: set[str] = set()
    for lab in out:
        if not lab or any(c.isspace() for c in lab) or "#" in lab:
            raise InputError(f"label {lab!r} is empty or contains whitespace/'#'")
        if lab in seen:
            raise InputError(f"duplicate label {lab!r}")
        seen.add(lab)
    return out


class WeightedGraph:
    """Immutable simple undirected graph with exact nonnegative vertex weights.

    Vertices are the dense range 0..n-1; optional string labels are kept for
    I/O round-trips and witness printing.  Adjacency is stored as one bitmask
    per vertex.  Duplicate edges collapse silently; self-loops are rejected.
    """

    __slots__ = ("n", "_adj", "_weights", "_labels", "_den", "_scaled")

    def __init__(
        self,
        weights: Sequence[int | str | Fraction],
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ) -> None:
        ws = tuple(as_weight(w) for w in weights)
        n = len(ws)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._weights = ws
        self._labels = _validated_labels(n, labels)
        # Common-denominator integer weights let the hot enumeration loops
        # work in plain ints while staying exact.
        den = lcm(*(w.denominator for w in ws)) if ws else 1
        self._den = den
        self._scaled = tuple(int(w * den) for w in ws)

    # -- basic accessors ----------------------------------------------------

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return self._weights

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def weight(self, v: int) -> Fraction:
        self._check_vertex(v)
        return self._weights[v]

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self._labels[v]

    def labels_of(self, s: VertexSet) -> tuple[str, ...]:
        self._check_set(s)
        return tuple(self._labels[v] for v in s)

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet(self.n, members)

    def set_by_labels(self, labels: Iterable[str]) -> VertexSet:
        index = {lab: i for i, lab in enumerate(self._labels)}
        members = []
        for lab in labels:
            if lab not in index:
                raise InputError(f"unknown vertex label {lab!r}")
            members.append(index[lab])
        return VertexSet(self.n, members)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def adjacency_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in _bits(self._adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def weight_of(self, s: VertexSet) -> Fraction:
        self._check_set(s)
        return Fraction(self._scaled_weight(s.mask), self._den)

    def _scaled_weight(self, mask: int) -> int:
        scaled = self._scaled
        return sum(scaled[v] for v in _bits(mask))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} outside 0..{self.n - 1}")

    def _check_set(self, s: VertexSet) -> None:
        if s.n != self.n:
            raise InputError(
                f"vertex set over universe {s.n} used with graph on {self.n} vertices"
            )

    # -- neighborhoods and pockets -------------------------------------------

    def neighborhood(self, x: int) -> VertexSet:
        """Open neighborhood: the vertices adjacent to x (never x itself)."""
        self._check_vertex(x)
        return VertexSet.from_mask(self.n, self._adj[x])

    def set_neighborhood(self, s: VertexSet) -> VertexSet:
        """Union of the open neighborhoods of the members of s."""
        self._check_set(s)
        out = 0
        for v in s:
            out |= self._adj[v]
        return VertexSet.from_mask(self.n, out)

    def pocket(self, i0: VertexSet, ambient: VertexSet) -> VertexSet:
        """Vertices adjacent to i0 but to no member of ambient - i0.

        `ambient` is the independent set i0 is taken from.  These are the
        vertices only i0 "guards": swap i0 out of ambient and they become
        available.  With i0 == ambient this is just the whole neighborhood
        of ambient.
        """
        self._check_set(i0)
        self._check_set(ambient)
        if not i0.issubset(ambient):
            raise InputError("i0 must be a subset of the ambient set")
        inner = self.set_neighborhood(i0).mask
        outer = self.set_neighborhood(ambient - i0).mask
        return VertexSet.from_mask(self.n, inner & ~outer)

    def pocket_literal(self, i0: VertexSet) -> VertexSet:
        """Per-vertex private-neighbor union: U_{x in i0} N(x) - N(i0 - {x}).

        Kept for documentation and tests; the ambient-relative `pocket` is
        what every uniqueness check uses (the two differ as soon as two
        members of i0 share a neighbor).
        """
        self._check_set(i0)
        out = 0
        for x in i0:
            rest = 0
            for y in i0:
                if y != x:
                    rest |= self._adj[y]
            out |= self._adj[x] & ~rest
        return VertexSet.from_mask(self.n, out)

    # -- structure -----------------------------------------------------------

    def is_independent(self, s: VertexSet) -> bool:
        """True iff no edge joins two members of s."""
        self._check_set(s)
        mask = s.mask
        for v in _bits(mask):
            if self._adj[v] & mask:
                return False
        return True

    def induced_subgraph(self, s: VertexSet) -> tuple[WeightedGraph, tuple[int, ...]]:
        """Subgraph on s with inherited edges, weights and labels.

        Returns (subgraph, kept) where kept[i] is the original index of the
        subgraph's vertex i, so witnesses found in the subgraph can be
        translated back.
        """
        self._check_set(s)
        kept = tuple(s)
        new_index = {orig: i for i, orig in enumerate(kept)}
        edges = []
        for i, orig in enumerate(kept):
            for other in _bits(self._adj[orig] & s.mask):
                if other > orig:
                    edges.append((i, new_index[other]))
        sub = WeightedGraph(
            [self._weights[v] for v in kept],
            edges,
            [self._labels[v] for v in kept],
        )
        return sub, kept

    def delete_vertex(self, x: int) -> WeightedGraph:
        self._check_vertex(x)
        keep = VertexSet.from_mask(self.n, ((1 << self.n) - 1) ^ (1 << x))
        sub, _ = self.induced_subgraph(keep)
        return sub

    def with_weights(self, weights: Sequence[int | str | Fraction]) -> WeightedGraph:
        """Copy of this graph with the same edges and labels but new weights."""
        if len(weights) != self.n:
            raise InputError(f"expected {self.n} weights, got {len(weights)}")
        return WeightedGraph(weights, self.edges(), self._labels)

    def is_tree(self) -> bool:
        """True iff the graph is connected with exactly n - 1 edges."""
        if self.n == 0:
            return False
        if self.edge_count != self.n - 1:
            return False
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= self._adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    # -- object protocol -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self._adj == other._adj
            and self._weights == other._weights
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj, self._weights, self._labels))

    def __reduce__(self):
        return (WeightedGraph, (self._weights, tuple(self.edges()), self._labels))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.edge_count})"


class EdgeWeightedGraph:
    """Immutable simple undirected graph with exact nonnegative edge weights."""

    __slots__ = ("n", "edges", "_labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, int | str | Fraction]],
        labels: Sequence[str] | None = None,
    ) -> None:
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        norm: list[tuple[int, int, Fraction]] = []
        seen: set[tuple[int, int]] = set()
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            norm.append((key[0], key[1], as_weight(w)))
        self.n = n
        self.edges = tuple(norm)
        self._labels = _validated_labels(n, labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label(self, v: int) -> str:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} outside 0..{self.n - 1}")
        return self._labels[v]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_label(self, index: int) -> str:
        u, v, _ = self.edges[index]
        return f"{self._labels[u]}-{self._labels[v]}"

    def matching_weight(self, edge_indices: Iterable[int]) -> Fraction:
        return sum((self.edges[i][2] for i in edge_indices), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeWeightedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self._labels))

    def __reduce__(self):
        return (EdgeWeightedGraph, (self.n, self.edges, self._labels))

    def __repr__(self) -> str:
        return f"EdgeWeightedGraph(n={self.n}, m={self.edge_count})"


def line_graph(g: EdgeWeightedGraph) -> WeightedGraph:
    """Vertex-weighted intersection graph of g's edges.

    One vertex per edge of g, carrying that edge's weight; two vertices are
    adjacent iff the underlying edges share an endpoint.  Matchings of g
    correspond exactly to independent sets of the result.
    """
    m = g.edge_count
    pairs = []
    for i in range(m):
        u1, v1, _ = g.edges[i]
        for j in range(i + 1, m):
            u2, v2, _ = g.edges[j]
            if u1 in (u2, v2) or v1 in (u2, v2):
                pairs.append((i, j))
    return WeightedGraph(
        [w for _, _, w in g.edges],
        pairs,
        [g.edge_label(i) for i in range(m)],
    )
