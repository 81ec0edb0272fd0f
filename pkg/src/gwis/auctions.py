"""Single-minded combinatorial auctions as vertex-weighted conflict graphs.

A bid names a bundle of items and a value.  Two bids conflict when their
bundles intersect, so feasible outcomes are independent sets of the conflict
graph and winner determination is exactly the maximum-weight independent
set problem.  An auction is *unique* when the optimal winner set is unique;
for unique auctions we also report the bid-value perturbation margin within
which the winners cannot change.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FormatError, InputError
from .graph import WeightedGraph, as_weight
from .perturbation import PerturbationRadius, compute_radius
from .solver import DEFAULT_ORACLE_CAP, enumerate_alpha_sets


@dataclass(frozen=True)
class Bid:
    """One all-or-nothing bid on a nonempty bundle of items."""

    id: str
    value: Fraction
    items: frozenset[str]

    def __post_init__(self) -> None:
        if not self.id or any(c.isspace() for c in self.id) or "#" in self.id:
            raise InputError(f"bid id {self.id!r} is empty or contains whitespace/'#'")
        object.__setattr__(self, "value", as_weight(self.value))
        object.__setattr__(self, "items", frozenset(self.items))
        if not self.items:
            raise InputError(f"bid {self.id!r} names no items")
        for item in self.items:
            if not item or any(c.isspace() for c in item) or "#" in item:
                raise InputError(
                    f"item {item!r} in bid {self.id!r} is empty or contains "
                    f"whitespace/'#'"
                )


@dataclass(frozen=True)
class AuctionInstance:
    bids: tuple[Bid, ...]
    items: frozenset[str] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "bids", tuple(self.bids))
        ids = [b.id for b in self.bids]
        if len(set(ids)) != len(ids):
            dup = next(i for i in ids if ids.count(i) > 1)
            raise InputError(f"duplicate bid id {dup!r}")
        universe: set[str] = set()
        for b in self.bids:
            universe |= b.items
        object.__setattr__(self, "items", frozenset(universe))


@dataclass(frozen=True)
class AuctionOutcome:
    """Winner determination result.

    `winner_sets` lists every optimal winner set (ascending by bid order);
    `winners` is the first of them.  `margin` is the value-perturbation
    radius, present only when the outcome is unique.
    """

    winners: frozenset[str]
    revenue: Fraction
    unique: bool
    margin: PerturbationRadius | None
    winner_sets: tuple[frozenset[str], ...]


def to_conflict_graph(auction: AuctionInstance) -> WeightedGraph:
    """One vertex per bid (weight = value); edges join item-sharing bids."""
    bids = auction.bids
    edges = [
        (i, j)
        for i in range(len(bids))
        for j in range(i + 1, len(bids))
        if bids[i].items & bids[j].items
    ]
    return WeightedGraph([b.value for b in bids], edges, [b.id for b in bids])


def resolve_auction(
    auction: AuctionInstance, cap: int = DEFAULT_ORACLE_CAP
) -> AuctionOutcome:
    """Optimal winner set, revenue, uniqueness, and margin when unique."""
    graph = to_conflict_graph(auction)
    family = enumerate_alpha_sets(graph, cap)
    winner_sets = tuple(frozenset(graph.labels_of(s)) for s in family.sets)
    winners = winner_sets[0]
    taken: set[str] = set()
    for bid in auction.bids:
        if bid.id in winners:
            assert not (bid.items & taken), "winners share an item"
            taken |= bid.items
    margin = compute_radius(graph, family.sets[0], cap) if family.unique else None
    return AuctionOutcome(
        winners=winners,
        revenue=family.alpha,
        unique=family.unique,
        margin=margin,
        winner_sets=winner_sets,
    )


def auction_from_graph(g: WeightedGraph) -> AuctionInstance:
    """Realize a graph as an auction: one bid per vertex, one item per edge.

    Endpoint bids share the edge's item, so the conflict graph of the result
    is the original graph.  Isolated vertices get a private item to keep
    bundles nonempty.
    """
    items: list[list[str]] = [[] for _ in range(g.n)]
    for index, (u, v) in enumerate(g.edges()):
        items[u].append(f"e{index}")
        items[v].append(f"e{index}")
    for v in range(g.n):
        if not items[v]:
            items[v].append(f"s{v}")
    return AuctionInstance(
        tuple(
            Bid(g.label(v), g.weight(v), frozenset(items[v])) for v in range(g.n)
        )
    )


def parse_auction(text: str) -> AuctionInstance:
    """Parse the line-oriented auction format.

    One bid per line: ``a <bid-id> <value> <item> [<item> ...]`` with values
    in decimal or p/q notation; ``#`` starts a comment; blank lines are
    ignored.
    """
    bids = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] != "a":
            raise FormatError(f"expected a bid line starting with 'a', got {raw!r}", lineno)
        if len(fields) < 4:
            raise FormatError("bid line needs an id, a value and at least one item", lineno)
        bid_id, value, *item_list = fields[1:]
        if bid_id in seen:
            raise FormatError(f"duplicate bid id {bid_id!r}", lineno)
        seen.add(bid_id)
        try:
            bids.append(Bid(bid_id, as_weight(value), frozenset(item_list)))
        except InputError as exc:
            raise FormatError(str(exc), lineno) from exc
    return AuctionInstance(tuple(bids))


def serialize_auction(auction: AuctionInstance) -> str:
    """Inverse of `parse_auction`; items are emitted sorted."""
    lines = [
        f"a {b.id} {b.value} {' '.join(sorted(b.items))}" for b in auction.bids
    ]
    return "\n".join(lines) + "\n"
