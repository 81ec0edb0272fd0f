"""Bundled demo instances.

The pentagon is the package's standing regression fixture: a five-cycle
A(5)-B(4)-C(2)-D(1)-E(2) whose optimum {A, C} is unique, yet the pocket-sum
sufficient condition fails on the full subset {A, C} (its pocket {B, E, D}
also weighs 7).  It separates the sufficient pocket-sum test from the exact
characterizations, which is why half the test suite leans on it.
"""

from __future__ import annotations

from importlib import resources

from .auctions import AuctionInstance, auction_from_graph
from .graph import WeightedGraph


def pentagon() -> WeightedGraph:
    """Five-cycle with weights 5, 4, 2, 1, 2 and unique optimum {A, C}."""
    return WeightedGraph(
        weights=[5, 4, 2, 1, 2],
        edges=[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)],
        labels=["A", "B", "C", "D", "E"],
    )


def pentagon_auction() -> AuctionInstance:
    """The pentagon realized as five bids sharing one item per edge."""
    return auction_from_graph(pentagon())


def pentagon_document() -> str:
    """The bundled graph file's text (same instance as `pentagon`)."""
    return resources.files("gwis.data").joinpath("pentagon.gwis").read_text("utf-8")
