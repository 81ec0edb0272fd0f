"""Uniqueness checks: worked examples, witnesses, and oracle equivalence."""

from __future__ import annotations

import itertools
import random

import pytest

from gwis import (
    AlternateAlphaSet,
    BoundaryViolation,
    CapacityError,
    DeletionSurvivor,
    EdgeWeightedGraph,
    InputError,
    Verdict,
    ViolatingSubset,
    WeightedGraph,
    check_lemma1,
    check_oracle,
    check_thm1,
    check_thm2_tree,
    check_thm3,
    check_thm4,
    check_unique_matching,
    enumerate_alpha_sets,
    max_pocket_set,
    random_graph,
    random_tree,
    recheck_witness,
    solve_oracle,
    weighted_matching_oracle,
)
from gwis.fixtures import pentagon

from _builders import edgeless, k2, star


def alpha_set(g):
    return solve_oracle(g).witness


class TestDeletionCheck:
    def test_pentagon_unique(self):
        g = pentagon()
        report = check_thm1(g, g.set_by_labels("AC"))
        assert report.verdict is Verdict.UNIQUE and report.alpha == 7
        # the two deletions really do drop the optimum to 6
        assert solve_oracle(g.delete_vertex(0)).alpha == 6
        assert solve_oracle(g.delete_vertex(2)).alpha == 6

    def test_twins_not_unique(self):
        g = k2(1, 1)
        report = check_thm1(g, g.vertex_set([0]))
        assert report.verdict is Verdict.NOT_UNIQUE
        assert isinstance(report.witness, DeletionSurvivor)
        assert report.witness.vertex == 0 and report.witness.alpha_without == 1
        assert recheck_witness(g, report)

    def test_single_vertex(self):
        g = edgeless([5])
        assert check_thm1(g, g.vertex_set([0])).verdict is Verdict.UNIQUE

    def test_rejects_non_alpha_sets(self):
        g = pentagon()
        with pytest.raises(InputError):
            check_thm1(g, g.set_by_labels("DE"))  # not independent
        with pytest.raises(InputError):
            check_thm1(g, g.set_by_labels("BD"))  # independent but not maximum


class TestPocketSumCheck:
    def test_pentagon_condition_fails_but_unique(self):
        g = pentagon()
        report = check_lemma1(g, g.set_by_labels("AC"))
        assert report.verdict is Verdict.CONDITION_FAILS
        assert isinstance(report.witness, ViolatingSubset)
        assert g.labels_of(report.witness.subset) == ("A", "C")
        assert report.witness.subset_weight == 7
        assert report.witness.rival_weight == 7
        assert recheck_witness(g, report)
        # ... while the graph is in fact unique: the condition is one-way only
        assert check_oracle(g).verdict is Verdict.UNIQUE

    def test_heavy_star_center_holds(self):
        g = star(10, [1, 1, 1])
        report = check_lemma1(g, g.vertex_set([0]))
        assert report.verdict is Verdict.CONDITION_HOLDS

    def test_single_vertex_holds(self):
        g = edgeless([1])
        assert check_lemma1(g, g.vertex_set([0])).verdict is Verdict.CONDITION_HOLDS

    def test_subset_cap(self):
        g = edgeless([1] * 6)
        with pytest.raises(CapacityError):
            check_lemma1(g, g.vertices(), subset_cap=5)

    def test_first_violation_is_smallest(self):
        g = star(3, [1, 1, 1])
        report = check_lemma1(g, g.vertex_set([1, 2, 3]))
        assert report.verdict is Verdict.CONDITION_FAILS
        # singletons and pairs pass; only the full leaf set violates
        assert g.labels_of(report.witness.subset) == ("l1", "l2", "l3")


class TestTreeCheck:
    def test_heavy_star_unique(self):
        g = star(10, [1, 1, 1])
        assert check_thm2_tree(g, g.vertex_set([0])).verdict is Verdict.UNIQUE

    def test_balanced_star_not_unique(self):
        g = star(3, [1, 1, 1])
        report = check_thm2_tree(g, g.vertex_set([1, 2, 3]))
        assert report.verdict is Verdict.NOT_UNIQUE
        assert g.labels_of(report.witness.subset) == ("l1", "l2", "l3")
        assert report.witness.rival_weight == 3
        assert len(enumerate_alpha_sets(g).sets) == 2

    def test_single_vertex_tree(self):
        g = edgeless([2])
        assert check_thm2_tree(g, g.vertex_set([0])).verdict is Verdict.UNIQUE

    def test_non_tree_rejected(self):
        g = pentagon()
        with pytest.raises(InputError, match="thm3"):
            check_thm2_tree(g, g.set_by_labels("AC"))


class TestPocketOptimum:
    def test_pentagon_values(self):
        g = pentagon()
        i = g.set_by_labels("AC")
        best_full = max_pocket_set(g, i, i)
        assert best_full.alpha == 6
        assert set(g.labels_of(best_full.witness)) == {"B", "E"}
        best_a = max_pocket_set(g, g.set_by_labels("A"), i)
        assert best_a.alpha == 2 and g.labels_of(best_a.witness) == ("E",)

    def test_empty_pocket(self):
        g = edgeless([1, 1])
        best = max_pocket_set(g, g.vertex_set([0]), g.vertices())
        assert best.alpha == 0 and not best.witness

    def test_pentagon_unique(self):
        g = pentagon()
        report = check_thm3(g, g.set_by_labels("AC"))
        assert report.verdict is Verdict.UNIQUE and report.alpha == 7

    def test_twins_not_unique(self):
        g = k2(1, 1)
        report = check_thm3(g, g.vertex_set([0]))
        assert report.verdict is Verdict.NOT_UNIQUE
        assert isinstance(report.witness, ViolatingSubset)
        assert list(report.witness.subset) == [0]
        assert report.witness.rival_weight == 1
        assert recheck_witness(g, report)

    def test_single_vertex(self):
        g = edgeless([3])
        assert check_thm3(g, g.vertex_set([0])).verdict is Verdict.UNIQUE


class TestBoundaryCheck:
    def test_pentagon_unique(self):
        g = pentagon()
        assert check_thm4(g, g.set_by_labels("AC")).verdict is Verdict.UNIQUE

    def test_pentagon_boundary_values(self):
        # the five independent outside sets and their inside-neighbor weights
        g = pentagon()
        i = g.set_by_labels("AC")
        expected = {
            ("B",): 7,
            ("E",): 5,
            ("D",): 2,
            ("B", "E"): 7,
            ("B", "D"): 7,
        }
        outside = i.complement()
        seen = {}
        for r in (1, 2, 3):
            for combo in itertools.combinations(outside.members(), r):
                j = g.vertex_set(combo)
                if not g.is_independent(j):
                    continue
                seen[g.labels_of(j)] = g.weight_of(g.set_neighborhood(j) & i)
        assert seen == expected
        for labels_, boundary in expected.items():
            j_weight = sum(g.weight(v) for v in g.set_by_labels(labels_))
            assert boundary > j_weight

    def test_twins_not_unique(self):
        g = k2(1, 1)
        report = check_thm4(g, g.vertex_set([0]))
        assert report.verdict is Verdict.NOT_UNIQUE
        assert isinstance(report.witness, BoundaryViolation)
        assert list(report.witness.subset) == [1]
        assert report.witness.boundary_weight == 1
        assert recheck_witness(g, report)

    def test_edgeless_everything_chosen(self):
        g = edgeless([1, 2, 3])
        assert check_thm4(g, g.vertices()).verdict is Verdict.UNIQUE

    def test_cap_counts_outside_vertices(self):
        g = star(10, [1] * 7)
        with pytest.raises(CapacityError):
            check_thm4(g, g.vertex_set([0]), subset_cap=6)


class TestOracleCheck:
    def test_pentagon(self):
        report = check_oracle(pentagon())
        assert report.verdict is Verdict.UNIQUE and report.witness is None

    def test_tie_carries_alternate(self):
        g = k2(1, 1)
        report = check_oracle(g, g.vertex_set([1]))
        assert report.verdict is Verdict.NOT_UNIQUE
        assert isinstance(report.witness, AlternateAlphaSet)
        assert list(report.witness.other) == [0]
        assert recheck_witness(g, report)

    def test_rejects_non_alpha_set(self):
        with pytest.raises(InputError):
            check_oracle(pentagon(), pentagon().set_by_labels("BD"))


class TestMatchingUniqueness:
    def test_path_unique(self):
        eg = EdgeWeightedGraph(3, [(0, 1, 2), (1, 2, 1)])
        assert check_unique_matching(eg, (0,)).verdict is Verdict.UNIQUE

    def test_c4_not_unique(self):
        eg = EdgeWeightedGraph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
        for matching in weighted_matching_oracle(eg)[1]:
            report = check_unique_matching(eg, matching)
            assert report.verdict is Verdict.NOT_UNIQUE

    def test_single_edge(self):
        eg = EdgeWeightedGraph(2, [(0, 1, 3)])
        assert check_unique_matching(eg, (0,)).verdict is Verdict.UNIQUE

    def test_empty_graph_empty_matching(self):
        eg = EdgeWeightedGraph(3, [])
        assert check_unique_matching(eg, ()).verdict is Verdict.UNIQUE

    def test_rejects_non_maximum(self):
        eg = EdgeWeightedGraph(3, [(0, 1, 2), (1, 2, 1)])
        with pytest.raises(InputError):
            check_unique_matching(eg, (1,))
        with pytest.raises(InputError):
            check_unique_matching(EdgeWeightedGraph(3, [(0, 1, 1), (1, 2, 1)]), (0, 1))


class TestOracleEquivalence:
    """The central claim: the three exact checks agree with enumeration."""

    def test_general_graphs(self):
        rng = random.Random(2026)
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 9), rng.uniform(0.05, 0.95))
            family = enumerate_alpha_sets(g)
            unique = family.unique
            for i in family.sets:
                assert (check_thm1(g, i).verdict is Verdict.UNIQUE) == unique
                assert (check_thm3(g, i).verdict is Verdict.UNIQUE) == unique
                assert (check_thm4(g, i).verdict is Verdict.UNIQUE) == unique
                lemma = check_lemma1(g, i)
                if lemma.verdict is Verdict.CONDITION_HOLDS:
                    assert unique

    def test_trees(self):
        rng = random.Random(2027)
        for _ in range(200):
            t = random_tree(rng, rng.randint(1, 10))
            family = enumerate_alpha_sets(t)
            for i in family.sets:
                verdict = check_thm2_tree(t, i).verdict
                assert (verdict is Verdict.UNIQUE) == family.unique

    def test_every_emitted_witness_rechecks(self):
        rng = random.Random(2028)
        checked = 0
        for _ in range(120):
            g = random_graph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.9))
            family = enumerate_alpha_sets(g)
            i = family.sets[0]
            for report in (
                check_thm1(g, i),
                check_thm3(g, i),
                check_thm4(g, i),
                check_lemma1(g, i),
                check_oracle(g, i),
            ):
                if report.witness is not None:
                    checked += 1
                    assert recheck_witness(g, report)
        assert checked > 50  # the corpus really exercised witnesses


class TestZeroWeightEdgeCases:
    """Zero weights break set-level uniqueness in ways the checks inherit;
    the solvers stay exact on them and the oracle reports ties faithfully."""

    def test_zero_weight_isolated_vertex_makes_ties(self):
        g = WeightedGraph([3, 0], [])
        family = enumerate_alpha_sets(g)
        assert family.alpha == 3 and len(family.sets) == 2

    def test_deletion_check_on_padded_optimum(self):
        g = WeightedGraph([3, 0], [])
        report = check_thm1(g, g.vertices())
        assert report.verdict is Verdict.NOT_UNIQUE
        assert report.witness.vertex == 1
