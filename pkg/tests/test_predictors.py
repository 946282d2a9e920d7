"""Closed-form predictors against numeric ranks."""

import numpy as np
import pytest

from conftest import inertia_brute
from gainrank import (
    CycleType,
    HasTwins,
    InertiaTriple,
    InvalidBase,
    NotInCatalog,
    TypeParityError,
    adjacency,
    attach_pendants,
    build_cycle,
    build_infinity,
    build_theta,
    catalog_graph,
    cycle_inertia_formula,
    cycle_walk,
    evaluate_table1,
    evaluate_table2,
    infinity_rank_lower_bound,
    predict_rank,
    rank,
    rank_cycle_with_graph,
    theta_rank_lower_bound,
)
from gainrank.catalog import CATALOG_EDGES, catalog_edges
from gainrank.gaingraph import GainGraph
from gainrank.inertia import inertia_congruence
from gainrank.verify import sample_unit_gain


class TestCycleInertiaFormula:
    def test_examples(self):
        assert cycle_inertia_formula(CycleType.A, 4) == InertiaTriple(1, 1, 2)
        assert cycle_inertia_formula(CycleType.D, 3) == InertiaTriple(1, 2, 0)
        assert cycle_inertia_formula(CycleType.E, 5) == InertiaTriple(2, 2, 1)

    def test_parity_guard(self):
        with pytest.raises(TypeParityError):
            cycle_inertia_formula(CycleType.A, 5)
        with pytest.raises(TypeParityError):
            cycle_inertia_formula(CycleType.C, 4)

    def test_counts_sum_to_n(self):
        for n in range(3, 13):
            kinds = (
                (CycleType.A, CycleType.B)
                if n % 2 == 0
                else (CycleType.C, CycleType.D, CycleType.E)
            )
            for t in kinds:
                tri = cycle_inertia_formula(t, n)
                assert tri.pos + tri.neg + tri.zero == n


class TestGluedCycle:
    def test_examples(self):
        p = rank_cycle_with_graph(CycleType.A, 4, 2, 0)
        assert (p.kind, p.value) == ("exact", 4)
        p = rank_cycle_with_graph(CycleType.B, 4, 2, 0)
        assert (p.kind, p.value) == ("exact", 4)
        p = rank_cycle_with_graph(CycleType.C, 3, 2, 0)
        assert (p.kind, p.lower, p.upper) == ("bounds", 2, 5)

    def test_admits(self):
        p = rank_cycle_with_graph(CycleType.D, 5, 3, 1)
        assert p.admits(p.lower) and p.admits(p.upper)
        assert not p.admits(p.lower - 1)
        assert not p.admits(p.upper + 1)


class TestLowerBounds:
    def test_infinity_cases(self):
        assert infinity_rank_lower_bound(3, 3).lower == 6
        assert infinity_rank_lower_bound(4, 4).lower == 6
        assert infinity_rank_lower_bound(3, 4).lower == 6
        assert infinity_rank_lower_bound(5, 5).lower == 10

    def test_infinity_invalid(self):
        with pytest.raises(InvalidBase):
            infinity_rank_lower_bound(2, 4)

    def test_theta_cases(self):
        assert theta_rank_lower_bound(0, 1, 1).lower == 4
        assert theta_rank_lower_bound(1, 1, 1).lower == 4
        assert theta_rank_lower_bound(2, 1, 1).lower == 6
        assert theta_rank_lower_bound(0, 1, 2).lower == 4
        assert theta_rank_lower_bound(0, 2, 2).lower == 6
        assert theta_rank_lower_bound(1, 2, 2, odd_case_type_a=False).lower == 8
        assert theta_rank_lower_bound(1, 2, 2, odd_case_type_a=True).lower == 6
        assert theta_rank_lower_bound(3, 1, 1).lower == 6

    def test_theta_invalid(self):
        with pytest.raises(InvalidBase):
            theta_rank_lower_bound(0, 0, 2)


class TestTable1:
    def test_g9_all_ones_rank2(self):
        report = evaluate_table1(catalog_graph("G9"))
        assert report.satisfied and report.predicted_rank == 2
        assert rank(catalog_graph("G9")) == 2

    def test_g5_all_ones_rank3(self):
        report = evaluate_table1(catalog_graph("G5"))
        assert report.satisfied and report.predicted_rank == 3
        assert rank(catalog_graph("G5")) == 3

    def test_g5_type_e_gains_rank2(self):
        # triangle 1-2-3 carries product i (Type E); quad 1-2-4-3 stays
        # Type A; brute-force inertia of this assignment is (1, 1, 2)
        g = catalog_graph("G5", [1, 1, 1j, 1, 1])
        assert inertia_brute(adjacency(g)) == (1, 1, 2)
        report = evaluate_table1(g)
        assert report.satisfied and report.predicted_rank == 2
        assert rank(g) == 2

    def test_g1_zero_residual_rank4(self):
        gains = {e: complex(1.0) for e in CATALOG_EDGES["G1"]}
        gains[(1, 5)] = 1j
        gains[(3, 5)] = 1j
        g = GainGraph(5, gains)
        assert inertia_brute(adjacency(g)) == (2, 2, 1)
        report = evaluate_table1(g)
        assert report.satisfied and report.predicted_rank == 4
        assert rank(g) == 4

    def test_g1_generic_gains_unsatisfied(self):
        rng = np.random.default_rng(8)
        g = catalog_graph("G1", [sample_unit_gain(rng) for _ in range(6)])
        report = evaluate_table1(g)
        assert not report.satisfied
        assert report.predicted_rank is None
        assert rank(g) == 5

    def test_g4_has_no_rows(self):
        report = evaluate_table1(catalog_graph("G4"))
        assert not report.satisfied
        assert report.clauses == ()
        assert rank(catalog_graph("G4")) in (5, 6)

    def test_not_in_catalog(self):
        with pytest.raises(NotInCatalog):
            evaluate_table1(build_theta(2, 2, 2))


class TestTable2:
    def test_g13_any_gains(self):
        rng = np.random.default_rng(12)
        g = catalog_graph("G13", [sample_unit_gain(rng) for _ in range(6)])
        report = evaluate_table2(g)
        assert report.satisfied and report.predicted_rank == 4
        assert inertia_brute(adjacency(g)) == (2, 2, 1)
        assert rank(g) == 4

    def test_g12_type_e_gains(self):
        g = catalog_graph("G12", [1, 1, 1j, 1, 1, 1])
        report = evaluate_table2(g)
        assert report.satisfied and report.predicted_rank == 4
        assert rank(g) == 4

    def test_g12_all_ones_unsatisfied(self):
        g = catalog_graph("G12")
        report = evaluate_table2(g)
        assert not report.satisfied
        assert inertia_brute(adjacency(g)) == (2, 3, 0)
        assert rank(g) == 5

    def test_twins_rejected(self):
        g = attach_pendants(catalog_graph("G13"), 2, 1)  # second leaf at 2
        with pytest.raises(HasTwins):
            evaluate_table2(g)

    def test_not_in_catalog(self):
        g = attach_pendants(build_theta(2, 2, 2), 1, 1)
        with pytest.raises(NotInCatalog):
            evaluate_table2(g)


class TestPredictRank:
    def test_infinity_with_pendants_at_least_6(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            p, q = int(rng.integers(3, 6)), int(rng.integers(3, 6))
            l = int(rng.integers(1, 3))
            g = build_infinity(p, l, q)
            g = attach_pendants(g, int(rng.integers(1, g.n + 1)), 1)
            pred = predict_rank(g)
            assert pred.lower >= 6
            assert pred.admits(rank(g))

    def test_g5_type_e_exact_2(self):
        g = catalog_graph("G5", [1, 1, 1j, 1, 1])
        pred = predict_rank(g)
        assert (pred.kind, pred.value) == ("exact", 2)

    def test_g21_all_ones_exact_4(self):
        pred = predict_rank(catalog_graph("G21"))
        assert (pred.kind, pred.value) == ("exact", 4)
        assert rank(catalog_graph("G21")) == 4

    def test_pendant_free_unsatisfied_gets_floor_5(self):
        rng = np.random.default_rng(18)
        g = catalog_graph("G1", [sample_unit_gain(rng) for _ in range(6)])
        pred = predict_rank(g)
        assert pred.kind == "lower_bound" and pred.lower == 5
        assert pred.admits(rank(g))

    def test_big_base_floor_5(self):
        pred = predict_rank(build_theta(2, 2, 2))
        assert pred.kind == "lower_bound" and pred.lower == 5

    def test_predictions_admit_numeric_rank_random(self):
        rng = np.random.default_rng(19)
        for trial in range(60):
            if trial % 2 == 0:
                p, q = int(rng.integers(3, 5)), int(rng.integers(3, 5))
                base = build_infinity(p, int(rng.integers(1, 3)), q)
            else:
                base = build_theta(
                    int(rng.integers(0, 3)),
                    int(rng.integers(1, 3)),
                    int(rng.integers(1, 3)),
                )
            gains = [sample_unit_gain(rng) for _ in range(base.edge_count)]
            g = GainGraph(base.n, dict(zip([e for e in base.edges()], gains)))
            for _ in range(int(rng.integers(0, 4))):
                g = attach_pendants(
                    g, int(rng.integers(1, g.n + 1)), 1, [sample_unit_gain(rng)]
                )
            pred = predict_rank(g)
            assert pred.admits(rank(g)), (pred, rank(g))

    def test_split_residual_cycles_exact(self):
        # pendant at the bridge midpoint: the reduction severs the bridge
        # and leaves two disjoint cycles whose ranks add exactly
        g = build_infinity(3, 3, 3)  # bridge 5-6-7
        g = attach_pendants(g, 6, 1)
        pred = predict_rank(g)
        assert pred.kind == "exact"
        assert pred.value == rank(g) == 8
