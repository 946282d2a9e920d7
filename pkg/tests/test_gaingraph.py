"""Value model: gains, graphs, builders."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import is_isomorphic
from gainrank import (
    GainMismatch,
    InvalidBase,
    InvalidGain,
    TooSmall,
    VertexOutOfRange,
    as_unit_gain,
    attach_pendants,
    build_cycle,
    build_infinity,
    build_theta,
    catalog_graph,
    components,
    disjoint_union,
    empty_graph,
    gauge_transform,
    induced_subgraph,
    is_connected,
    make_gain,
    path_graph,
    relabel,
    star_graph,
)
from gainrank.gaingraph import GainGraph


class TestMakeGain:
    def test_axis_values(self):
        assert abs(make_gain(0.0) - 1) <= 1e-12
        assert abs(make_gain(0.25) - 1j) <= 1e-12
        assert abs(make_gain(0.5) - (-1)) <= 1e-12

    def test_non_finite_rejected(self):
        for bad in (math.inf, -math.inf, math.nan):
            with pytest.raises(InvalidGain):
                make_gain(bad)

    @given(st.floats(min_value=-8.0, max_value=8.0))
    @settings(max_examples=200)
    def test_periodic_and_unit(self, t):
        z = make_gain(t)
        assert z == make_gain(t + 1.0)
        assert abs(abs(z) - 1.0) <= 1e-12

    @given(st.floats(min_value=0.0, max_value=1.0))
    def test_inverse_is_conjugate(self, t):
        z = make_gain(t)
        assert z.conjugate() == complex(z.real, -z.imag)
        assert abs(z * z.conjugate() - 1.0) <= 1e-12


class TestUnitValidation:
    def test_renormalizes_within_band(self):
        z = as_unit_gain(complex(1.0 + 5e-10, 0.0))
        assert abs(z) == 1.0

    def test_rejects_off_circle(self):
        with pytest.raises(InvalidGain):
            as_unit_gain(0.5 + 0.5j)
        with pytest.raises(InvalidGain):
            as_unit_gain(0.0)


class TestGainGraph:
    def test_hermitian_symmetry(self):
        g = GainGraph(2, {(1, 2): 1j})
        assert g.gain(1, 2) == 1j
        assert g.gain(2, 1) == -1j

    def test_reverse_key_stores_conjugate(self):
        g = GainGraph(2, {(2, 1): 1j})
        assert g.gain(2, 1) == 1j
        assert g.gain(1, 2) == -1j

    def test_rejects_self_loop_and_duplicates(self):
        with pytest.raises(GainMismatch):
            GainGraph(2, {(1, 1): 1})
        with pytest.raises(GainMismatch):
            GainGraph(2, {(1, 2): 1, (2, 1): 1})

    def test_rejects_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            GainGraph(2, {(1, 3): 1})

    def test_missing_edge_gain(self):
        g = path_graph(3)
        with pytest.raises(GainMismatch):
            g.gain(1, 3)

    def test_degrees_and_neighbors(self):
        g = star_graph(4)
        assert g.degree(1) == 3
        assert g.neighbors(1) == (2, 3, 4)
        assert g.degree(2) == 1


class TestBuildCycle:
    def test_all_ones_triangle(self):
        g = build_cycle(3)
        assert g.edges() == [(1, 2), (1, 3), (2, 3)]
        assert all(g.gain(u, v) == 1 for u, v in g.edges())

    def test_negated_edge(self):
        g = build_cycle(4, [1, 1, 1, -1])
        assert g.gain(4, 1) == -1

    def test_hermitian_derived(self):
        g = build_cycle(3, [1, 1, make_gain(0.25)])
        assert abs(g.gain(3, 1) - 1j) <= 1e-12
        assert abs(g.gain(1, 3) + 1j) <= 1e-12

    def test_too_small(self):
        with pytest.raises(TooSmall):
            build_cycle(2, [1, 1])

    def test_gain_count_mismatch(self):
        with pytest.raises(GainMismatch):
            build_cycle(4, [1, 1, 1])


class TestBuilders:
    def test_infinity_313_matches_catalog_exactly(self):
        assert build_infinity(3, 1, 3) == catalog_graph("G1")

    def test_infinity_323_matches_catalog_exactly(self):
        assert build_infinity(3, 2, 3) == catalog_graph("G4")

    def test_infinity_414_isomorphic_to_catalog(self):
        g = build_infinity(4, 1, 4)
        assert g.n == 7
        assert is_isomorphic(g, catalog_graph("G3"))

    def test_infinity_edge_count(self):
        for p, l, q in [(3, 1, 3), (3, 2, 4), (5, 3, 4)]:
            g = build_infinity(p, l, q)
            assert g.n == p + q + l - 2
            assert g.edge_count == g.n + 1

    def test_infinity_invalid(self):
        with pytest.raises(InvalidBase):
            build_infinity(2, 1, 3)
        with pytest.raises(InvalidBase):
            build_infinity(3, 0, 3)

    def test_theta_bases_isomorphic_to_catalog(self):
        assert is_isomorphic(build_theta(0, 1, 1), catalog_graph("G5"))
        assert is_isomorphic(build_theta(0, 1, 2), catalog_graph("G6"))
        assert is_isomorphic(build_theta(1, 1, 1), catalog_graph("G9"))

    def test_theta_edge_count(self):
        for p, l, q in [(0, 1, 1), (1, 2, 3), (2, 2, 2)]:
            g = build_theta(p, l, q)
            assert g.n == p + l + q + 2
            assert g.edge_count == g.n + 1

    def test_theta_invalid(self):
        with pytest.raises(InvalidBase):
            build_theta(0, 0, 3)
        with pytest.raises(InvalidBase):
            build_theta(-1, 1, 1)


class TestAttachAndUnion:
    def test_tadpole(self):
        g = attach_pendants(build_cycle(3), 1, 1)
        assert g.n == 4
        assert g.edge_count == 4
        assert g.degree(4) == 1

    def test_star_from_path(self):
        g = attach_pendants(path_graph(2), 1, 2)
        assert g.n == 4
        assert sorted(g.degree(v) for v in range(1, 5)) == [1, 1, 1, 3]

    def test_bad_vertex(self):
        with pytest.raises(VertexOutOfRange):
            attach_pendants(build_cycle(3), 9, 1)

    def test_union_counts(self):
        u = disjoint_union(empty_graph(1), empty_graph(1))
        assert (u.n, u.edge_count) == (2, 0)
        u = disjoint_union(build_cycle(3), path_graph(2))
        assert (u.n, u.edge_count) == (5, 4)

    def test_union_identity(self):
        g = build_cycle(3)
        assert disjoint_union(g, empty_graph(0)) == g

    def test_union_associative_up_to_relabeling(self):
        a, b, c = build_cycle(3), path_graph(2), star_graph(3)
        left = disjoint_union(disjoint_union(a, b), c)
        right = disjoint_union(a, disjoint_union(b, c))
        assert left == right  # labels line up for this ordering

    def test_components(self):
        u = disjoint_union(build_cycle(3), path_graph(2))
        assert components(u) == [[1, 2, 3], [4, 5]]
        assert not is_connected(u)


class TestTransforms:
    def test_gauge_keeps_units(self):
        g = build_cycle(4, [1j, 1, -1, 1])
        gg = gauge_transform(g, 2, make_gain(0.3))
        for u, v in gg.edges():
            assert abs(abs(gg.gain(u, v)) - 1.0) <= 1e-12
        # edges not incident to 2 are untouched
        assert gg.gain(3, 4) == g.gain(3, 4)

    def test_relabel_roundtrip(self):
        g = build_cycle(4, [1j, 1, -1, 1])
        perm = {1: 3, 2: 1, 3: 4, 4: 2}
        inv = {v: k for k, v in perm.items()}
        assert relabel(relabel(g, perm), inv) == g

    def test_induced_subgraph(self):
        g = build_cycle(4)
        sub, mapping = induced_subgraph(g, [2, 3, 4])
        assert sub.n == 3
        assert mapping == {2: 1, 3: 2, 4: 3}
        assert sub.edges() == [(1, 2), (2, 3)]
