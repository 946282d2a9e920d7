"""Cycle classification, pendant reductions, base extraction."""

import numpy as np
import pytest

from gainrank import (
    BaseDescriptor,
    CycleType,
    NotACycle,
    NotAPendant,
    NotBicyclic,
    NotConnected,
    attach_pendants,
    build_cycle,
    build_infinity,
    build_theta,
    catalog_graph,
    classify_cycle,
    cycle_type,
    cycle_walk,
    delete_pendant_pair,
    disjoint_union,
    empty_graph,
    find_pendant,
    fundamental_cycles,
    bicyclic_base,
    make_gain,
    path_graph,
    pendant_twins,
    rank,
    reduce,
    star_graph,
)
from gainrank.structure import PendantPairDeletion, TwinDeletion
from gainrank.verify import forced_cycle, random_gain_graph, sample_unit_gain


class TestCycleType:
    def test_c4_all_ones_is_a(self):
        g = build_cycle(4)
        assert cycle_type(cycle_walk(g, (1, 2, 3, 4))) is CycleType.A

    def test_c4_one_negated_is_b(self):
        g = build_cycle(4, [1, 1, 1, -1])
        assert cycle_type(cycle_walk(g, (1, 2, 3, 4))) is CycleType.B

    def test_c3_product_i_is_e(self):
        g = build_cycle(3, [1, 1, make_gain(0.25)])
        assert cycle_type(cycle_walk(g, (1, 2, 3))) is CycleType.E

    def test_c3_all_ones_is_d(self):
        # product 1, so the odd test scalar is Re(-1) < 0
        assert cycle_type(cycle_walk(build_cycle(3), (1, 2, 3))) is CycleType.D

    def test_c3_all_negative_is_c(self):
        g = build_cycle(3, [-1, -1, -1])
        assert cycle_type(cycle_walk(g, (1, 2, 3))) is CycleType.C

    def test_open_walk_rejected(self):
        g = path_graph(4)
        with pytest.raises(NotACycle):
            cycle_walk(g, (1, 2, 3, 4))
        with pytest.raises(NotACycle):
            cycle_walk(build_cycle(4), (1, 2, 3))

    def test_classification_margin(self):
        g = build_cycle(4)
        cls = classify_cycle(cycle_walk(g, (1, 2, 3, 4)))
        assert cls.margin <= 1e-12
        assert not cls.fragile

    def test_traversal_invariance(self):
        rng = np.random.default_rng(21)
        for trial in range(60):
            n = int(rng.integers(3, 11))
            if trial % 3 == 0:
                kinds = (
                    (CycleType.A, CycleType.B)
                    if n % 2 == 0
                    else (CycleType.C, CycleType.D, CycleType.E)
                )
                g = forced_cycle(rng, n, kinds[trial % len(kinds)])
            else:
                g = build_cycle(n, [sample_unit_gain(rng) for _ in range(n)])
            seq = list(range(1, n + 1))
            want = cycle_type(cycle_walk(g, seq))
            for r in range(n):
                rotated = seq[r:] + seq[:r]
                reversed_ = [rotated[0]] + rotated[1:][::-1]
                assert cycle_type(cycle_walk(g, rotated)) is want
                assert cycle_type(cycle_walk(g, reversed_)) is want


class TestPendants:
    def test_find_pendant(self):
        assert find_pendant(path_graph(3)) == (1, 2)
        assert find_pendant(build_cycle(3)) is None
        assert find_pendant(catalog_graph("G12")) == (5, 4)

    def test_delete_pair_p2(self):
        assert delete_pendant_pair(path_graph(2), 1, 2).n == 0

    def test_delete_pair_p4(self):
        g = delete_pendant_pair(path_graph(4), 1, 2)
        assert g.n == 2 and g.edge_count == 1

    def test_delete_pair_tadpole(self):
        t = attach_pendants(build_cycle(3), 1, 1)
        g = delete_pendant_pair(t, 4, 1)
        assert g.n == 2 and g.edges() == [(1, 2)]

    def test_delete_pair_rejects_non_pendant(self):
        with pytest.raises(NotAPendant):
            delete_pendant_pair(build_cycle(3), 1, 2)
        with pytest.raises(NotAPendant):
            delete_pendant_pair(path_graph(3), 1, 3)

    def test_twins(self):
        assert pendant_twins(star_graph(3)) == [(2, 3)]
        assert pendant_twins(path_graph(4)) == []
        assert pendant_twins(star_graph(4)) == [(2, 3), (2, 4), (3, 4)]


class TestReduce:
    def test_star_total_rank(self):
        trace = reduce(star_graph(5))
        twin_steps = [s for s in trace.steps if isinstance(s, TwinDeletion)]
        assert len(twin_steps) == 3
        assert rank(trace.residual) + trace.rank_offset == 2

    def test_path_peeling(self):
        trace = reduce(path_graph(6))
        assert trace.rank_offset == 6
        assert trace.residual.n == 0
        assert all(isinstance(s, PendantPairDeletion) for s in trace.steps)

    def test_g13_total(self):
        rng = np.random.default_rng(2)
        g = catalog_graph("G13", [sample_unit_gain(rng) for _ in range(6)])
        trace = reduce(g)
        assert rank(trace.residual) + trace.rank_offset == 4 == rank(g)

    def test_rank_identity_random(self):
        rng = np.random.default_rng(3)
        for _ in range(60):
            g = random_gain_graph(
                rng, int(rng.integers(2, 13)), extra_edges=int(rng.integers(0, 3))
            )
            trace = reduce(g)
            assert rank(g) == rank(trace.residual) + trace.rank_offset

    def test_confluence_under_random_orders(self):
        # any legal deletion order gives the same rank bookkeeping
        rng = np.random.default_rng(9)
        for _ in range(40):
            g = random_gain_graph(
                rng, int(rng.integers(3, 11)), extra_edges=int(rng.integers(0, 3))
            )
            want = rank(reduce(g).residual) + reduce(g).rank_offset
            got = self._shuffled_reduction_total(g, rng)
            assert got == want

    @staticmethod
    def _shuffled_reduction_total(g, rng) -> int:
        alive = set(range(1, g.n + 1))
        adj = {v: set(g.neighbors(v)) for v in alive}
        offset = 0
        while True:
            pendants = [v for v in alive if len(adj[v]) == 1]
            if not pendants:
                break
            moves = []
            by_neighbor: dict[int, list[int]] = {}
            for v in pendants:
                (u,) = adj[v]
                by_neighbor.setdefault(u, []).append(v)
            for u, vs in by_neighbor.items():
                if len(vs) >= 2:
                    moves += [("twin", v) for v in vs]
            moves += [("pair", v) for v in pendants]
            kind, v = moves[int(rng.integers(len(moves)))]
            if kind == "twin":
                alive.discard(v)
                for w in adj.pop(v):
                    adj[w].discard(v)
            else:
                (u,) = adj[v]
                for x in (v, u):
                    alive.discard(x)
                    for w in adj.pop(x):
                        adj[w].discard(x)
                offset += 2
        from gainrank import induced_subgraph

        residual, _ = induced_subgraph(g, alive)
        return rank(residual) + offset

    def test_reduction_steps_reference_original_labels(self):
        g = catalog_graph("G13")
        trace = reduce(g)
        assert trace.steps[0] == PendantPairDeletion(5, 2)


class TestBase:
    def test_catalog_bases(self):
        cases = {
            "G1": ("infinity", 3, 1, 3),
            "G2": ("infinity", 3, 1, 4),
            "G3": ("infinity", 4, 1, 4),
            "G4": ("infinity", 3, 2, 3),
            "G5": ("theta", 0, 1, 1),
            "G6": ("theta", 0, 1, 2),
            "G7": ("theta", 0, 1, 3),
            "G8": ("theta", 0, 2, 2),
            "G9": ("theta", 1, 1, 1),
            "G10": ("theta", 1, 1, 2),
            "G11": ("theta", 1, 1, 3),
            "G17": ("theta", 0, 1, 2),
        }
        for gid, (kind, p, l, q) in cases.items():
            d = bicyclic_base(catalog_graph(gid)).descriptor
            assert (d.kind, d.p, d.l, d.q) == (kind, p, l, q), gid

    def test_builder_roundtrip(self):
        rng = np.random.default_rng(13)
        for p, l, q in [(3, 1, 3), (3, 2, 4), (4, 3, 5), (5, 1, 4)]:
            g = build_infinity(p, l, q)
            g = attach_pendants(g, int(rng.integers(1, g.n + 1)), 1)
            d = bicyclic_base(g).descriptor
            assert (d.kind, d.p, d.l, d.q) == ("infinity", min(p, q), l, max(p, q))
        for p, l, q in [(0, 1, 1), (1, 2, 3), (2, 2, 2), (0, 3, 2)]:
            g = build_theta(p, l, q)
            g = attach_pendants(g, int(rng.integers(1, g.n + 1)), 1)
            d = bicyclic_base(g).descriptor
            want = tuple(sorted((p, l, q)))
            assert (d.kind, d.p, d.l, d.q) == ("theta", *want)

    def test_errors(self):
        with pytest.raises(NotBicyclic):
            bicyclic_base(path_graph(4))
        with pytest.raises(NotBicyclic):
            bicyclic_base(build_cycle(4))
        with pytest.raises(NotConnected):
            bicyclic_base(disjoint_union(build_cycle(3), build_cycle(3)))
        with pytest.raises(NotConnected):
            bicyclic_base(disjoint_union(catalog_graph("G5"), empty_graph(1)))

    def test_vertex_map_points_into_host(self):
        g = catalog_graph("G18")  # K_{2,3} with a pendant at 5
        ext = bicyclic_base(g)
        host_vertices = sorted(ext.vertex_map[v] for v in range(1, ext.graph.n + 1))
        assert host_vertices == [1, 2, 3, 4, 5]


class TestFundamentalCycles:
    def test_diamond(self):
        walks = fundamental_cycles(catalog_graph("G5"))
        assert [w.vertices for w in walks] == [
            (1, 2, 3),
            (2, 3, 4),
            (1, 2, 4, 3),
        ]

    def test_k23(self):
        walks = fundamental_cycles(catalog_graph("G9"))
        assert [w.vertices for w in walks] == [
            (1, 2, 3, 4),
            (1, 2, 5, 4),
            (2, 3, 4, 5),
        ]

    def test_infinity(self):
        walks = fundamental_cycles(catalog_graph("G1"))
        assert [w.vertices for w in walks] == [(1, 2, 5), (3, 4, 5)]

    def test_gains_come_from_host(self):
        g = catalog_graph("G5", [1, 1, 1j, 1, 1])
        walks = fundamental_cycles(g)
        tri = walks[0]
        prod = tri.gain_product()
        assert abs(prod - 1j) <= 1e-12

    def test_lengths_match_descriptor(self):
        for gid in ("G5", "G6", "G7", "G8", "G9", "G10", "G11"):
            g = catalog_graph(gid)
            ext = bicyclic_base(g)
            p, l, q = ext.descriptor.p, ext.descriptor.l, ext.descriptor.q
            lengths = sorted(len(w) for w in fundamental_cycles(g, ext))
            assert lengths == sorted((p + l + 2, p + q + 2, l + q + 2)), gid
