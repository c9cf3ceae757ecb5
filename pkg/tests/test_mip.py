"""Formulations: digraph build, model rows, witnesses, exhaustive checks."""

import pytest

from cvckit.errors import ContractError, InputError, SizeCapError
from cvckit.graph import Graph, gnp_random, spanning_tree_count
from cvckit.mip import (
    MipModel,
    RootedDigraph,
    bidirect_rooted,
    build_digraph,
    build_parb,
    build_pstp,
    build_qr,
    check_integer_point,
    count_qr_feasible,
    default_roots,
    enumerate_verify_parb,
    enumerate_verify_pstp,
    feasible_d,
    find_parb_mismatch,
    parb_point,
    witness_parb,
)
from cvckit.oracle import brute_force_cvc
from tests.conftest import connected_gnp
from tests.test_graph import complete, cycle, path
from tests.test_oracle import petersen


class TestRootedDigraph:
    def test_build_digraph_orientation(self):
        g = path(4)  # default roots are the two middle vertices
        assert default_roots(g) == (1, 2)
        dg = build_digraph(g, 1, 2)
        assert dg.arcs == ((1, 0), (1, 2), (2, 3))
        assert dg.in_tails(0) == (1,) and dg.in_tails(2) == (1,)
        assert dg.out_heads(1) == (0, 2)
        # arc count identity: 2m - deg(r) - deg(r1) + 1
        assert len(dg.arcs) == 2 * g.m - g.degree(1) - g.degree(2) + 1

    def test_inner_edges_bidirected(self):
        g = cycle(5)
        dg = build_digraph(g, 0, 1)
        assert (2, 3) in dg.arcs and (3, 2) in dg.arcs
        assert (1, 0) not in dg.arcs  # nothing enters the root
        assert dg.in_tails(1) == (0,)

    def test_arc_count_on_corpus(self, corpus60):
        for name, g in corpus60[:20]:
            r, r1 = default_roots(g)
            dg = build_digraph(g, r, r1)
            assert len(dg.arcs) == 2 * g.m - g.degree(r) - g.degree(r1) + 1, name

    def test_invariant_validation(self):
        with pytest.raises(InputError):
            build_digraph(path(4), 0, 2)  # roots not adjacent
        with pytest.raises(InputError):
            build_digraph(Graph(4, [(0, 1), (2, 3)]), 0, 1)  # disconnected
        with pytest.raises(InputError):
            RootedDigraph(3, [(0, 1), (1, 0)], 0)  # arc enters the root
        with pytest.raises(InputError):
            RootedDigraph(3, [(0, 1), (2, 1)], 0, 1)  # extra arc into r1
        with pytest.raises(InputError):
            RootedDigraph(3, [(1, 1)], 0)

    def test_bidirect_rooted(self):
        dg = bidirect_rooted(path(3), 1)
        assert dg.arcs == ((1, 0), (1, 2))
        assert dg.r1 is None
        dg2 = bidirect_rooted(cycle(4), 0)
        assert len(dg2.arcs) == 2 * 4 - 2

    def test_default_roots_tiebreak(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3)])  # degrees 2,3,2,1
        assert default_roots(g) == (1, 0)  # highest-degree neighbor, low index


class TestMipModel:
    def test_name_and_reference_checks(self):
        model = MipModel()
        model.add_variable("x_0", "binary")
        with pytest.raises(InputError):
            model.add_variable("x_0", "binary")
        with pytest.raises(InputError):
            model.add_variable("w", "affine")
        with pytest.raises(InputError):
            model.add_constraint("row", ((1, "nope"),), "<=", 1)
        model.add_constraint("row", ((1, "x_0"),), "<=", 1)
        with pytest.raises(InputError):
            model.add_constraint("row", ((1, "x_0"),), ">=", 0)
        with pytest.raises(InputError):
            model.add_constraint("row2", ((1, "x_0"),), "<<", 0)


class TestBuildParb:
    def test_p4_rows_in_order(self):
        model = build_parb(path(4))
        assert [v.name for v in model.variables] == [
            "x_0", "x_1", "x_2", "x_3",
            "z_1_0", "z_1_2", "z_2_3",
            "d_0", "d_1", "d_2", "d_3",
        ]
        assert [c.name for c in model.constraints] == [
            "cover_0_1", "cover_1_2", "cover_2_3",
            "indeg_0", "indeg_3",
            "mtz_1_0", "mtz_1_2", "mtz_2_3",
            "root", "card",
            "lnka_1_0", "lnkb_1_0", "lnka_1_2", "lnkb_1_2", "lnka_2_3", "lnkb_2_3",
        ]
        assert model.metadata == {"formulation": "arborescence", "roots": "r=1 r1=2"}
        mtz = model.constraints[5]
        assert mtz.terms == ((1, "d_0"), (-4, "z_1_0"), (-1, "d_1"), (-1, "x_0"))
        assert mtz.sense == ">=" and mtz.rhs == -4
        card = model.constraints[9]
        assert card.rhs == -1 and len(card.terms) == 3 + 4

    def test_row_count_identity(self, corpus60):
        for name, g in corpus60[:15]:
            r, r1 = default_roots(g)
            model = build_parb(g, r, r1)
            arcs = 2 * g.m - g.degree(r) - g.degree(r1) + 1
            assert len(model.constraints) == g.m + (g.n - 2) + 3 * arcs + 2, name
            assert len(model.variables) == 2 * g.n + arcs, name

    def test_depth_bounds(self):
        model = build_parb(cycle(5))
        for var in model.variables:
            if var.name.startswith("d_"):
                assert (var.lb, var.ub) == (0.0, 4.0)


class TestWitness:
    def test_path_witness_by_hand(self):
        g = path(4)
        w = witness_parb(g, {1, 2}, 1, 2)
        assert w.z == {(1, 0): 0, (1, 2): 1, (2, 3): 0}
        assert w.d == (0, 0, 1, 0)

    def test_single_root_sides(self):
        g = cycle(5)  # roots 0, 1
        # cover holding r=0 but not r1=1: tree must hang off r alone
        w = witness_parb(g, {0, 2, 3, 4}, 0, 1)
        assert w.z[(0, 4)] == 1 and w.z[(0, 1)] == 0
        assert w.d == (0, 0, 3, 2, 1)
        # cover holding r1=1 but not r=0
        w = witness_parb(g, {1, 2, 3, 4}, 0, 1)
        assert w.z[(1, 2)] == 1 and w.z[(0, 1)] == 0
        assert w.d == (0, 0, 1, 2, 3)

    def test_roundtrip_on_corpus_optima(self, corpus60):
        for name, g in corpus60[:25]:
            cover, _ = brute_force_cvc(g)
            r, r1 = default_roots(g)
            w = witness_parb(g, cover, r, r1)
            model = build_parb(g, r, r1)
            dg = build_digraph(g, r, r1)
            assert check_integer_point(model, parb_point(dg, cover, w)), name

    def test_rejects_invalid_cover(self):
        with pytest.raises(InputError):
            witness_parb(path(4), {0, 3}, 1, 2)


class TestCheckIntegerPoint:
    def _model(self):
        model = MipModel()
        model.add_variable("a", "binary")
        model.add_variable("t", "continuous", 0.0, 2.0)
        model.add_constraint("row", ((2, "a"), (-1, "t")), "<=", 1)
        return model

    def test_senses_and_tolerance(self):
        model = self._model()
        assert check_integer_point(model, {"a": 1, "t": 1})
        assert not check_integer_point(model, {"a": 1, "t": 0.5})
        # violations within tol pass, beyond tol fail
        assert check_integer_point(model, {"a": 1, "t": 1 - 1e-9})
        assert not check_integer_point(model, {"a": 1, "t": 1 - 1e-3})

    def test_binary_integrality_and_bounds(self):
        model = self._model()
        assert not check_integer_point(model, {"a": 0.5, "t": 0})
        assert not check_integer_point(model, {"a": 0, "t": 3})
        assert check_integer_point(model, {"a": 1e-9, "t": 0})

    def test_missing_variable_raises(self):
        with pytest.raises(InputError):
            check_integer_point(self._model(), {"a": 1})

    def test_extra_keys_ignored(self):
        assert check_integer_point(self._model(), {"a": 0, "t": 0, "junk": 9})


class TestFeasibleD:
    def test_simple_chain(self):
        dg = build_digraph(path(3), 1, 2)  # arcs (1,0), (1,2)
        d = feasible_d(dg, {(1, 0): 1, (1, 2): 1})
        assert d == [1, 0, 1]

    def test_unpicked_arcs_never_bind(self):
        dg = build_digraph(path(3), 1, 2)
        assert feasible_d(dg, {(1, 0): 0, (1, 2): 0}) == [0, 0, 0]

    def test_cycle_is_infeasible(self):
        dg = RootedDigraph(4, [(0, 1), (1, 2), (2, 3), (3, 1)], 0)
        z = {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 1): 1}
        assert feasible_d(dg, z) is None

    def test_depth_overflow_is_infeasible(self):
        # a picked path longer than n-1 cannot fit the bounds; build one by
        # forcing x increments of 1 on a 3-vertex chain plus a revisit
        dg = RootedDigraph(3, [(0, 1), (1, 2), (2, 1)], 0)
        assert feasible_d(dg, {(0, 1): 1, (1, 2): 1, (2, 1): 1}) is None

    def test_x_controls_increment(self):
        dg = build_digraph(path(3), 1, 2)
        d = feasible_d(dg, {(1, 0): 1, (1, 2): 1}, x=[0, 0, 1])
        assert d == [0, 0, 1]

    def test_missing_arc_raises(self):
        dg = build_digraph(path(3), 1, 2)
        with pytest.raises(InputError):
            feasible_d(dg, {(1, 0): 1})


class TestExhaustiveParb:
    def test_families(self):
        for g in (path(5), cycle(6), complete(5), Graph(5, [(0, i) for i in range(1, 5)])):
            assert enumerate_verify_parb(g)

    def test_random_graphs_random_roots(self):
        for seed in range(12):
            g = connected_gnp(2 + seed % 6, 0.5, 40 + seed)
            assert enumerate_verify_parb(g), f"seed {seed}"
            edges = sorted(g.edges)
            r, r1 = edges[seed % len(edges)]
            assert enumerate_verify_parb(g, r, r1), f"seed {seed} roots {(r, r1)}"
            assert find_parb_mismatch(g, r1, r) is None, f"seed {seed} swapped"

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            enumerate_verify_parb(connected_gnp(11, 0.4, 1))


class TestBuildQr:
    def test_rejects_wrong_digraph(self):
        g = path(4)
        two_root = build_digraph(g, 1, 2)
        with pytest.raises(InputError):
            build_qr(two_root, 1)
        single = bidirect_rooted(g, 1)
        with pytest.raises(InputError):
            build_qr(single, 0)  # digraph is rooted at 1

    def test_row_structure(self):
        dg = bidirect_rooted(path(3), 0)
        model = build_qr(dg, 0)
        names = [c.name for c in model.constraints]
        assert names == ["indeg_1", "indeg_2", "mtz_0_1", "mtz_1_2", "mtz_2_1", "root", "card"]
        assert model.objective == ()
        card = model.constraints[-1]
        assert card.rhs == 2

    def test_count_matches_matrix_tree(self):
        cases = [path(5), cycle(6), complete(4), petersen_free_small()]
        for g in cases:
            for r in range(min(g.n, 3)):
                dg = bidirect_rooted(g, r)
                assert count_qr_feasible(dg) == spanning_tree_count(g), (g, r)

    def test_count_on_random_graphs(self):
        done = 0
        for seed in range(30):
            g = gnp_random(3 + seed % 5, 0.5, 60 + seed)
            if spanning_tree_count(g) == 0:
                continue  # disconnected: the count must then be zero too
            done += 1
            dg = bidirect_rooted(g, 0)
            assert count_qr_feasible(dg) == spanning_tree_count(g), seed
        assert done >= 15

    def test_disconnected_counts_zero(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert count_qr_feasible(bidirect_rooted(g, 0)) == 0
        assert spanning_tree_count(g) == 0

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            count_qr_feasible(bidirect_rooted(complete(11), 0))


def petersen_free_small():
    return Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])


class TestBuildPstp:
    def test_tree_has_no_subset_rows(self):
        model = build_pstp(path(4))
        assert not any(c.name.startswith("sub_") for c in model.constraints)

    def test_cycle_has_exactly_one(self):
        model = build_pstp(cycle(4))
        subs = [c for c in model.constraints if c.name.startswith("sub_")]
        assert [c.name for c in subs] == ["sub_0_1_2_3"]
        assert subs[0].sense == "<=" and subs[0].rhs == 3
        assert len(subs[0].terms) == 4

    def test_triangle_row(self):
        model = build_pstp(complete(3))
        subs = [c.name for c in model.constraints if c.name.startswith("sub_")]
        assert subs == ["sub_0_1_2"]

    def test_emission_rule_matches_edge_count(self):
        g = connected_gnp(6, 0.5, 12)
        model = build_pstp(g)
        names = {c.name for c in model.constraints}
        for mask in range(1, 1 << 6):
            members = [v for v in range(6) if mask >> v & 1]
            induced = sum(
                1 for u, v in g.edges if mask >> u & 1 and mask >> v & 1
            )
            name = "sub_" + "_".join(map(str, members))
            assert (name in names) == (induced >= len(members)), name

    def test_exhaustive_families(self):
        for g in (path(4), cycle(5), complete(4), connected_gnp(7, 0.45, 3)):
            assert enumerate_verify_pstp(g)

    def test_caps_and_domain(self):
        with pytest.raises(SizeCapError):
            build_pstp(Graph(16))
        with pytest.raises(SizeCapError):
            enumerate_verify_pstp(connected_gnp(9, 0.5, 2))
        with pytest.raises(InputError):
            enumerate_verify_pstp(Graph(4, [(0, 1), (2, 3)]))
