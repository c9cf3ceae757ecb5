"""Branch-and-bound solvers: oracle agreement, pruning safety, toggles."""

import itertools

import pytest

from cvckit.bb import (
    SearchNode,
    SolverConfig,
    branch,
    greedy_cvc_2approx,
    russian_doll_solve,
    solve,
    solve_cvc_bb,
    solve_vc_bb,
)
from cvckit.errors import InputError
from cvckit.graph import Graph, articulation_points, gnp_random, mask_to_set
from cvckit.oracle import (
    brute_force_cvc,
    brute_force_vc,
    check_cvc,
    max_feasible_stable,
)
from tests.conftest import connected_gnp
from tests.test_graph import complete, cycle, path
from tests.test_oracle import petersen


class TestAgainstOracle:
    def test_bb_matches_oracle(self, corpus60):
        for name, g in corpus60:
            report = solve_cvc_bb(g)
            _, expected = brute_force_cvc(g)
            assert report.cover_size == expected, name
            assert check_cvc(g, report.cover).valid, name
            assert report.status == "optimal"
            assert report.best_bound == g.n - expected

    def test_rds_matches_oracle(self, corpus60):
        for name, g in corpus60:
            report = russian_doll_solve(g)
            assert report.cover_size == brute_force_cvc(g)[1], name
            assert check_cvc(g, report.cover).valid, name
            assert report.algorithm == "rds"

    def test_vc_solver_matches_oracle(self, corpus60):
        for name, g in corpus60:
            report = solve_vc_bb(g)
            assert report.cover_size == brute_force_vc(g), name
            assert check_cvc(g, report.cover).is_cover, name

    def test_families(self):
        assert solve_cvc_bb(path(9)).cover_size == 7
        assert solve_cvc_bb(cycle(9)).cover_size == 8
        assert solve_cvc_bb(complete(7)).cover_size == 6
        assert solve_cvc_bb(petersen()).cover_size == 7
        assert solve_vc_bb(petersen()).cover_size == 6

    def test_config_matrix(self):
        # every switch combination must land on the same optimum
        graphs = [connected_gnp(10, 0.3, 5), connected_gnp(11, 0.5, 8), cycle(8)]
        for g in graphs:
            expected = brute_force_cvc(g)[1]
            for bip, reuse, warm, rds in itertools.product((False, True), repeat=4):
                cfg = SolverConfig(
                    use_russian_doll=rds,
                    use_bipartite_bound=bip,
                    coloring_reuse=reuse,
                    warm_start=warm,
                )
                assert solve(g, cfg).cover_size == expected, (g, cfg)


class TestEngineBehavior:
    def test_deterministic_reports(self):
        g = connected_gnp(12, 0.4, 3)
        a, b = solve_cvc_bb(g), solve_cvc_bb(g)
        assert (a.cover, a.node_count, a.cover_size) == (b.cover, b.node_count, b.cover_size)

    def test_dispatcher(self):
        g = cycle(6)
        assert solve(g, SolverConfig(use_russian_doll=True)).algorithm == "rds"
        assert solve(g).algorithm == "bb"
        assert solve(g).branch_rule == "max-degree-first"

    def test_warm_start_never_hurts_nodes(self, corpus60):
        for name, g in corpus60[:25]:
            warm = solve_cvc_bb(g, SolverConfig(warm_start=True))
            cold = solve_cvc_bb(g, SolverConfig(warm_start=False))
            assert warm.cover_size == cold.cover_size, name
            assert warm.node_count <= cold.node_count, name

    def test_prune_log_safety(self):
        # every logged prune must be justified by the naive enumerator:
        # nothing in the pruned subtree beats the incumbent of that moment
        for seed in (2, 4, 9, 13):
            g = connected_gnp(9, 0.35, seed)
            log = []
            solve_cvc_bb(g, SolverConfig(warm_start=False), prune_log=log)
            assert log, "expected at least one pruning event"
            for smask, umask, incumbent in log:
                best_inside = max_feasible_stable(
                    g, base=mask_to_set(smask), candidates=mask_to_set(umask)
                )
                assert best_inside <= incumbent, (seed, smask, umask)

    def test_single_vertex(self):
        for solver in (solve_cvc_bb, russian_doll_solve, solve_vc_bb):
            report = solver(Graph(1))
            assert report.cover == frozenset() and report.cover_size == 0
            assert report.status == "optimal"

    def test_input_validation(self):
        with pytest.raises(InputError):
            solve_cvc_bb(Graph(4, [(0, 1), (2, 3)]))
        with pytest.raises(InputError):
            solve_cvc_bb(Graph(0))
        with pytest.raises(InputError):
            solve_cvc_bb(cycle(5), SolverConfig(time_limit=0))

    def test_time_limit_reports_honestly(self):
        g = connected_gnp(60, 0.08, 21)
        report = solve_cvc_bb(g, SolverConfig(time_limit=1e-6))
        assert report.status == "time_limit"
        assert check_cvc(g, report.cover).valid  # incumbent still usable
        assert report.best_bound >= g.n - report.cover_size

    def test_generous_limit_still_optimal(self):
        g = connected_gnp(10, 0.4, 2)
        report = solve_cvc_bb(g, SolverConfig(time_limit=60.0))
        assert report.status == "optimal"
        assert report.cover_size == brute_force_cvc(g)[1]


class TestBranch:
    def test_split_semantics(self):
        g = path(5)  # 0-1-2-3-4
        node = SearchNode(stable=frozenset(), candidates=frozenset({0, 4}))
        include, exclude = branch(g, node, 4)
        assert exclude == SearchNode(frozenset(), frozenset({0}))
        assert include.stable == frozenset({4})
        # 0 survives: not adjacent to 4, not a cut vertex of the path minus 4
        assert include.candidates == frozenset({0})
        with pytest.raises(InputError):
            branch(g, node, 2)

    def test_include_filters_neighbors_and_cuts(self):
        g = cycle(6)
        node = SearchNode(frozenset(), frozenset(range(6)))
        include, _ = branch(g, node, 0)
        # neighbors 1 and 5 drop; 2..4 become cut vertices of the leftover path
        assert include.candidates == frozenset()


class TestGreedyApprox:
    def test_validity_and_ratio(self, corpus60):
        for name, g in corpus60:
            cover = greedy_cvc_2approx(g)
            assert check_cvc(g, cover).valid, name
            assert len(cover) <= 2 * brute_force_cvc(g)[1], name

    def test_families(self):
        assert greedy_cvc_2approx(path(6)) == frozenset({1, 2, 3, 4})
        star = Graph(5, [(0, i) for i in range(1, 5)])
        assert greedy_cvc_2approx(star) == frozenset({0})
        with pytest.raises(InputError):
            greedy_cvc_2approx(Graph(1))
        with pytest.raises(InputError):
            greedy_cvc_2approx(Graph(3, [(0, 1)]))
