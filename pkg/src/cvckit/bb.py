"""Branch-and-bound solvers for minimum connected vertex cover.

The search works on the complementary problem: find a maximum stable set S
whose deletion keeps the graph connected ("feasible" stable set); the
answer is V \\ S.  A search node is a pair (S, U): S the stable set built
so far, U the candidate vertices that may still join it.  U never contains
a neighbor of S nor a cut vertex of G - S, so every node's S is feasible
by construction.

Branching on v in U splits the node into an include child
(S + v, the nonneighbors of v within U minus the new cut vertices) and an exclude
child (S, U - v).  A node is pruned when |S| plus an upper bound on
alpha(G[U]) cannot beat the incumbent.  The candidate stack is kept in
increasing-degree order so the highest-degree vertex is branched on first
(ties by lowest index).

Three entry points share the engine: solve_cvc_bb (single root),
russian_doll_solve (one restricted root per vertex, processed smallest
subproblem first, incumbent carried across), and solve_vc_bb (connectivity
pruning disabled, yielding a classical maximum-stable-set solver used for
plain vertex cover numbers).

The coloring-reuse cache is threaded through the search per node: children
inherit the parent's cache snapshot, so the bound computed at a node never
depends on which other branches were explored.  A consequence worth having
is that a run that starts with a better incumbent (warm start) visits a
subset of the nodes the cold run visits, so node counts are monotone.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .bounds import (
    CachedColoring,
    bipartite_alpha,
    color_bound_cached,
    is_bipartite,
)
from .errors import ContractError, InputError
from .graph import (
    Graph,
    VertexSet,
    articulation_points_mask,
    dfs_tree,
    is_connected,
    mask_to_set,
    set_to_mask,
)
from .oracle import check_cvc


@dataclass(frozen=True)
class SearchNode:
    """One branch-and-bound node: the stable set built so far and the
    candidates still allowed to join it."""

    stable: VertexSet
    candidates: VertexSet


@dataclass
class SolverConfig:
    """Solver switches.

    time_limit: wall-clock seconds; None means no limit.
    use_russian_doll: dispatch hint for `solve` (per-vertex restricted runs).
    use_bipartite_bound: on bipartite inputs, prune with the exact
        matching-based stable-set bound instead of the coloring bound.
    coloring_reuse: reuse a node's inherited coloring while its candidate
        set is still at least 75% of the size the coloring was computed at.
    warm_start: seed the incumbent with the complement of the greedy
        2-approximate cover before searching.
    """

    time_limit: Optional[float] = None
    use_russian_doll: bool = False
    use_bipartite_bound: bool = True
    coloring_reuse: bool = True
    warm_start: bool = True


@dataclass
class SolveReport:
    """Result of a solver run.

    best_bound is on the stable-set side: the proven optimum when status
    is "optimal", otherwise the best upper bound still open at timeout.
    node_count counts every (S, U) pair the search visits (stack pops plus
    include descents).
    """

    cover: VertexSet
    cover_size: int
    node_count: int
    wall_time: float
    status: str  # "optimal" | "time_limit"
    best_bound: int
    algorithm: str = "bb"
    branch_rule: str = "max-degree-first"


def _validate(g: Graph, cfg: SolverConfig) -> None:
    if g.n == 0:
        raise InputError("solver needs at least one vertex")
    if cfg.time_limit is not None and cfg.time_limit <= 0:
        raise InputError(f"time limit must be positive, got {cfg.time_limit!r}")
    if not is_connected(g):
        raise InputError("solver requires a connected graph")


class _Engine:
    """Shared search machinery; one instance per solver run."""

    def __init__(self, g: Graph, cfg: SolverConfig, connected: bool, prune_log=None):
        self.g = g
        self.cfg = cfg
        self.connected = connected
        self.prune_log = prune_log
        self.n = g.n
        self.masks = g.masks
        self.full = g.full_mask()
        self.nonadj = tuple(
            self.full & ~g.masks[v] & ~(1 << v) for v in range(g.n)
        )
        # pop order: ascending degree, ties by descending index, so popping
        # from the end yields the highest degree vertex, lowest index first
        self.pop_order = sorted(range(g.n), key=lambda v: (g.degree(v), -v))
        self.side0_mask: Optional[int] = None
        if cfg.use_bipartite_bound:
            sides = is_bipartite(g)
            if sides is not None:
                self.side0_mask = set_to_mask(sides[0])
        self.best_mask = 0
        self.best_size = 0
        self.visits = 0

    def ordered_tuple(self, mask: int) -> tuple[int, ...]:
        return tuple(v for v in self.pop_order if mask >> v & 1)

    def set_incumbent(self, smask: int, ssize: int) -> None:
        if __debug__:
            cert = check_cvc(self.g, mask_to_set(self.full & ~smask))
            assert cert.is_cover, "incumbent stable set is not stable"
            if self.connected:
                assert cert.valid, "incumbent leaves the graph disconnected"
        self.best_mask, self.best_size = smask, ssize

    def warm_start(self) -> None:
        if self.n < 2:
            return
        cover = greedy_cvc_2approx(self.g)
        smask = self.full & ~set_to_mask(cover)
        ssize = smask.bit_count()
        if ssize > self.best_size:
            self.set_incumbent(smask, ssize)

    def _bound(self, umask: int, cache: Optional[CachedColoring]):
        if self.side0_mask is not None:
            return bipartite_alpha(self.masks, umask, self.side0_mask), cache
        if not self.cfg.coloring_reuse:
            bound, _ = color_bound_cached(self.masks, umask, None)
            return bound, None
        return color_bound_cached(self.masks, umask, cache)

    def make_root(self, smask: int, umask: int):
        return (smask, smask.bit_count(), self.ordered_tuple(umask), umask, None)

    def run(self, roots: list) -> tuple[str, int]:
        """Drain each root's subtree in turn; returns (status, best_bound)."""
        deadline = None
        if self.cfg.time_limit is not None:
            deadline = time.perf_counter() + self.cfg.time_limit
        timed_out = False
        stack: list = []
        started = 0
        for root in roots:
            started += 1
            if root[1] > self.best_size:
                self.set_incumbent(root[0], root[1])
            stack.append(root)
            while stack:
                if deadline is not None and time.perf_counter() > deadline:
                    timed_out = True
                    break
                smask, ssize, ulist, umask, cache = stack.pop()
                self.visits += 1
                while ulist:
                    bound, cache = self._bound(umask, cache)
                    if self.best_size >= ssize + bound:
                        if self.prune_log is not None:
                            self.prune_log.append((smask, umask, self.best_size))
                        break
                    v = ulist[-1]
                    rest = ulist[:-1]
                    rmask = umask & ~(1 << v)
                    stack.append((smask, ssize, rest, rmask, cache))
                    smask |= 1 << v
                    ssize += 1
                    if self.connected:
                        cut = articulation_points_mask(self.masks, self.full & ~smask)
                    else:
                        cut = 0
                    allowed = rmask & self.nonadj[v] & ~cut
                    if allowed == rmask:
                        ulist = rest
                    else:
                        ulist = tuple(u for u in rest if allowed >> u & 1)
                    umask = allowed
                    self.visits += 1
                    if ssize > self.best_size:
                        self.set_incumbent(smask, ssize)
            if timed_out:
                break
        if not timed_out:
            return "optimal", self.best_size
        open_bound = self.best_size
        for smask, ssize, ulist, umask, cache in stack:
            open_bound = max(open_bound, ssize + len(ulist))
        for smask, ssize, ulist, umask, cache in roots[started:]:
            open_bound = max(open_bound, ssize + len(ulist))
        return "time_limit", open_bound

    def report(self, algorithm: str, t0: float, status: str, best_bound: int) -> SolveReport:
        cover = mask_to_set(self.full & ~self.best_mask)
        cert = check_cvc(self.g, cover)
        ok = cert.valid if self.connected else cert.is_cover
        if not ok:
            raise ContractError("solver produced an invalid cover; internal bug")
        return SolveReport(
            cover=cover,
            cover_size=self.n - self.best_size,
            node_count=self.visits,
            wall_time=time.perf_counter() - t0,
            status=status,
            best_bound=best_bound,
            algorithm=algorithm,
        )


def _single_vertex_report(algorithm: str, t0: float) -> SolveReport:
    # one isolated vertex: the empty cover is valid, S = {0}
    return SolveReport(
        cover=frozenset(),
        cover_size=0,
        node_count=0,
        wall_time=time.perf_counter() - t0,
        status="optimal",
        best_bound=1,
        algorithm=algorithm,
    )


def greedy_cvc_2approx(g: Graph) -> VertexSet:
    """Connected vertex cover at most twice the optimum, in linear time.

    Returns the internal (non-leaf) vertices of a depth-first spanning tree
    rooted at a maximum-degree vertex (ties by lowest index).  Every edge
    touches an internal vertex, and the internal vertices form a subtree,
    hence a connected cover.
    """
    if g.n < 2:
        raise InputError("greedy_cvc_2approx needs at least two vertices")
    if not is_connected(g):
        raise InputError("greedy_cvc_2approx requires a connected graph")
    root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    tree = dfs_tree(g, root)
    return frozenset(parent for parent, _ in tree)


def branch(g: Graph, node: SearchNode, v: int) -> tuple[SearchNode, SearchNode]:
    """Split a search node on candidate v; returns (include, exclude).

    The exclude child keeps S and drops v from U.  The include child adds
    v to S and restricts U to non-neighbors of v that are not cut vertices
    of the shrunken graph.  v must be a candidate of the node; it can never
    be a cut vertex of G - S when the node invariants hold (asserted).
    """
    if v not in node.candidates:
        raise InputError(f"vertex {v} is not a candidate of this node")
    exclude = SearchNode(node.stable, node.candidates - {v})
    smask = set_to_mask(node.stable) | (1 << v)
    live = g.full_mask() & ~smask
    assert articulation_points_mask(g.masks, g.full_mask() & ~set_to_mask(node.stable)) >> v & 1 == 0, (
        "branching vertex is a cut vertex of the remaining graph"
    )
    cut = articulation_points_mask(g.masks, live)
    allowed = set_to_mask(exclude.candidates) & g.full_mask() & ~g.masks[v] & ~(1 << v) & ~cut
    include = SearchNode(frozenset(node.stable | {v}), mask_to_set(allowed))
    return include, exclude


def solve_cvc_bb(
    g: Graph, cfg: Optional[SolverConfig] = None, prune_log: Optional[list] = None
) -> SolveReport:
    """Exact minimum connected vertex cover by branch and bound.

    prune_log, when a list is passed, records a (stable_mask,
    candidate_mask, incumbent_size) triple for every bound-test pruning;
    meant for diagnostics and the pruning-safety tests.
    """
    cfg = cfg if cfg is not None else SolverConfig()
    _validate(g, cfg)
    t0 = time.perf_counter()
    if g.n == 1:
        return _single_vertex_report("bb", t0)
    eng = _Engine(g, cfg, connected=True, prune_log=prune_log)
    if cfg.warm_start:
        eng.warm_start()
    cut = articulation_points_mask(g.masks, g.full_mask())
    root = eng.make_root(0, g.full_mask() & ~cut)
    status, best_bound = eng.run([root])
    return eng.report("bb", t0, status, best_bound)


def russian_doll_solve(g: Graph, cfg: Optional[SolverConfig] = None) -> SolveReport:
    """Exact minimum connected vertex cover by russian doll search.

    Vertices are ordered by decreasing degree (ties by index) as v_1..v_n.
    Step i fixes S = {v_i} and restricts candidates to later non-neighbors
    v_j (j > i) that are not cut vertices of G - v_i; steps run from the
    smallest suffix upward so each incumbent prunes the larger steps.
    Steps whose v_i is a cut vertex of G are skipped: no feasible stable
    set contains a cut vertex.  The incumbent persists across steps.
    """
    cfg = cfg if cfg is not None else SolverConfig()
    _validate(g, cfg)
    t0 = time.perf_counter()
    if g.n == 1:
        return _single_vertex_report("rds", t0)
    eng = _Engine(g, cfg, connected=True)
    if cfg.warm_start:
        eng.warm_start()
    seq = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    g_cut = articulation_points_mask(g.masks, g.full_mask())
    roots = []
    for i in range(g.n - 1, -1, -1):
        v = seq[i]
        if g_cut >> v & 1:
            continue
        cut_i = articulation_points_mask(g.masks, g.full_mask() & ~(1 << v))
        later = set_to_mask(seq[i + 1 :])
        roots.append(eng.make_root(1 << v, later & eng.nonadj[v] & ~cut_i))
    status, best_bound = eng.run(roots)
    return eng.report("rds", t0, status, best_bound)


def solve_vc_bb(g: Graph, cfg: Optional[SolverConfig] = None) -> SolveReport:
    """Minimum plain vertex cover: the same engine with connectivity
    pruning disabled (no cut-vertex filtering, covers may induce anything).
    """
    cfg = cfg if cfg is not None else SolverConfig()
    _validate(g, cfg)
    t0 = time.perf_counter()
    if g.n == 1:
        return _single_vertex_report("vc-bb", t0)
    eng = _Engine(g, cfg, connected=False)
    if cfg.warm_start:
        eng.warm_start()
    root = eng.make_root(0, g.full_mask())
    status, best_bound = eng.run([root])
    return eng.report("vc-bb", t0, status, best_bound)


def solve(g: Graph, cfg: Optional[SolverConfig] = None) -> SolveReport:
    """Dispatch on cfg.use_russian_doll; the front ends use this."""
    cfg = cfg if cfg is not None else SolverConfig()
    if cfg.use_russian_doll:
        return russian_doll_solve(g, cfg)
    return solve_cvc_bb(g, cfg)
