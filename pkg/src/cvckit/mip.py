"""Mixed-integer formulations of connected vertex cover.

Three models over a connected graph G, all minimizing the cover size:

* spanning-tree form (`build_pstp`): binary x per vertex, continuous
  y in [0,1] per edge; covering rows, forest rows y(E(U)) <= |U|-1, and a
  total row y(E) = x(V) - 1 forcing the picked edges to hold a spanning
  tree of the cover.  Exponentially many rows, so it is capped small and
  exists for exhaustive study, not for solving.
* single-root arborescence form (`build_qr`): over a digraph whose root r
  has no entering arcs, binary z per arc with unit-indegree rows, big-M
  depth-ordering rows (Miller-Tucker-Zemlin style), and a cardinality row;
  the feasible binary z are exactly the r-arborescences.
* two-root arborescence form (`build_parb`): the polynomial CVC model.
  The digraph fixes adjacent roots r, r1 (arcs into r deleted, the only
  arc into r1 comes from r, everything else bidirected); binary x and z
  with indegree rows tied to x, depth rows weighted by x, and a
  cardinality row z(A) = x(V) - 1.  Integral x is feasible iff x picks a
  connected vertex cover.

`MipModel` is a deliberately dumb IR (named variables, linear rows) with a
deterministic LP-file writer; no solver is embedded, and the exhaustive
verifiers below decide feasibility by direct combinatorial search instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import ContractError, InputError, SizeCapError
from .graph import (
    Graph,
    VertexSet,
    bits_of,
    is_connected,
    mask_to_set,
    set_to_mask,
)
from .oracle import check_cvc

PSTP_CAP = 15
VERIFY_CAP = 10
QR_COUNT_CAP = 10
DEFAULT_TOL = 1e-6


class Variable(NamedTuple):
    name: str
    kind: str  # "binary" | "continuous"
    lb: float
    ub: float


class Constraint(NamedTuple):
    name: str
    terms: tuple  # ((coef, varname), ...)
    sense: str  # "<=" | "=" | ">="
    rhs: float


class MipModel:
    """Solver-agnostic integer model: named variables, linear rows, a
    minimize objective, and metadata emitted as LP comment lines."""

    def __init__(self, metadata: Optional[Mapping[str, str]] = None):
        self.variables: list[Variable] = []
        self.constraints: list[Constraint] = []
        self.objective: tuple = ()  # ((coef, varname), ...), minimized
        self.metadata: dict[str, str] = dict(metadata or {})
        self._var_names: set[str] = set()
        self._row_names: set[str] = set()

    def add_variable(self, name: str, kind: str, lb: float = 0.0, ub: float = 1.0):
        if kind not in ("binary", "continuous"):
            raise InputError(f"unknown variable kind {kind!r}")
        if name in self._var_names:
            raise InputError(f"duplicate variable name {name!r}")
        if kind == "binary":
            lb, ub = 0.0, 1.0
        self._var_names.add(name)
        self.variables.append(Variable(name, kind, lb, ub))

    def _check_terms(self, terms, where: str):
        for _, var in terms:
            if var not in self._var_names:
                raise InputError(f"{where} references undeclared variable {var!r}")

    def add_constraint(self, name: str, terms, sense: str, rhs: float):
        if sense not in ("<=", "=", ">="):
            raise InputError(f"unknown sense {sense!r}")
        if name in self._row_names:
            raise InputError(f"duplicate constraint name {name!r}")
        terms = tuple(terms)
        self._check_terms(terms, f"constraint {name!r}")
        self._row_names.add(name)
        self.constraints.append(Constraint(name, terms, sense, rhs))

    def set_objective(self, terms):
        terms = tuple(terms)
        self._check_terms(terms, "objective")
        self.objective = terms

    def constraint_names(self) -> set[str]:
        return set(self._row_names)

    def __repr__(self) -> str:
        return (
            f"MipModel({len(self.variables)} vars, "
            f"{len(self.constraints)} rows)"
        )


class RootedDigraph:
    """Directed graph with designated root(s) for the arborescence models.

    Data members:
        n: vertex count; arcs: sorted tuple of (tail, head) pairs;
        r: the root, never entered by an arc;
        r1: secondary root or None; when set, the only arc entering r1
            is (r, r1).
    """

    __slots__ = ("n", "arcs", "r", "r1", "_in", "_out")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]], r: int, r1: Optional[int] = None):
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-arc at vertex {u} is not allowed")
            if (u, v) in seen:
                raise InputError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        if not 0 <= r < n:
            raise InputError(f"root {r} out of range for n={n}")
        if r1 is not None and (not 0 <= r1 < n or r1 == r):
            raise InputError(f"secondary root {r1} invalid (r={r}, n={n})")
        self.n = n
        self.arcs = tuple(sorted(seen))
        self.r = r
        self.r1 = r1
        incoming = [[] for _ in range(n)]
        outgoing = [[] for _ in range(n)]
        for u, v in self.arcs:
            incoming[v].append(u)
            outgoing[u].append(v)
        self._in = tuple(tuple(sorted(t)) for t in incoming)
        self._out = tuple(tuple(sorted(t)) for t in outgoing)
        if self._in[r]:
            raise InputError(f"root {r} must have no entering arcs")
        if r1 is not None and self._in[r1] != (r,):
            raise InputError(
                f"secondary root {r1} must be entered exactly by the arc from {r}"
            )

    def in_tails(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_heads(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def __repr__(self) -> str:
        return f"RootedDigraph(n={self.n}, arcs={len(self.arcs)}, r={self.r}, r1={self.r1})"


@dataclass
class Witness:
    """Certificate that a cover is feasible in the two-root model: the
    chosen arcs (z over every arc) and the depth labels (d per vertex)."""

    z: dict
    d: tuple


# ---------------------------------------------------------------------------
# digraph construction


def default_roots(g: Graph) -> tuple[int, int]:
    """Default root pair: a maximum-degree vertex and its maximum-degree
    neighbor, ties broken by lowest index."""
    if g.n < 2 or g.m == 0:
        raise InputError("root selection needs at least one edge")
    r = max(range(g.n), key=lambda v: (g.degree(v), -v))
    r1 = max(g.adj[r], key=lambda v: (g.degree(v), -v))
    return r, r1


def _resolve_roots(g: Graph, r: Optional[int], r1: Optional[int]) -> tuple[int, int]:
    if r is None and r1 is None:
        return default_roots(g)
    if r is None or r1 is None:
        base = r if r is not None else r1
        if not 0 <= base < g.n:
            raise InputError(f"root {base} out of range for n={g.n}")
        if not g.adj[base]:
            raise InputError(f"root {base} has no neighbors to pair with")
        other = max(g.adj[base], key=lambda v: (g.degree(v), -v))
        return (base, other) if r is not None else (other, base)
    return r, r1


def build_digraph(g: Graph, r: int, r1: int) -> RootedDigraph:
    """Orient g for the two-root model.

    Edges at r become arcs leaving r; edges at r1 (other than r-r1) become
    arcs leaving r1; every other edge is bidirected.  Requires g connected
    and r, r1 adjacent.
    """
    if g.n < 2:
        raise InputError("build_digraph needs at least two vertices")
    if not (0 <= r < g.n and 0 <= r1 < g.n) or r == r1:
        raise InputError(f"invalid root pair ({r}, {r1}) for n={g.n}")
    if not g.has_edge(r, r1):
        raise InputError(f"roots {r} and {r1} must be adjacent")
    if not is_connected(g):
        raise InputError("build_digraph requires a connected graph")
    arcs = []
    for u, v in g.edges:
        if r in (u, v):
            arcs.append((r, v if u == r else u))
        elif r1 in (u, v):
            arcs.append((r1, v if u == r1 else u))
        else:
            arcs.append((u, v))
            arcs.append((v, u))
    dg = RootedDigraph(g.n, arcs, r, r1)
    assert len(dg.arcs) == 2 * g.m - g.degree(r) - g.degree(r1) + 1
    return dg


def bidirect_rooted(g: Graph, r: int) -> RootedDigraph:
    """Bidirect g, then delete every arc entering r (single-root form)."""
    if not 0 <= r < g.n:
        raise InputError(f"root {r} out of range for n={g.n}")
    arcs = []
    for u, v in g.edges:
        if v != r:
            arcs.append((u, v))
        if u != r:
            arcs.append((v, u))
    return RootedDigraph(g.n, arcs, r, None)


# ---------------------------------------------------------------------------
# model builders


def build_parb(g: Graph, r: Optional[int] = None, r1: Optional[int] = None) -> MipModel:
    """Two-root arborescence model; integral x feasible iff x is a CVC.

    Rows, in declaration order: one covering row per undirected edge,
    indegree rows z(into v) = x_v for v outside {r, r1}, one depth row per
    arc d_v >= n*(z_uv - 1) + d_u + x_v, the root row d_r = 0, the
    cardinality row z(A) = x(V) - 1, and two linking rows per arc.
    Depth variables carry explicit bounds [0, n-1]; the big-M is exactly n.
    """
    r, r1 = _resolve_roots(g, r, r1)
    dg = build_digraph(g, r, r1)
    n = g.n
    model = MipModel(metadata={"formulation": "arborescence", "roots": f"r={r} r1={r1}"})
    for v in range(n):
        model.add_variable(f"x_{v}", "binary")
    for u, v in dg.arcs:
        model.add_variable(f"z_{u}_{v}", "binary")
    for v in range(n):
        model.add_variable(f"d_{v}", "continuous", 0.0, float(n - 1))
    model.set_objective(tuple((1, f"x_{v}") for v in range(n)))
    for u, v in sorted(g.edges):
        model.add_constraint(f"cover_{u}_{v}", ((1, f"x_{u}"), (1, f"x_{v}")), ">=", 1)
    for v in range(n):
        if v in (r, r1):
            continue
        terms = [(1, f"z_{u}_{v}") for u in dg.in_tails(v)]
        terms.append((-1, f"x_{v}"))
        model.add_constraint(f"indeg_{v}", terms, "=", 0)
    for u, v in dg.arcs:
        model.add_constraint(
            f"mtz_{u}_{v}",
            ((1, f"d_{v}"), (-n, f"z_{u}_{v}"), (-1, f"d_{u}"), (-1, f"x_{v}")),
            ">=",
            -n,
        )
    model.add_constraint("root", ((1, f"d_{r}"),), "=", 0)
    card = [(1, f"z_{u}_{v}") for u, v in dg.arcs]
    card.extend((-1, f"x_{v}") for v in range(n))
    model.add_constraint("card", card, "=", -1)
    for u, v in dg.arcs:
        model.add_constraint(f"lnka_{u}_{v}", ((1, f"z_{u}_{v}"), (-1, f"x_{u}")), "<=", 0)
        model.add_constraint(f"lnkb_{u}_{v}", ((1, f"z_{u}_{v}"), (-1, f"x_{v}")), "<=", 0)
    return model


def build_qr(dg: RootedDigraph, r: int) -> MipModel:
    """Single-root arborescence polytope over a digraph with no arcs into r.

    Binary z per arc; unit indegree row per non-root vertex; depth rows
    d_v >= n*(z_uv - 1) + d_u + 1 per arc; d_r = 0; cardinality row
    z(A) = n - 1.  The feasible binary z are exactly the r-arborescences,
    and the depth bounds [0, n-1] do not change that projection.
    """
    if r != dg.r:
        raise InputError(f"digraph is rooted at {dg.r}, not {r}")
    if dg.r1 is not None:
        raise InputError("build_qr expects a single-root digraph (r1 must be None)")
    n = dg.n
    model = MipModel(metadata={"formulation": "single-root-arborescence", "roots": f"r={r}"})
    for u, v in dg.arcs:
        model.add_variable(f"z_{u}_{v}", "binary")
    for v in range(n):
        model.add_variable(f"d_{v}", "continuous", 0.0, float(max(n - 1, 0)))
    model.set_objective(())
    for v in range(n):
        if v == r:
            continue
        model.add_constraint(
            f"indeg_{v}", tuple((1, f"z_{u}_{v}") for u in dg.in_tails(v)), "=", 1
        )
    for u, v in dg.arcs:
        model.add_constraint(
            f"mtz_{u}_{v}",
            ((1, f"d_{v}"), (-n, f"z_{u}_{v}"), (-1, f"d_{u}")),
            ">=",
            1 - n,
        )
    model.add_constraint("root", ((1, f"d_{r}"),), "=", 0)
    model.add_constraint(
        "card", tuple((1, f"z_{u}_{v}") for u, v in dg.arcs), "=", n - 1
    )
    return model


def build_pstp(g: Graph) -> MipModel:
    """Spanning-tree model with explicit forest rows; capped at n <= 15.

    Forest rows y(E(U)) <= |U| - 1 are emitted only for vertex sets U
    inducing at least |U| edges; for any other U the row already follows
    from the y <= 1 bounds.  Rows are declared in increasing order of the
    subset's bitmask encoding.
    """
    if g.n > PSTP_CAP:
        raise SizeCapError(
            f"build_pstp refuses n={g.n}: the forest rows grow exponentially "
            f"(cap {PSTP_CAP})"
        )
    if g.n == 0:
        raise InputError("build_pstp needs at least one vertex")
    n = g.n
    edges = sorted(g.edges)
    model = MipModel(metadata={"formulation": "spanning-tree"})
    for v in range(n):
        model.add_variable(f"x_{v}", "binary")
    for u, v in edges:
        model.add_variable(f"y_{u}_{v}", "continuous", 0.0, 1.0)
    model.set_objective(tuple((1, f"x_{v}") for v in range(n)))
    for u, v in edges:
        model.add_constraint(f"cover_{u}_{v}", ((1, f"x_{u}"), (1, f"x_{v}")), ">=", 1)
    # induced-edge counts for all subsets, by peeling the lowest vertex
    ecount = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        ecount[mask] = ecount[rest] + (g.masks[v] & rest).bit_count()
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if ecount[mask] < size:
            continue
        members = list(bits_of(mask))
        name = "sub_" + "_".join(str(v) for v in members)
        inner = tuple(
            (1, f"y_{u}_{v}") for u, v in edges if mask >> u & 1 and mask >> v & 1
        )
        model.add_constraint(name, inner, "<=", size - 1)
    total = [(1, f"y_{u}_{v}") for u, v in edges]
    total.extend((-1, f"x_{v}") for v in range(n))
    model.add_constraint("total", total, "=", -1)
    for u, v in edges:
        model.add_constraint(f"ya_{u}_{v}", ((1, f"y_{u}_{v}"), (-1, f"x_{u}")), "<=", 0)
        model.add_constraint(f"yb_{u}_{v}", ((1, f"y_{u}_{v}"), (-1, f"x_{v}")), "<=", 0)
    return model


# ---------------------------------------------------------------------------
# point checking


def check_integer_point(model: MipModel, assignment: Mapping[str, float], tol: float = DEFAULT_TOL) -> bool:
    """Evaluate every row and bound at the given point.

    Every declared variable must be present in the assignment (extra keys
    are ignored); a missing one raises InputError.  Binary variables must
    sit within tol of 0 or 1.
    """
    for var in model.variables:
        if var.name not in assignment:
            raise InputError(f"assignment missing variable {var.name!r}")
        val = assignment[var.name]
        if not (var.lb - tol <= val <= var.ub + tol):
            return False
        if var.kind == "binary" and min(abs(val), abs(val - 1)) > tol:
            return False
    for row in model.constraints:
        lhs = sum(coef * assignment[var] for coef, var in row.terms)
        if row.sense == "<=" and lhs > row.rhs + tol:
            return False
        if row.sense == ">=" and lhs < row.rhs - tol:
            return False
        if row.sense == "=" and abs(lhs - row.rhs) > tol:
            return False
    return True


def feasible_d(
    dg: RootedDigraph,
    z: Mapping[tuple[int, int], int],
    x: Optional[Sequence[int]] = None,
) -> Optional[list[int]]:
    """Depth labels satisfying the big-M rows for fixed arc picks, or None.

    The rows are d_root = 0, 0 <= d_v <= n-1, and for every arc (u, v):
    d_v >= n*(z_uv - 1) + d_u + x_v, with x defaulting to all ones.  The
    componentwise-least solution is computed by longest-path relaxation
    over the picked arcs only: an unpicked arc contributes
    d_v >= d_u + x_v - n, which can never bind while every d stays within
    [0, n-1].  Divergence past n-1 (a positive cycle among picked arcs)
    means no labels exist.
    """
    n = dg.n
    for arc in dg.arcs:
        if arc not in z:
            raise InputError(f"arc assignment missing arc {arc}")
    if x is None:
        x = [1] * n
    chosen = [(u, v) for (u, v) in dg.arcs if z[(u, v)]]
    d = [0] * n
    for _ in range(n + 1):
        changed = False
        for u, v in chosen:
            lo = d[u] + x[v]
            if d[v] < lo:
                if lo > n - 1:
                    return None
                d[v] = lo
                changed = True
        if not changed:
            break
    else:
        return None
    if d[dg.r] != 0:
        return None
    return d


# ---------------------------------------------------------------------------
# witnesses and exhaustive verification


def _grow_arborescence(dg: RootedDigraph, cmask: int):
    """Breadth-first arborescence of the digraph induced on cmask.

    Roots per membership: from r when present (with the forced arc to r1
    when both roots are in), else from r1.  Returns (parent, depth) maps,
    or None when some member is unreachable.
    """
    r, r1 = dg.r, dg.r1
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    if cmask >> r & 1:
        depth[r] = 0
        seeds = [r]
        if r1 is not None and cmask >> r1 & 1:
            parent[r1] = r
            depth[r1] = 1
            seeds.append(r1)
    elif r1 is not None and cmask >> r1 & 1:
        depth[r1] = 0
        seeds = [r1]
    else:
        return None
    queue = deque(seeds)
    while queue:
        u = queue.popleft()
        for w in dg.out_heads(u):
            if cmask >> w & 1 and w not in depth:
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)
    if len(depth) != cmask.bit_count():
        return None
    return parent, depth


def witness_parb(g: Graph, cover: Iterable[int], r: int, r1: int) -> Witness:
    """Explicit (z, d) certifying a connected vertex cover in build_parb.

    The arcs are a breadth-first arborescence of the digraph induced on
    the cover, rooted per which roots the cover contains; depths are tree
    distances, zero outside the cover.  The witness is verified against
    the model before being returned.
    """
    cover = frozenset(cover)
    cert = check_cvc(g, cover)
    if not cert.valid:
        raise InputError("witness_parb requires a valid connected vertex cover")
    dg = build_digraph(g, r, r1)
    cmask = set_to_mask(cover)
    grown = _grow_arborescence(dg, cmask)
    if grown is None:
        raise ContractError("no arborescence spans the cover; internal bug")
    parent, depth = grown
    chosen = {(u, w) for w, u in parent.items()}
    z = {arc: (1 if arc in chosen else 0) for arc in dg.arcs}
    d = tuple(depth.get(v, 0) for v in range(g.n))
    witness = Witness(z=z, d=d)
    model = build_parb(g, r, r1)
    if not check_integer_point(model, parb_point(dg, cover, witness)):
        raise ContractError("constructed witness fails the model; internal bug")
    return witness


def parb_point(dg: RootedDigraph, cover: Iterable[int], witness: Witness) -> dict:
    """Merge a cover and its witness into a named assignment for the model."""
    cover = frozenset(cover)
    point = {f"x_{v}": (1 if v in cover else 0) for v in range(dg.n)}
    for u, v in dg.arcs:
        point[f"z_{u}_{v}"] = witness.z[(u, v)]
    for v in range(dg.n):
        point[f"d_{v}"] = witness.d[v]
    return point


def _verify_pick(dg: RootedDigraph, cmask: int, parent: Mapping[int, int]) -> bool:
    """Mechanically check an arc pick against the integral rows for
    x = indicator of cmask: linking, indegree, cardinality, and the depth
    system.  Covering rows are the caller's business (they ignore z, d)."""
    chosen = {(u, w) for w, u in parent.items()}
    for u, w in chosen:
        if not (cmask >> u & 1 and cmask >> w & 1):
            return False
    indeg = [0] * dg.n
    for _, w in chosen:
        indeg[w] += 1
    xs = [(cmask >> v) & 1 for v in range(dg.n)]
    for v in range(dg.n):
        if v in (dg.r, dg.r1):
            continue
        if indeg[v] != xs[v]:
            return False
    if len(chosen) != cmask.bit_count() - 1:
        return False
    z = {arc: (1 if arc in chosen else 0) for arc in dg.arcs}
    return feasible_d(dg, z, xs) is not None


def _exists_arc_pick(dg: RootedDigraph, cmask: int) -> bool:
    """Decide whether some binary z completes x = indicator of cmask.

    The rows themselves shape the search space: linking zeroes every arc
    leaving the set, the indegree rows demand exactly one picked in-arc
    for each member outside the roots, and the cardinality row then forces
    the root arc exactly when both roots are members.  The search tries a
    breadth-first candidate first, then enumerates in-arc choices
    depth-first.  A partial choice closing a directed cycle is pruned:
    its depth rows d_head >= d_tail + 1 are already unsatisfiable and
    completions only add rows, so no completion can recover.
    """
    r, r1 = dg.r, dg.r1
    r_in = cmask >> r & 1
    r1_in = r1 is not None and cmask >> r1 & 1
    if not (r_in or r1_in):
        return False
    base_parent: dict[int, int] = {}
    if r_in and r1_in:
        base_parent[r1] = r
    grown = _grow_arborescence(dg, cmask)
    if grown is not None and _verify_pick(dg, cmask, grown[0]):
        return True
    targets = [
        v for v in bits_of(cmask) if v != r and (r1 is None or v != r1)
    ]
    in_choices = {}
    for v in targets:
        tails = [u for u in dg.in_tails(v) if cmask >> u & 1]
        if not tails:
            return False
        in_choices[v] = tails
    parent = dict(base_parent)

    def closes_cycle(u: int, v: int) -> bool:
        w = u
        while w in parent:
            w = parent[w]
            if w == v:
                return True
        return False

    def search(idx: int) -> bool:
        if idx == len(targets):
            return _verify_pick(dg, cmask, parent)
        v = targets[idx]
        for u in in_choices[v]:
            if not closes_cycle(u, v):
                parent[v] = u
                if search(idx + 1):
                    return True
                del parent[v]
        return False

    return search(0)


def find_parb_mismatch(
    g: Graph, r: Optional[int] = None, r1: Optional[int] = None
) -> Optional[VertexSet]:
    """First vertex set breaking the model/checker equivalence, or None.

    For every C subseteq V, the two-root model with x = indicator of C is
    feasible for some (z, d) exactly when C is a connected vertex cover.
    Returns the first C (by bitmask order) where the sides disagree.
    """
    if g.n > VERIFY_CAP:
        raise SizeCapError(
            f"find_parb_mismatch refuses n={g.n}: 2^n subsets (cap {VERIFY_CAP})"
        )
    r, r1 = _resolve_roots(g, r, r1)
    dg = build_digraph(g, r, r1)
    edges = sorted(g.edges)
    for cmask in range(1 << g.n):
        covered = all(cmask >> u & 1 or cmask >> v & 1 for u, v in edges)
        target = check_cvc(g, mask_to_set(cmask)).valid
        feasible = covered and _exists_arc_pick(dg, cmask)
        if feasible != target:
            return mask_to_set(cmask)
    return None


def enumerate_verify_parb(
    g: Graph, r: Optional[int] = None, r1: Optional[int] = None
) -> bool:
    """Exhaustively confirm the two-root model matches the checker on
    every one of the 2^n vertex sets (n capped at 10)."""
    return find_parb_mismatch(g, r, r1) is None


def enumerate_verify_pstp(g: Graph) -> bool:
    """Exhaustively confirm the spanning-tree model matches the checker.

    For every C subseteq V of a connected graph (n <= 8): when C is a
    connected vertex cover, an explicit spanning tree of G[C] yields a
    point passing every row; otherwise no y can exist, certified
    mechanically: either a covering row fails on x alone, or G[C] is
    disconnected and the per-component forest rows (each one emitted, or
    implied by the y bounds) cap y(E) at |C| - #components, contradicting
    the total row y(E) = |C| - 1.
    """
    if g.n > 8:
        raise SizeCapError(f"enumerate_verify_pstp refuses n={g.n} (cap 8)")
    if g.n < 2 or not is_connected(g):
        raise InputError("enumerate_verify_pstp expects a connected graph, n >= 2")
    model = build_pstp(g)
    row_names = model.constraint_names()
    edges = sorted(g.edges)
    for cmask in range(1 << g.n):
        cert = check_cvc(g, mask_to_set(cmask))
        covered = all(cmask >> u & 1 or cmask >> v & 1 for u, v in edges)
        if covered != cert.is_cover:
            return False
        if cert.valid:
            # explicit spanning tree of G[C] by BFS inside the mask
            members = list(bits_of(cmask))
            start = members[0]
            depth = {start: 0}
            tree = set()
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in bits_of(g.masks[u] & cmask):
                    if w not in depth:
                        depth[w] = depth[u] + 1
                        tree.add((min(u, w), max(u, w)))
                        queue.append(w)
            if len(depth) != len(members):
                return False  # checker said connected; tree must span
            point = {f"x_{v}": (1 if cmask >> v & 1 else 0) for v in range(g.n)}
            for u, v in edges:
                point[f"y_{u}_{v}"] = 1 if (u, v) in tree else 0
            if not check_integer_point(model, point):
                return False
        elif covered:
            # cover rows hold, so infeasibility must come from the forest
            # rows: count components of G[C] and confirm the certificate
            comps = []
            rest = cmask
            while rest:
                seed = rest & -rest
                comp = seed
                frontier = seed
                while frontier:
                    nxt = 0
                    for v in bits_of(frontier):
                        nxt |= g.masks[v] & cmask
                    frontier = nxt & ~comp
                    comp |= frontier
                comps.append(comp)
                rest &= ~comp
            if len(comps) < 2:
                return False  # covered but invalid must mean disconnected
            for comp in comps:
                size = comp.bit_count()
                induced = sum(
                    1 for u, v in edges if comp >> u & 1 and comp >> v & 1
                )
                if induced >= size:
                    name = "sub_" + "_".join(str(v) for v in bits_of(comp))
                    if name not in row_names:
                        return False  # emission rule failed to cover the cut
        else:
            # x alone violates some covering row; nothing more to certify
            pass
    return True


def count_qr_feasible(dg: RootedDigraph) -> int:
    """Count the binary arc picks feasible in the single-root model.

    Enumerates the solution set of the indegree rows (one picked in-arc
    per non-root vertex) depth-first, pruning partial picks that close a
    directed cycle (their depth rows are already unsatisfiable, and
    completions only add rows); each complete pick is accepted only if the
    depth system solves.  Intended for the matrix-tree cross-check.
    """
    if dg.n > QR_COUNT_CAP:
        raise SizeCapError(f"count_qr_feasible refuses n={dg.n} (cap {QR_COUNT_CAP})")
    r = dg.r
    targets = [v for v in range(dg.n) if v != r]
    for v in targets:
        if not dg.in_tails(v):
            return 0
    parent: dict[int, int] = {}
    ones = [1] * dg.n

    def closes_cycle(u: int, v: int) -> bool:
        w = u
        while w in parent:
            w = parent[w]
            if w == v:
                return True
        return False

    def count(idx: int) -> int:
        if idx == len(targets):
            chosen = {(u, w) for w, u in parent.items()}
            z = {arc: (1 if arc in chosen else 0) for arc in dg.arcs}
            return 1 if feasible_d(dg, z, ones) is not None else 0
        v = targets[idx]
        total = 0
        for u in dg.in_tails(v):
            if not closes_cycle(u, v):
                parent[v] = u
                total += count(idx + 1)
                del parent[v]
        return total

    return count(0)


# ---------------------------------------------------------------------------
# LP-file emission


def _num(x: float) -> str:
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def _expr_tokens(terms) -> list[str]:
    tokens = []
    for i, (coef, var) in enumerate(terms):
        mag = abs(coef)
        body = var if mag == 1 else f"{_num(mag)} {var}"
        if i == 0:
            tokens.append(body if coef >= 0 else f"- {body}")
        else:
            tokens.append(f"+ {body}" if coef >= 0 else f"- {body}")
    return tokens


def _wrap(prefix: str, tokens: list[str], per_line: int = 8) -> list[str]:
    lines = []
    for start in range(0, len(tokens), per_line):
        chunk = " ".join(tokens[start : start + per_line])
        lines.append(f"{prefix}{chunk}" if start == 0 else f"    {chunk}")
    return lines


def write_lp(model: MipModel) -> str:
    """Serialize the model to LP format, byte-for-byte deterministic.

    Sections: comment lines from metadata, Minimize, Subject To (rows in
    declaration order), Bounds (continuous variables), Binaries, End.
    An empty linear expression is written as the first variable with
    coefficient zero.  Long expressions wrap at eight terms per line.
    """
    if not model.variables:
        raise InputError("cannot write a model with no variables")
    first_var = model.variables[0].name
    lines = [f"\\ {k}: {v}" for k, v in model.metadata.items()]
    lines.append("Minimize")
    obj = model.objective or ((0, first_var),)
    lines.extend(_wrap(" obj: ", _expr_tokens(obj)))
    lines.append("Subject To")
    for row in model.constraints:
        terms = row.terms or ((0, first_var),)
        tokens = _expr_tokens(terms)
        tokens.append(row.sense)
        tokens.append(_num(row.rhs))
        lines.extend(_wrap(f" {row.name}: ", tokens))
    bounded = [v for v in model.variables if v.kind == "continuous"]
    if bounded:
        lines.append("Bounds")
        for v in bounded:
            lines.append(f" {_num(v.lb)} <= {v.name} <= {_num(v.ub)}")
    binaries = [v.name for v in model.variables if v.kind == "binary"]
    if binaries:
        lines.append("Binaries")
        for start in range(0, len(binaries), 10):
            lines.append(" " + " ".join(binaries[start : start + 10]))
    lines.append("End")
    return "\n".join(lines) + "\n"
