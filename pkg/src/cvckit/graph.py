"""Undirected graph type, DIMACS I/O, connectivity primitives, generators.

Vertices are always 0..n-1.  The module keeps two views of every graph:
sorted neighbor tuples for readable code, and per-vertex neighbor bitmasks
(`Graph.masks`) that the solvers and the low-level helpers below use for
speed.  The `*_mask` functions operate on a "live" bitmask selecting an
induced subgraph, so subgraphs never have to be materialised in hot loops.
"""

from __future__ import annotations

import warnings
from typing import Iterable, NamedTuple

import numpy as np

from .errors import DimacsError, InputError
from .rng import Xoshiro256

# Vertex sets are plain frozensets of ints with incidence semantics.
VertexSet = frozenset


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable once built.

    Data members:
        n: vertex count.
        edges: frozenset of (u, v) pairs with u < v.
        adj: tuple of sorted neighbor tuples, one per vertex.
        masks: tuple of neighbor bitmasks, one per vertex (bit v of
            masks[u] is set iff u and v are adjacent).
    """

    __slots__ = ("n", "edges", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a non-negative int, got {n!r}")
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u} is not allowed")
            normalized.add((u, v) if u < v else (v, u))
        adj = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in sorted(normalized):
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges = frozenset(normalized)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.masks = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class InducedSubgraph(NamedTuple):
    """Result of induced_delete: the subgraph plus the label map back.

    original[i] is the label, in the parent graph, of vertex i here.
    """

    graph: Graph
    original: tuple[int, ...]


# ---------------------------------------------------------------------------
# bitmask helpers


def bits_of(mask: int):
    """Yield the set bit indices of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reachable_mask(masks: tuple[int, ...], start: int, live: int) -> int:
    """Vertices of the `live` induced subgraph reachable from `start`."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= masks[v]
        frontier = nxt & live & ~seen
        seen |= frontier
    return seen


def is_connected_mask(masks: tuple[int, ...], live: int) -> bool:
    """Connectivity of the induced subgraph selected by `live`.

    Empty and single-vertex subgraphs count as connected.
    """
    if live == 0:
        return True
    start = (live & -live).bit_length() - 1
    return reachable_mask(masks, start, live) == live


def connected_after_removal(masks: tuple[int, ...], live: int, v: int) -> bool:
    """Whether the live subgraph stays connected once v is deleted."""
    return is_connected_mask(masks, live & ~(1 << v))


def articulation_points_mask(masks: tuple[int, ...], live: int) -> int:
    """Cut vertices of the induced subgraph selected by `live`, as a mask.

    Computed per connected component with one iterative low-link DFS, so the
    result is meaningful for disconnected subgraphs too.
    """
    art = 0
    visited = 0
    size = len(masks)
    order = [0] * size
    low = [0] * size
    clock = 1
    rest = live
    while rest:
        root = (rest & -rest).bit_length() - 1
        order[root] = low[root] = clock
        clock += 1
        visited |= 1 << root
        root_children = 0
        # frame: [vertex, parent, mask of neighbors not yet scanned]
        frames = [[root, -1, masks[root] & live]]
        while frames:
            frame = frames[-1]
            v, parent, pending = frame
            if pending:
                wbit = pending & -pending
                frame[2] = pending ^ wbit
                w = wbit.bit_length() - 1
                if not visited & wbit:
                    if v == root:
                        root_children += 1
                    order[w] = low[w] = clock
                    clock += 1
                    visited |= wbit
                    frames.append([w, v, masks[w] & live])
                elif w != parent:
                    if order[w] < low[v]:
                        low[v] = order[w]
            else:
                frames.pop()
                if parent != -1:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if parent != root and low[v] >= order[parent]:
                        art |= 1 << parent
        if root_children >= 2:
            art |= 1 << root
        rest = live & ~visited
    return art


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_set(mask: int) -> frozenset:
    return frozenset(bits_of(mask))


# ---------------------------------------------------------------------------
# public graph operations


def is_connected(g: Graph) -> bool:
    """True iff g is connected; requires at least one vertex."""
    if g.n == 0:
        raise InputError("connectivity is undefined for the empty graph")
    return is_connected_mask(g.masks, g.full_mask())


def articulation_points(g: Graph) -> frozenset:
    """Cut vertices of g (per component when g happens to be disconnected)."""
    return mask_to_set(articulation_points_mask(g.masks, g.full_mask()))


def induced_delete(g: Graph, removed: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced by deleting `removed`, with the label map back."""
    removed = set(removed)
    for v in removed:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
    keep = [v for v in range(g.n) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for (u, v) in g.edges if u not in removed and v not in removed
    ]
    return InducedSubgraph(Graph(len(keep), edges), tuple(keep))


def dfs_tree(g: Graph, root: int) -> list[tuple[int, int]]:
    """Depth-first spanning tree edges (parent, child) in discovery order.

    Neighbors are scanned in increasing label order, so the tree is
    deterministic.  Requires g connected.
    """
    if not 0 <= root < g.n:
        raise InputError(f"root {root} out of range for n={g.n}")
    seen = [False] * g.n
    seen[root] = True
    tree: list[tuple[int, int]] = []
    # push reversed so the smallest neighbor is explored first
    stack = [(root, iter(g.adj[root]))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if not seen[w]:
                seen[w] = True
                tree.append((v, w))
                stack.append((w, iter(g.adj[w])))
                advanced = True
                break
        if not advanced:
            stack.pop()
    if len(tree) != g.n - 1:
        raise InputError("dfs_tree requires a connected graph")
    return tree


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees, by the matrix-tree determinant.

    Uses the reduced Laplacian; intended for the small graphs the
    exhaustive verifiers work on (counts stay well inside exact float
    range there).  A graph with a single vertex has one spanning tree;
    a disconnected graph has zero.
    """
    if g.n == 0:
        raise InputError("spanning_tree_count is undefined for the empty graph")
    if g.n == 1:
        return 1
    lap = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    return int(round(np.linalg.det(lap[1:, 1:])))


# ---------------------------------------------------------------------------
# DIMACS edge format


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format ('p edge n m' header, 1-based 'e u v' lines).

    Comment lines start with 'c'.  Duplicate edge lines are collapsed with
    a warning; a final edge count differing from the header's m is also
    only a warning.  Structural problems (missing or repeated header, bad
    vertex numbers, self-loops, unknown line types) raise DimacsError
    naming the line.
    """
    n = m_declared = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: repeated problem line {raw!r}")
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError(f"line {lineno}: malformed problem line {raw!r}")
            try:
                n, m_declared = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed problem line {raw!r}")
            if n < 0 or m_declared < 0:
                raise DimacsError(f"line {lineno}: negative counts in {raw!r}")
        elif fields[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line {raw!r}")
            if len(fields) != 3:
                raise DimacsError(f"line {lineno}: malformed edge line {raw!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed edge line {raw!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(
                    f"line {lineno}: vertex out of range in {raw!r} (n={n})"
                )
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop in {raw!r}")
            pair = (min(u, v) - 1, max(u, v) - 1)
            if pair in edges:
                warnings.warn(
                    f"line {lineno}: duplicate edge line {raw!r} collapsed",
                    stacklevel=2,
                )
            edges.add(pair)
        else:
            raise DimacsError(f"line {lineno}: unknown line type {raw!r}")
    if n is None:
        raise DimacsError("no problem line found")
    if len(edges) != m_declared:
        warnings.warn(
            f"header declares m={m_declared} but {len(edges)} distinct edges parsed",
            stacklevel=2,
        )
    return Graph(n, edges)


def write_dimacs(g: Graph) -> str:
    """Serialize to DIMACS edge format, bit-exactly reproducible.

    Edge lines are 1-based, lexicographically sorted, LF-terminated.
    """
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# random instance generators


def gnp_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from the package's own deterministic stream.

    Every unordered pair (i, j), i < j, scanned lexicographically, consumes
    exactly one float draw and becomes an edge iff draw < p.  The generator
    never retries for connectivity; callers decide how to handle
    disconnected samples.
    """
    if not isinstance(n, int) or n < 0:
        raise InputError(f"vertex count must be a non-negative int, got {n!r}")
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {p!r}")
    rng = Xoshiro256(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return Graph(n, edges)


def bipartite_random(n1: int, n2: int, p: float, seed: int) -> Graph:
    """Random bipartite graph: left side 0..n1-1, right side n1..n1+n2-1.

    Pairs (i, n1+j) are scanned with i outer and j inner, one draw each,
    edge iff draw < p.  Side membership is fixed by the construction:
    the first n1 labels are the left side.
    """
    if not isinstance(n1, int) or not isinstance(n2, int) or n1 < 0 or n2 < 0:
        raise InputError(f"side sizes must be non-negative ints, got {n1!r}, {n2!r}")
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {p!r}")
    rng = Xoshiro256(seed)
    edges = []
    for i in range(n1):
        for j in range(n2):
            if rng.random() < p:
                edges.append((i, n1 + j))
    return Graph(n1 + n2, edges)
