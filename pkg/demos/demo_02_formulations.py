"""Build the three integer-programming formulations for one graph.

Shows the model sizes side by side, emits one of them in LP format, and
constructs a certified feasible point for the two-root model from an
optimal cover.  Also counts the single-root model's feasible pick
vectors and matches that count against the matrix-tree theorem.
"""

from cvckit import (
    Graph,
    bidirect_rooted,
    build_digraph,
    build_parb,
    build_pstp,
    build_qr,
    check_integer_point,
    count_qr_feasible,
    default_roots,
    parb_point,
    solve_cvc_bb,
    spanning_tree_count,
    witness_parb,
    write_lp,
)

# prism graph: two triangles joined by a perfect matching
PRISM = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))


def show_sizes(g):
    r, r1 = default_roots(g)
    parb = build_parb(g, r, r1)
    qr = build_qr(bidirect_rooted(g, r), r)
    stp = build_pstp(g)
    print(f"roots chosen for the two-root model: r={r} r1={r1}")
    for label, model in (("two-root", parb), ("single-root", qr), ("spanning-tree", stp)):
        print(
            f"{label:14s} variables={len(model.variables):3d}"
            f" constraints={len(model.constraints):3d}"
        )
    return parb, r, r1


def certified_point(g, parb, r, r1):
    report = solve_cvc_bb(g)
    witness = witness_parb(g, report.cover, r, r1)
    dg = build_digraph(g, r, r1)
    point = parb_point(dg, report.cover, witness)
    ok = check_integer_point(parb, point)
    print(f"optimal cover {sorted(report.cover)} lifts to a feasible point: {ok}")


def tree_count_check(g):
    # every feasible pick vector of the single-root model is one spanning
    # tree oriented away from the root, so the counts must agree
    dg = bidirect_rooted(g, 0)
    picks = count_qr_feasible(dg)
    trees = spanning_tree_count(g)
    print(f"single-root feasible picks={picks} spanning trees={trees}")
    assert picks == trees


def main():
    g = PRISM
    print(f"prism graph: n={g.n} m={g.m}")
    parb, r, r1 = show_sizes(g)
    certified_point(g, parb, r, r1)
    tree_count_check(g)
    print()
    print("two-root model in LP format:")
    print(write_lp(parb), end="")


if __name__ == "__main__":
    main()
