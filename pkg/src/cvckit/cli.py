"""Command-line interface.

Subcommands: gen (write random DIMACS instances), solve (run a solver on
one instance), emit (write a model as an LP file), verify (exhaustively
check a model against the subset oracle), bench (CSV benchmark over
generated or on-disk instances).

Exit codes: 0 success, 2 usage error, 3 bad input, 4 stopped at the time
limit, 5 verification found a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from .bb import SolverConfig, solve, solve_vc_bb
from .errors import CvcKitError, InputError
from .graph import (
    Graph,
    bipartite_random,
    gnp_random,
    is_connected,
    parse_dimacs,
    write_dimacs,
)
from .mip import (
    bidirect_rooted,
    build_parb,
    build_pstp,
    build_qr,
    default_roots,
    enumerate_verify_pstp,
    find_parb_mismatch,
    write_lp,
)
from .oracle import DEFAULT_CAP, brute_force_vc

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_TIME_LIMIT = 4
EXIT_VERIFY = 5

TIME_LIMIT_ENV = "CVCKIT_TIME_LIMIT"


def _read_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as handle:
            return parse_dimacs(handle.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _pct(p: float) -> str:
    return f"{int(round(p * 100)):03d}"


def _resolve_time_limit(value: Optional[float]) -> Optional[float]:
    if value is not None:
        return value
    raw = os.environ.get(TIME_LIMIT_ENV)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"{TIME_LIMIT_ENV} must be a number, got {raw!r}")


def _solver_config(args, algorithm: str) -> SolverConfig:
    return SolverConfig(
        time_limit=_resolve_time_limit(args.time_limit),
        use_russian_doll=(algorithm == "rds"),
        use_bipartite_bound=not args.no_bipartite_bound,
        coloring_reuse=not args.no_coloring_reuse,
        warm_start=not args.no_warm_start,
    )


# ---------------------------------------------------------------------------
# gen


def _generate(kind: str, params: dict, seed: int) -> Graph:
    if kind == "gnp":
        return gnp_random(params["n"], params["p"], seed)
    return bipartite_random(params["n1"], params["n2"], params["p"], seed)


def _instance_name(kind: str, params: dict, seed: int) -> str:
    if kind == "gnp":
        return f"G_gnp_{params['n']}_{_pct(params['p'])}_s{seed}"
    return f"G_bip_{params['n1']}_{params['n2']}_{_pct(params['p'])}_s{seed}"


def _gen_connected(kind: str, params: dict, seed: int, max_reseeds: int) -> tuple[Graph, int]:
    """Scan seeds upward from `seed` until the sample is connected."""
    for offset in range(max_reseeds + 1):
        g = _generate(kind, params, seed + offset)
        if is_connected(g):
            return g, seed + offset
    raise InputError(
        f"no connected sample within {max_reseeds} reseeds from seed {seed}"
    )


def _cmd_gen(args) -> int:
    if args.kind == "gnp":
        params = {"n": args.n, "p": args.p}
    else:
        params = {"n1": args.n1, "n2": args.n2, "p": args.p}
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    cursor = args.seed
    for _ in range(args.count):
        if args.connected:
            g, used = _gen_connected(args.kind, params, cursor, args.max_reseeds)
        else:
            g, used = _generate(args.kind, params, cursor), cursor
        path = outdir / (_instance_name(args.kind, params, used) + ".col")
        path.write_text(write_dimacs(g), encoding="ascii")
        print(path)
        cursor = used + 1
    return EXIT_OK


# ---------------------------------------------------------------------------
# solve


def _cmd_solve(args) -> int:
    g = _read_graph(args.file)
    cfg = _solver_config(args, args.algorithm)
    report = solve_vc_bb(g, cfg) if args.vc else solve(g, cfg)
    name = Path(args.file).stem
    print(
        f"name={name} n={g.n} m={g.m} algorithm={report.algorithm}"
        f" cover_size={report.cover_size} nodes={report.node_count}"
        f" time_s={report.wall_time:.6f} status={report.status}"
        f" best_bound={report.best_bound}"
    )
    print("cover: " + " ".join(str(v) for v in sorted(report.cover)))
    return EXIT_TIME_LIMIT if report.status == "time_limit" else EXIT_OK


# ---------------------------------------------------------------------------
# emit


def _cmd_emit(args) -> int:
    g = _read_graph(args.file)
    if args.model == "pstp":
        if args.root is not None or args.root2 is not None:
            raise InputError("the spanning-tree model takes no roots")
        model = build_pstp(g)
    elif args.model == "qr":
        if args.root2 is not None:
            raise InputError("the single-root model takes one root")
        r = args.root if args.root is not None else default_roots(g)[0]
        model = build_qr(bidirect_rooted(g, r), r)
    else:
        model = build_parb(g, args.root, args.root2)
    text = write_lp(model)
    if args.output:
        Path(args.output).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    g = _read_graph(args.file)
    stem = Path(args.file).stem
    failed = False
    if args.model in ("parb", "all"):
        mismatch = find_parb_mismatch(g, args.root, args.root2)
        if mismatch is None:
            print("parb: ok")
        else:
            failed = True
            out = Path(args.out or ".") / f"{stem}.mismatch.col"
            members = " ".join(str(v) for v in sorted(mismatch))
            out.write_text(
                f"c mismatch_set {members}\n" + write_dimacs(g), encoding="ascii"
            )
            print(f"parb: MISMATCH on {{{members}}}, wrote {out}")
    if args.model in ("pstp", "all"):
        if enumerate_verify_pstp(g):
            print("pstp: ok")
        else:
            failed = True
            print("pstp: MISMATCH")
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------
# bench


def _bench_rows(task: dict) -> list[dict]:
    """Solve one instance (regenerated or read in the worker) and build
    its CSV rows.  Module-level so process pools can pickle it."""
    if task["source"] == "file":
        g = _read_graph(task["path"])
        name = Path(task["path"]).stem
        seed = ""
    else:
        # covers are only defined on connected graphs; scan like gen --connected
        g, used = _gen_connected(task["kind"], task["params"], task["seed"], 1000)
        name = _instance_name(task["kind"], task["params"], used)
        seed = used
    if g.n <= DEFAULT_CAP:
        vc = brute_force_vc(g)
    else:
        vc = solve_vc_bb(g, SolverConfig(time_limit=task["time_limit"])).cover_size
    rows = []
    for algorithm in task["algorithms"]:
        cfg = SolverConfig(
            time_limit=task["time_limit"], use_russian_doll=(algorithm == "rds")
        )
        times = []
        node_counts = []
        report = None
        for _ in range(task["repeats"]):
            report = solve(g, cfg)
            times.append(report.wall_time)
            node_counts.append(report.node_count)
        if len(set(node_counts)) > 1:
            warnings.warn(
                f"{name}/{algorithm}: node counts varied across repeats "
                f"{sorted(set(node_counts))}; reporting the maximum"
            )
        rows.append(
            {
                "name": name,
                "n": g.n,
                "m": g.m,
                "vc": vc,
                "cvc": report.cover_size,
                "solver": algorithm,
                "time_s": f"{sum(times) / len(times):.6f}",
                "nodes": max(node_counts),
                "status": report.status,
                "seed": seed,
            }
        )
    return rows


def _parse_gnp_spec(spec: str) -> dict:
    parts = spec.split(",")
    if len(parts) != 3:
        raise InputError(f"--gnp wants N,P,SEED, got {spec!r}")
    return {
        "source": "gen",
        "kind": "gnp",
        "params": {"n": int(parts[0]), "p": float(parts[1])},
        "seed": int(parts[2]),
    }


def _parse_bip_spec(spec: str) -> dict:
    parts = spec.split(",")
    if len(parts) != 4:
        raise InputError(f"--bipartite wants N1,N2,P,SEED, got {spec!r}")
    return {
        "source": "gen",
        "kind": "bipartite",
        "params": {"n1": int(parts[0]), "n2": int(parts[1]), "p": float(parts[2])},
        "seed": int(parts[3]),
    }


def _cmd_bench(args) -> int:
    tasks = []
    try:
        for spec in args.gnp or ():
            tasks.append(_parse_gnp_spec(spec))
        for spec in args.bipartite or ():
            tasks.append(_parse_bip_spec(spec))
    except ValueError as exc:
        raise InputError(f"bad instance spec: {exc}")
    for path in args.files:
        tasks.append({"source": "file", "path": path})
    if not tasks:
        raise InputError("bench needs at least one --gnp, --bipartite, or file")
    algorithms = ["bb", "rds"] if args.algorithm == "both" else [args.algorithm]
    shared = {
        "algorithms": algorithms,
        "repeats": args.repeats,
        "time_limit": _resolve_time_limit(args.time_limit),
    }
    for task in tasks:
        task.update(shared)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_bench_rows, tasks))
    else:
        results = [_bench_rows(task) for task in tasks]
    header = ["name", "n", "m", "vc", "cvc", "solver", "time_s", "nodes", "status", "seed"]
    if args.output:
        handle = open(args.output, "w", newline="", encoding="ascii")
    else:
        handle = sys.stdout
    try:
        writer = csv.DictWriter(handle, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        for rows in results:
            writer.writerows(rows)
    finally:
        if args.output:
            handle.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser plumbing


def _add_solver_flags(sub) -> None:
    sub.add_argument("--time-limit", type=float, default=None, metavar="SEC")
    sub.add_argument("--no-warm-start", action="store_true")
    sub.add_argument("--no-bipartite-bound", action="store_true")
    sub.add_argument("--no-coloring-reuse", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvckit", description="connected vertex cover toolkit"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="write random DIMACS instances")
    genkind = gen.add_subparsers(dest="kind", required=True)
    gnp = genkind.add_parser("gnp", help="Erdos-Renyi G(n, p)")
    gnp.add_argument("--n", type=int, required=True)
    gnp.add_argument("--p", type=float, required=True)
    bip = genkind.add_parser("bipartite", help="bipartite G(n1, n2, p)")
    bip.add_argument("--n1", type=int, required=True)
    bip.add_argument("--n2", type=int, required=True)
    bip.add_argument("--p", type=float, required=True)
    for sub in (gnp, bip):
        sub.add_argument("--seed", type=int, required=True)
        sub.add_argument("--count", type=int, default=1)
        sub.add_argument("--connected", action="store_true",
                         help="scan seeds upward until the sample is connected")
        sub.add_argument("--max-reseeds", type=int, default=1000)
        sub.add_argument("--out", default=".", metavar="DIR")
        sub.set_defaults(func=_cmd_gen)

    slv = subs.add_parser("solve", help="solve one DIMACS instance")
    slv.add_argument("file")
    slv.add_argument("--algorithm", choices=("bb", "rds"), default="bb")
    slv.add_argument("--vc", action="store_true",
                     help="plain vertex cover (connectivity pruning off)")
    _add_solver_flags(slv)
    slv.set_defaults(func=_cmd_solve)

    emit = subs.add_parser("emit", help="write a model as an LP file")
    emit.add_argument("file")
    emit.add_argument("--model", choices=("parb", "qr", "pstp"), required=True)
    emit.add_argument("--root", type=int, default=None)
    emit.add_argument("--root2", type=int, default=None)
    emit.add_argument("-o", "--output", default=None)
    emit.set_defaults(func=_cmd_emit)

    ver = subs.add_parser("verify", help="exhaustively check a model on an instance")
    ver.add_argument("file")
    ver.add_argument("--model", choices=("parb", "pstp", "all"), default="parb")
    ver.add_argument("--root", type=int, default=None)
    ver.add_argument("--root2", type=int, default=None)
    ver.add_argument("--out", default=None, metavar="DIR",
                     help="directory for mismatch counterexamples")
    ver.set_defaults(func=_cmd_verify)

    ben = subs.add_parser("bench", help="benchmark solvers to CSV")
    ben.add_argument("files", nargs="*", metavar="FILE")
    ben.add_argument("--gnp", action="append", metavar="N,P,SEED")
    ben.add_argument("--bipartite", action="append", metavar="N1,N2,P,SEED")
    ben.add_argument("--algorithm", choices=("bb", "rds", "both"), default="bb")
    ben.add_argument("--repeats", type=int, default=1)
    ben.add_argument("--jobs", type=int, default=1)
    ben.add_argument("--time-limit", type=float, default=None, metavar="SEC")
    ben.add_argument("-o", "--output", default=None, metavar="CSV")
    ben.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CvcKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        # reader went away (e.g. piped into head); suppress the shutdown flush
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


def run() -> None:
    sys.exit(main(sys.argv[1:]))
