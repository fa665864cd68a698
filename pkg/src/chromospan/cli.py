"""Color point sets with bounded stretch, run simulation tables, build lower bounds.

Exit status is 0 on success, 1 on usage or input errors and 2 when ``--verify``
or ``verify --bound`` finds a stretch above the guaranteed bound.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions
from .analysis import optimal_coloring_bruteforce, sparsify_greedy, stretch_factor
from .errors import ChromospanError
from .experiments import MODES, ExperimentConfig, run_experiment
from .geom import EPS_GEO
from .offline import bound_for, color_cones_k, color_delaunay_4, color_ellipse_3, color_mst_2
from .online import color_online
from .pointio import read_coloring, read_points, write_coloring, write_edges, write_points

FIXED_K = {"mst2": 2, "ellipse3": 3, "delaunay4": 4}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chromospan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("color", help="color a point file")
    c.add_argument("--algo", required=True, choices=["mst2", "ellipse3", "delaunay4", "cones", "online"])
    c.add_argument("--k", type=int, help="number of colors (cones, online)")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--out", required=True, help="coloring CSV (index,color)")
    c.add_argument("--verify", action="store_true", help="check the stretch against the bound")
    c.add_argument("--sparsify", type=float, metavar="EPS", help="also write a sparse (1+EPS)-spanner")
    c.add_argument("--edges-out", help="edge CSV for --sparsify (default: <out>.edges.csv)")

    t = sub.add_parser("table", help="simulation table as CSV on stdout")
    t.add_argument("--trials", type=int, default=200)
    t.add_argument("--n", type=int, default=50)
    t.add_argument("--k-min", type=int, default=2)
    t.add_argument("--k-max", type=int, default=10)
    t.add_argument("--modes", default="offline_k,online_k", help=f"comma list from {','.join(MODES)}")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--workers", type=int, help="parallel processes (default: CHROMOSPAN_THREADS or CPU count)")
    t.add_argument("--json", action="store_true", help="emit JSON instead of CSV")

    lb = sub.add_parser("lowerbound", help="write a lower-bound construction")
    lb.add_argument("--kind", required=True, choices=["k2", "k3", "k4", "kgon", "online", "k3probe"])
    lb.add_argument("--n", type=int, help="polygon size for k2/k3/k4")
    lb.add_argument("--k", type=int, help="colors for kgon/online")
    lb.add_argument("--out", help="point file to write")
    lb.add_argument("--bruteforce", action="store_true", help="also compute the optimal stretch")
    lb.add_argument("--budget", type=float, default=1e8)

    v = sub.add_parser("verify", help="stretch of a given coloring")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--coloring", required=True)
    v.add_argument("--bound", type=float)
    v.add_argument("--json", action="store_true")
    return p


def _cmd_color(args) -> int:
    if args.algo in FIXED_K:
        if args.k is not None and args.k != FIXED_K[args.algo]:
            raise UsageError(f"--algo {args.algo} always uses k={FIXED_K[args.algo]}")
        k = FIXED_K[args.algo]
    else:
        if args.k is None or args.k < 2:
            raise UsageError(f"--algo {args.algo} needs --k >= 2")
        k = args.k
    if args.sparsify is not None and not args.sparsify > 0:
        raise UsageError("--sparsify needs a positive epsilon")

    pts = read_points(args.infile)
    if args.algo == "mst2":
        col = color_mst_2(pts)
    elif args.algo == "ellipse3":
        col = color_ellipse_3(pts)[0]
    elif args.algo == "delaunay4":
        col = color_delaunay_4(pts)
    elif args.algo == "cones":
        col = color_cones_k(pts, k)
    else:
        col = color_online(pts, k)
    write_coloring(col, args.out)

    status = 0
    if args.verify:
        bound = bound_for(args.algo, k)
        s = stretch_factor(pts, col).stretch
        ok = s <= bound + EPS_GEO
        print(f"stretch={s:.6f} bound={bound:.6f} {'PASS' if ok else 'FAIL'}")
        status = 0 if ok else 2
    if args.sparsify is not None:
        sp = sparsify_greedy(pts, col, args.sparsify)
        edges_out = args.edges_out or str(Path(args.out).with_suffix("")) + ".edges.csv"
        write_edges(sp.edges, edges_out)
        print(f"sparse edges={len(sp.edges)} -> {edges_out}")
    return status


def _cmd_table(args) -> int:
    modes = tuple(m.strip() for m in args.modes.split(",") if m.strip())
    try:
        config = ExperimentConfig(
            trials=args.trials, n=args.n, k_range=tuple(range(args.k_min, args.k_max + 1)),
            modes=modes, seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = run_experiment(config, workers=args.workers)
    if args.json:
        sys.stdout.write(json.dumps(table.to_json(), indent=2) + "\n")
    else:
        sys.stdout.write(table.to_csv())
    return 0


def _cmd_lowerbound(args) -> int:
    kind = args.kind
    if kind in ("k2", "k3", "k4"):
        if args.n is None:
            raise UsageError(f"--kind {kind} needs --n")
        inst = getattr(constructions, f"gen_lb_{kind}")(args.n)
    elif kind == "k3probe":
        inst = constructions.k3_online_probe()
    else:
        if args.k is None:
            raise UsageError(f"--kind {kind} needs --k")
        inst = constructions.gen_lb_kgon(args.k) if kind == "kgon" else constructions.gen_online_lb(args.k)
    info = {
        "kind": kind,
        "k": inst.k,
        "points": len(inst.points),
        "online": inst.online,
        "analytic_bound": inst.analytic_bound,
        "bound_formula": inst.bound_formula,
    }
    if args.out:
        write_points(inst.points, args.out, comment=f"{kind} k={inst.k} bound={inst.analytic_bound!r} ({inst.bound_formula})")
    if args.bruteforce:
        col, s = optimal_coloring_bruteforce(inst.points, inst.k, budget=args.budget)
        info["optimal_stretch"] = s
        info["optimal_coloring"] = list(col.assignment)
    if inst.online:
        info["algorithm_stretch"] = constructions.run_adversary(inst.k, instance=inst)
    print(json.dumps(info))
    return 0


def _cmd_verify(args) -> int:
    pts = read_points(args.infile)
    col = read_coloring(args.coloring)
    if len(col) != len(pts):
        raise UsageError("coloring and point file sizes differ")
    rep = stretch_factor(pts, col)
    ok = args.bound is None or rep.stretch <= args.bound + EPS_GEO
    if args.json:
        print(json.dumps({
            "stretch": rep.stretch if not rep.is_infinite else "inf",
            "worst_pair": rep.worst_pair,
            "witness": rep.witness,
            "bound": args.bound,
            "pass": ok,
        }))
    else:
        line = f"stretch={rep.stretch:.6f} worst_pair={rep.worst_pair} witness={rep.witness}"
        if args.bound is not None:
            line += f" bound={args.bound:.6f} {'PASS' if ok else 'FAIL'}"
        print(line)
    return 0 if ok else 2


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
        handler = {
            "color": _cmd_color,
            "table": _cmd_table,
            "lowerbound": _cmd_lowerbound,
            "verify": _cmd_verify,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ChromospanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
