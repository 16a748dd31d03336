"""Command-line entry point: ``symbreak <command> ...``.

Exit codes: 0 success (for ``verify``: distinguishing), 1 verified not
distinguishing, 2 usage or input error, 3 a search guard was exceeded.
Errors are printed to standard error as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import autgroup, breaking, distnum, generators, io, motion
from .graph import RootedGraph, ball_bound_holds, bfs_decompose, sphere_bound_holds

EXIT_OK, EXIT_NOT_DISTINGUISHING, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class GuardExceeded(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(obj, out=None) -> None:
    text = io.dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str, root: str | None = None) -> RootedGraph:
    g = io.load_graph(path)
    if root is not None:
        g = g.with_root(root)
    return g


def _write_dot(path: str | None, g: RootedGraph, labels=None) -> None:
    if path:
        Path(path).write_text(io.to_dot(g, labels))


# -- commands ----------------------------------------------------------------

def cmd_gen(args) -> int:
    fam = generators.parse_family(args.family)
    g = generators.truncate(fam, args.radius)
    doc = io.graph_to_json(g)
    plan = generators.plan_for(fam, args.radius)
    side = {"family": fam.describe(), "radius": args.radius}
    if plan is not None:
        side["plan"] = plan.to_json()
    if args.out:
        io.write_json(args.out, doc)
        io.write_json(args.out + ".plan.json", side)
    else:
        _emit(doc)
    _write_dot(args.dot, g)
    return EXIT_OK


def _sphere_profile(g: RootedGraph, center: str) -> list[dict]:
    dec = bfs_decompose(g, center)
    return [{"radius": r, "sphere": dec.sphere_size(r), "ball": dec.ball_size(r)} for r in range(dec.eccentricity + 1)]


def _bound_rows(dec, eps: float, growth_eps: float | None = None) -> list[dict]:
    rows = []
    for r in range(dec.eccentricity + 1):
        s, b = dec.sphere_size(r), dec.ball_size(r)
        row = {
            "radius": r, "sphere": s, "ball": b,
            "small_sphere": sphere_bound_holds(s, r, eps) if r >= 2 else None,
            "small_ball": ball_bound_holds(b, r, eps) if r >= 2 else None,
        }
        if growth_eps is not None:
            row["ball_below_power"] = b <= r ** (1.0 + growth_eps) if r >= 1 else None
        rows.append(row)
    return rows


def cmd_analyze(args) -> int:
    g = _load(args.file, args.root)
    report: dict = {"vertices": g.n, "edges": len(g.edges), "connected": g.is_connected(), "root": g.root}
    if g.root is not None:
        dec = bfs_decompose(g, g.root)
        report["sphere_profile"] = _sphere_profile(g, g.root)
        report["small_sphere_radii"] = [r for r in range(2, dec.eccentricity + 1) if sphere_bound_holds(dec.sphere_size(r), r, args.eps)]
        report["small_ball_radii"] = [r for r in range(2, dec.eccentricity + 1) if ball_bound_holds(dec.ball_size(r), r, args.eps)]
    summary = autgroup.enumerate_automorphisms(g, cap=args.cap)
    group = summary.to_json()
    if not summary.exact:
        group["order"] = autgroup.group_order(g)
        group["exact"] = True
        group["note"] = f"more than {args.cap} elements; order from the stabilizer chain, motion and cycle norm not computed"
    report["group"] = group
    if summary.exact:
        verdict = motion.check_motion_bound(summary, 2)
        report["motion_bound"] = {"holds": verdict.motion_holds, "margin": verdict.motion_margin}
        report["cycle_norm_bound"] = {"holds": verdict.cycle_norm_holds, "margin": verdict.cycle_norm_margin, "labels": 2}
        report["expected_preserving_automorphisms"] = motion.expected_survivors(summary, 2).to_json()
    _emit(report, args.out)
    return EXIT_OK


def _k_for(args) -> int:
    return args.k if args.k is not None else breaking.min_admissible_k(args.eps)


def cmd_color(args) -> int:
    g = _load(args.file, args.root)
    method = args.method
    report: dict
    if method == "fixroot":
        k = _k_for(args)
        col = breaking.fixroot_pattern(g, k)
        verdict = breaking.verify_root_signature(g, col, k)
        report = {"method": method, "k": k, "root_signature": verdict.to_json()}
    elif method == "break":
        k = _k_for(args)
        col = breaking.fixroot_pattern(g, k)
        m = args.m if args.m is not None else k + 3
        col, rep = breaking.break_ball_actors(g, k, m, args.eps, col, cap=args.cap)
        report = {"method": method, "k": k, **rep.to_json()}
    elif method == "pipeline":
        k = _k_for(args)
        col, rep = breaking.full_pipeline(g, k, args.eps, cap=args.cap)
        report = {"method": method, "k": k, **rep.to_json()}
    elif method == "greedy":
        summary = autgroup.enumerate_automorphisms(g, cap=args.cap)
        if not summary.exact:
            raise GuardExceeded(f"more than {args.cap} automorphisms")
        col, rep = breaking.greedy_half_break(g, summary.nontrivial(), g.vertices)
        report = {"method": method, **rep.to_json()}
    elif method == "pairs":
        summary = autgroup.enumerate_automorphisms(g, cap=args.cap)
        if not summary.exact:
            raise GuardExceeded(f"more than {args.cap} automorphisms")
        col, rep = breaking.sequential_pair_break(g, summary)
        report = {"method": method, **rep.to_json()}
    else:  # random
        res = motion.find_distinguishing_coloring(g, None, args.d, args.budget, args.seed)
        report = {"method": method, **res.to_json()}
        col = breaking.Coloring(res.coloring or {})
    if args.out:
        io.write_json(args.out, col.to_json())
    report["coloring"] = args.out if args.out else col.to_json()
    _write_dot(args.dot, g, col.labels)
    _emit(report)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.graph)
    col = io.coloring_from_json(io.read_json(args.coloring))
    if not col.is_total(g):
        raise UsageError("coloring does not label every vertex")
    verdict = distnum.is_distinguishing(g, col.labels)
    _emit(verdict.to_json())
    _write_dot(args.dot, g, col.labels)
    return EXIT_OK if verdict.distinguishing else EXIT_NOT_DISTINGUISHING


def cmd_distnum(args) -> int:
    g = _load(args.file)
    res = distnum.distinguishing_number(g, args.max_d, reduce=not args.no_reduce, guard=args.guard)
    _emit(res.to_json())
    if res.exceeded:
        return EXIT_GUARD
    return EXIT_OK


def cmd_growth(args) -> int:
    if args.family:
        fam = generators.parse_family(args.family)
        g = generators.truncate(fam, args.limit)
        center = fam.root
        label = fam.describe()
    elif args.file:
        g = _load(args.file, args.root)
        if g.root is None:
            raise UsageError("graph has no root; pass --root")
        center = g.root
        label = args.file
    else:
        raise UsageError("growth needs FILE or --family")
    dec = bfs_decompose(g, center)
    if args.limit > dec.eccentricity:
        raise UsageError(f"limit {args.limit} exceeds eccentricity {dec.eccentricity}")
    rows = _bound_rows(dec, args.eps, args.eps)[: args.limit + 1]
    _emit({"source": label, "eps": args.eps, "rows": rows})
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symbreak", description="Distinguishing colorings of rooted graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="truncate an infinite family to a ball")
    s.add_argument("--family", required=True, help="path | grid | tree:D | stretched:EPS")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--out", help="graph JSON file; a FILE.plan.json sidecar is written next to it")
    s.add_argument("--dot", help="also write DOT to this file")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("analyze", help="group, motion, cycle norm and bound verdicts")
    s.add_argument("file")
    s.add_argument("--root")
    s.add_argument("--cap", type=int, default=autgroup.DEFAULT_CAP)
    s.add_argument("--eps", type=float, default=1.0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("color", help="build a coloring")
    s.add_argument("file")
    s.add_argument("--method", required=True, choices=["fixroot", "break", "pipeline", "greedy", "pairs", "random"])
    s.add_argument("--root")
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int, help="inner radius for --method break (default k+3)")
    s.add_argument("--eps", type=float, default=1.0)
    s.add_argument("--d", type=int, default=2, help="labels for --method random")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=10_000)
    s.add_argument("--cap", type=int, default=autgroup.DEFAULT_CAP)
    s.add_argument("--out")
    s.add_argument("--dot")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="exit 0 iff the coloring is distinguishing")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--dot")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser(
        "distnum", help="exact distinguishing number",
        description=f"Exhaustive search; a level with more than {distnum.GUARD} labelings exits with code 3.",
    )
    s.add_argument("file")
    s.add_argument("--max-d", type=int, required=True)
    s.add_argument("--no-reduce", action="store_true", help="do not pin the first vertex to label 0")
    s.add_argument("--guard", type=int, default=distnum.GUARD)
    s.set_defaults(func=cmd_distnum)

    s = sub.add_parser("growth", help="per-radius ball and sphere sizes with bound flags")
    s.add_argument("file", nargs="?")
    s.add_argument("--family")
    s.add_argument("--root")
    s.add_argument("--limit", type=int, required=True)
    s.add_argument("--eps", type=float, default=1.0)
    s.set_defaults(func=cmd_growth)
    return p


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except GuardExceeded as exc:
        return _fail(EXIT_GUARD, "guard", str(exc))
    except OverflowError as exc:
        return _fail(EXIT_GUARD, "guard", str(exc))
    except (io.FormatError, ValueError, KeyError, OSError) as exc:
        return _fail(EXIT_USAGE, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
