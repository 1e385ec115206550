"""Command-line entry point: ``oddflip <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 computation error (search cap,
budget, disconnected flip graph), 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import search
from .connectivity import edge_report, is_flip_connected
from .errors import BudgetExceeded, FormatError, OddFlipError, SearchError
from .graph import Graph, parse_graph
from .matching import FlipSequence, OddMatching, parse_matching, parse_steps
from .reductions import io as rio
from .reductions.diameter import build_diameter_instance, build_witness_pair
from .reductions.formula import parse_formula, parse_setcover
from .reductions.params import CLOSED_FORM, SAFE_MINIMAL, ReductionParams
from .reductions.radius import build_radius_instance, build_radius_witnesses
from .reductions.setcover import build_setcover_instance, from_parts, recover_cover
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _fmt_matching(m: OddMatching) -> str:
    return " ".join([f"matching {m.isolated + 1}"] + [f"{u + 1}-{v + 1}" for u, v in m.edges])


def _bits(text: Optional[str], count: int, name: str) -> tuple[int, ...]:
    if text is None:
        return (1,) * count
    if len(text) != count or set(text) - {"0", "1"}:
        raise UsageError(f"--{name} needs {count} binary digits, got {text!r}")
    return tuple(int(c) for c in text)


def _params(args) -> ReductionParams:
    if args.mode == CLOSED_FORM and args.c is None:
        raise UsageError("--mode paper needs --c")
    return ReductionParams(
        mode=args.mode, c_constant=args.c,
        ell_override=getattr(args, "ell", None),
        L_override=getattr(args, "L", None),
        path_len_override=getattr(args, "path_len", None))


# --- subcommands --------------------------------------------------------------

def cmd_distance(args, out) -> int:
    g = _graph(args.graph)
    a = parse_matching(_read(args.m1), g)
    b = parse_matching(_read(args.m2), g)
    try:
        rep = search.flip_distance(g, a, b, budget=args.budget, cap=args.cap)
    except BudgetExceeded as exc:
        out.write(f"distance >{exc.budget}\n")
        return EXIT_COMPUTE
    out.write(rep.to_text())
    return EXIT_OK if rep.reachable else EXIT_COMPUTE


def cmd_diameter(args, out) -> int:
    out.write(f"diameter {search.diameter(_graph(args.graph), args.jobs, args.cap)}\n")
    return EXIT_OK


def cmd_radius(args, out) -> int:
    r, _ = search.radius_center(_graph(args.graph), args.jobs, args.cap)
    out.write(f"radius {r}\n")
    return EXIT_OK


def cmd_center(args, out) -> int:
    r, centers = search.radius_center(_graph(args.graph), args.jobs, args.cap)
    out.write(f"radius {r}\ncenters {len(centers)}\n")
    out.writelines(_fmt_matching(m) + "\n" for m in centers)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    states = search.enumerate_odd_matchings(_graph(args.graph), args.cap)
    out.write(f"count {len(states)}\n")
    out.writelines(_fmt_matching(m) + "\n" for m in states)
    return EXIT_OK


def cmd_connected(args, out) -> int:
    g = _graph(args.graph)
    for v in edge_report(g):
        u, w = v.edge
        pu, pw = ("yes" if x else "no" for x in v.perfect_without)
        out.write(f"edge {u + 1} {w + 1} {v.cls.value} pm_without_u={pu} "
                  f"pm_without_v={pw} {'ok' if v.ok else 'violation'}\n")
    ok, bad = is_flip_connected(g)
    out.write(f"connected {'yes' if ok else 'no'}\n")
    if bad is not None:
        out.write(f"violating {bad[0] + 1} {bad[1] + 1}\n")
    return EXIT_OK


def _common_meta(params: ReductionParams, g: Graph) -> dict:
    return {"mode": params.mode,
            "c_constant": params.c_constant if params.c_constant else "none",
            "vertices": g.n, "edges": g.m}


def cmd_reduce(args, out) -> int:
    params = _params(args)
    if args.kind == "diameter":
        phi = parse_formula(_read(args.input))
        inst = build_diameter_instance(phi, params)
        x = _bits(args.x, inst.m1, "x")
        a, b = build_witness_pair(inst, x)
        meta = _common_meta(params, inst.graph) | {
            "kind": "diameter", "threshold": inst.threshold, "ell": inst.ell,
            "m1": inst.m1, "m2": inst.m2, "K": phi.K, "s": inst.s,
            "core_diameter": inst.core_diameter if inst.core_diameter is not None else "none",
            "x": "".join(map(str, x)), "v": inst.v + 1, "w": inst.w + 1,
            "formula_digest": phi.digest()}
        roles = inst.roles
        g = inst.graph
    elif args.kind == "radius":
        psi = parse_formula(_read(args.input))
        inst = build_radius_instance(psi, params)
        m1, m2, m3 = inst.sizes
        x = _bits(args.x, m1, "x")
        y = _bits(args.y, m2, "y")
        a, b = build_radius_witnesses(inst, x, y)
        meta = _common_meta(params, inst.graph) | {
            "kind": "radius", "threshold": inst.threshold, "ell": inst.ell, "L": inst.L,
            "m1": m1, "m2": m2, "m3": m3, "K": psi.K, "s": inst.s,
            "core_diameter": inst.core_diameter if inst.core_diameter is not None else "none",
            "tail_diameter": inst.tail_diameter if inst.tail_diameter is not None else "none",
            "x": "".join(map(str, x)), "y": "".join(map(str, y)), "v": inst.v + 1,
            "formula_digest": psi.digest()}
        roles = inst.roles
        g = inst.graph
    else:
        sc = parse_setcover(_read(args.input))
        red = build_setcover_instance(sc, params)
        a, b, g, roles = red.m_in, red.m_tar, red.graph, red.roles
        meta = _common_meta(params, g) | {
            "kind": "setcover", "n": sc.n, "t": sc.t, "path_len": red.path_len,
            "u": red.u + 1, "instance_digest": sc.digest()}
    rio.write_reduction_dir(args.out, rio.ReductionFiles(g, a, b, roles, meta))
    out.write(rio.serialize_meta(meta))
    return EXIT_OK


def cmd_recover(args, out) -> int:
    files = rio.load_reduction_dir(args.dir)
    if files.meta.get("kind") != "setcover":
        raise UsageError("recover needs a set-cover reduction directory")
    red = from_parts(files.graph, files.roles, files.m_in, files.m_tar)
    steps = parse_steps(_read(args.sequence))
    cover, bound = recover_cover(red, FlipSequence(red.m_in, tuple(steps)))
    out.write(f"cover {' '.join(map(str, sorted(cover)))}\n")
    out.write(f"size {len(cover)}\nsize_bound {bound}\nlength {len(steps)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    reports = run_suite(args.suite, seed=args.seed, budget=args.budget, jobs=args.jobs)
    out.writelines(r.line() + "\n" for r in reports)
    failed = sum(r.status == "FAIL" for r in reports)
    out.write(f"SUMMARY checks={len(reports)} failed={failed}\n")
    return EXIT_FAIL if failed else EXIT_OK


# --- parser -------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if val < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return val


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oddflip", description="Flip graphs of odd matchings.")
    p.add_argument("--cap", type=_positive, default=None,
                   help="expanded-state cap (default: ODDFLIP_CAP or 50000000)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("distance", help="exact flip distance with a witness")
    d.add_argument("graph")
    d.add_argument("m1")
    d.add_argument("m2")
    d.add_argument("--budget", type=_positive)
    d.set_defaults(func=cmd_distance)

    for name, func, text in (("diameter", cmd_diameter, "flip-graph diameter"),
                             ("radius", cmd_radius, "flip-graph radius"),
                             ("center", cmd_center, "radius and all center matchings")):
        s = sub.add_parser(name, help=text)
        s.add_argument("graph")
        s.add_argument("--jobs", type=_positive, default=1)
        s.set_defaults(func=func)

    s = sub.add_parser("enumerate", help="list all odd matchings")
    s.add_argument("graph")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("connected", help="polynomial flip-graph connectivity test")
    s.add_argument("graph")
    s.set_defaults(func=cmd_connected)

    r = sub.add_parser("reduce", help="generate a reduction instance directory")
    r.add_argument("kind", choices=("diameter", "radius", "setcover"))
    r.add_argument("input")
    r.add_argument("-o", "--out", required=True, help="output directory")
    r.add_argument("--mode", choices=(SAFE_MINIMAL, CLOSED_FORM), default=SAFE_MINIMAL)
    r.add_argument("--c", type=_positive, help="linear-diameter constant for --mode paper")
    r.add_argument("--ell", type=_positive, help="override the short forcing path length")
    r.add_argument("--L", type=_positive, help="override the long forcing path length")
    r.add_argument("--path-len", dest="path_len", type=_positive,
                   help="set-cover path length (even)")
    r.add_argument("--x", help="bits for the first quantifier block (default all ones)")
    r.add_argument("--y", help="bits for the universal block of radius instances")
    r.set_defaults(func=cmd_reduce)

    s = sub.add_parser("recover", help="set cover from a flip sequence")
    s.add_argument("dir")
    s.add_argument("sequence")
    s.set_defaults(func=cmd_recover)

    v = sub.add_parser("verify", help="run cross-checks against exact search")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--seed", type=_positive, default=0)
    v.add_argument("--budget", type=_positive,
                   help="state budget for full diameter/radius checks (skipped if unset)")
    v.add_argument("--jobs", type=_positive, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"oddflip: usage error: {exc}\n")
        return EXIT_USAGE
    except SearchError as exc:
        err.write(f"oddflip: {exc}\n")
        return EXIT_COMPUTE
    except (FormatError, OddFlipError, ValueError) as exc:
        err.write(f"oddflip: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
