"""crossfam command line: gen | construct | solve | verify | scan | render.

JSON on stdin/stdout (or files; "-" means the standard stream).  Exit
codes: 0 success, 1 verification or bound failure, 2 bad input, 3 a
construction search failed internally.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import Optional, Tuple

from . import construct as C
from .gen import MODES, generate
from .geom import GeomError, PointSet
from .otdb import ORDER_TYPE_DB_ENV, OrderTypeError, find_db
from .partitions import SearchError
from .render import render_svg
from .scan import scan_order_types
from .serialize import (
    FormatError,
    dump_json,
    family_from_dict,
    family_to_dict,
    load_json,
    pointset_from_dict,
    pointset_to_dict,
)
from .solve import max_convex_subset, max_crossing_family, \
    max_intersecting_family
from .verify import verify_family

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_SEARCH = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise FormatError(f"cannot write {path}: {e}") from e


def _write_json(path: str, obj) -> None:
    if path == "-":
        dump_json(obj, sys.stdout)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            dump_json(obj, fh)
    except OSError as e:
        raise FormatError(f"cannot write {path}: {e}") from e


def _load_points(path: str) -> PointSet:
    return pointset_from_dict(load_json(_read_text(path)))


def parse_pattern(name: str, t: Optional[int]
                  ) -> Tuple[str, Optional[int]]:
    """Accept P3, K2, K3, K4, Kt, K1t, and spellings like K1,3 or K5."""
    s = name.strip()
    if s.lower() == "convex":
        return "convex", None
    su = s.upper().replace(" ", "")
    if su in ("P3", "K2", "K3", "K4"):
        if t is not None:
            raise FormatError(f"pattern {s} takes no --t")
        return su, None
    m = re.fullmatch(r"K1[,_](\d+)", su)
    if m:
        t_in = int(m.group(1))
        if t is not None and t != t_in:
            raise FormatError(f"--t {t} conflicts with pattern {s}")
        return "K1t", t_in
    if su == "K1T":
        if t is None:
            raise FormatError("pattern K1t needs --t")
        return "K1t", t
    if su == "KT":
        if t is None:
            raise FormatError("pattern Kt needs --t")
        return "Kt", t
    if re.fullmatch(r"K1\d+", su):
        raise FormatError(
            f"{s} is ambiguous: write K1,{su[2:]} for the star or "
            f"Kt --t {su[1:]} for the clique")
    m = re.fullmatch(r"K(\d+)", su)
    if m:
        tv = int(m.group(1))
        if t is not None and t != tv:
            raise FormatError(f"--t {t} conflicts with pattern {s}")
        if tv < 5:
            raise FormatError(f"use the named pattern for {s}")
        return "Kt", tv
    raise FormatError(f"unknown pattern {name!r}")


# ---------------------------------------------------------------- commands

def cmd_gen(args) -> int:
    ps = generate(args.n, seed=args.seed, mode=args.mode,
                  colored=args.colored)
    _write_json(args.output, pointset_to_dict(ps))
    return EXIT_OK


def _construct_family(ps: PointSet, pattern: str, kind: str,
                      t: Optional[int], bipartite: bool):
    if bipartite:
        R, B = ps.of_color("r"), ps.of_color("b")
        if not len(R) or not len(B):
            raise GeomError("--bipartite needs a two-colored point set")
        if (pattern, kind) == ("P3", "crossing"):
            return C.p3_crossing_family_bipartite(R, B)
        if (pattern, kind) == ("P3", "intersecting"):
            return C.p3_intersecting_family_bipartite(R, B)
        raise GeomError(f"no two-colored constructor for {pattern} {kind}")
    table = {
        ("P3", "crossing"): lambda: C.p3_crossing_family(ps),
        ("K1t", "crossing"): lambda: C.k1t_crossing_family(ps, t),
        ("K4", "crossing"): lambda: C.k4_crossing_family(ps),
        ("Kt", "crossing"): lambda: C.kt_crossing_family(ps, t),
        ("P3", "intersecting"): lambda: C.p3_intersecting_family(ps),
        ("K3", "intersecting"): lambda: C.k3_intersecting_family(ps),
        ("K1t", "intersecting"): lambda: C.k1t_intersecting_family(ps, t),
    }
    key = (pattern, kind)
    if key not in table:
        raise GeomError(f"no constructor for {pattern} {kind}")
    return table[key]()


def cmd_construct(args) -> int:
    pattern, t = parse_pattern(args.pattern, args.t)
    if pattern in ("convex", "K2"):
        raise FormatError(f"no constructor for pattern {args.pattern}")
    ps = _load_points(args.input)
    fam = _construct_family(ps, pattern, args.kind, t, args.bipartite)
    res = verify_family(ps, fam)
    status = "ok" if res.ok else "FAILED"
    print(f"{fam.pattern} {fam.kind}: n={len(ps)} size={fam.size} "
          f"claimed_bound={fam.claimed_bound} verified={status}",
          file=sys.stderr)
    if not res.ok:
        for v in res.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_VERIFY
    _write_json(args.output, family_to_dict(fam))
    return EXIT_OK


def cmd_solve(args) -> int:
    pattern, t = parse_pattern(args.pattern, args.t)
    ps = _load_points(args.input)
    if pattern == "convex":
        res = max_convex_subset(ps)
        _write_json(args.output, {
            "pattern": "convex", "n": len(ps), "max_size": res.size,
            "ids": list(res.ids),
        })
        return EXIT_OK
    fn = (max_crossing_family if args.kind == "crossing"
          else max_intersecting_family)
    res = fn(ps, pattern, t=t, limit=args.limit, naive=args.naive)
    _write_json(args.output, {
        "pattern": res.pattern, "kind": res.kind, "t": res.t,
        "n": len(ps), "max_size": res.max_size, "exact": res.exact,
        "explored": res.explored,
        "witness": family_to_dict(res.witness),
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    ps = _load_points(args.input)
    fam = family_from_dict(load_json(_read_text(args.family)))
    res = verify_family(ps, fam)
    if res.ok:
        print(f"ok: {fam.pattern} {fam.kind} family of size {fam.size}, "
              f"claimed bound {fam.claimed_bound}")
        return EXIT_OK
    for v in res.violations:
        print(v, file=sys.stderr)
    return EXIT_VERIFY


def cmd_scan(args) -> int:
    pattern, _ = parse_pattern(args.pattern, None)
    directory = args.db_dir or os.environ.get(ORDER_TYPE_DB_ENV)
    if not directory:
        raise FormatError(
            f"no database directory: pass --db-dir or set "
            f"{ORDER_TYPE_DB_ENV}")
    db = find_db(args.n, directory=directory)
    if db is None:
        raise FormatError(
            f"no point-set database for n={args.n} under {directory}")

    def progress(done, total):
        print(f"scanned {done}/{total}", file=sys.stderr)

    report = scan_order_types(db, pattern, args.kind, args.k,
                              jobs=args.jobs,
                              exact_histogram=args.exact_histogram,
                              progress=progress)
    print(f"violators: {len(report.violators)}", file=sys.stderr)
    _write_json(args.output, report.to_json_dict())
    return EXIT_OK


def cmd_render(args) -> int:
    ps = _load_points(args.input)
    fam = None
    if args.family:
        fam = family_from_dict(load_json(_read_text(args.family)))
    _write_text(args.output, render_svg(ps, fam))
    return EXIT_OK


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crossfam",
        description="Crossing and intersecting families of plane "
                    "subgraphs: generate, construct, solve, verify, "
                    "scan, render.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a random general-position set")
    g.add_argument("n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--mode", choices=MODES, default="uniform")
    g.add_argument("--colored", action="store_true",
                   help="two equal color classes, split left/right")
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(fn=cmd_gen)

    c = sub.add_parser("construct", help="build a verified family")
    c.add_argument("pattern", help="P3, K1,3, K1t, K4, Kt, K3, ...")
    c.add_argument("--kind", choices=("crossing", "intersecting"),
                   default="crossing")
    c.add_argument("--t", type=int, default=None)
    c.add_argument("--bipartite", action="store_true",
                   help="use the two-colored pipeline on r/b input")
    c.add_argument("-i", "--input", default="-")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(fn=cmd_construct)

    s = sub.add_parser("solve", help="exhaustive maximum family")
    s.add_argument("pattern", help="K2, P3, K3, K4, Kt, K1t, convex")
    s.add_argument("--kind", choices=("crossing", "intersecting"),
                   default="crossing")
    s.add_argument("--t", type=int, default=None)
    s.add_argument("--limit", type=int, default=None,
                   help="stop once a family of this size is found")
    s.add_argument("--naive", action="store_true",
                   help="use the unoptimized enumerator")
    s.add_argument("-i", "--input", default="-")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(fn=cmd_solve)

    v = sub.add_parser("verify", help="check a family against its points")
    v.add_argument("-i", "--input", default="-",
                   help="point set JSON")
    v.add_argument("--family", required=True, help="family JSON path")
    v.set_defaults(fn=cmd_verify)

    sc = sub.add_parser("scan", help="scan an order-type database")
    sc.add_argument("pattern", help="K2, P3, K3, ... or convex")
    sc.add_argument("--kind", choices=("crossing", "intersecting"),
                    default="crossing")
    sc.add_argument("-k", type=int, required=True,
                    help="report records whose maximum is below k")
    sc.add_argument("--n", type=int, default=9)
    sc.add_argument("--db-dir", default=None)
    sc.add_argument("--jobs", type=int, default=1)
    sc.add_argument("--exact-histogram", action="store_true")
    sc.add_argument("-o", "--output", default="-")
    sc.set_defaults(fn=cmd_scan)

    r = sub.add_parser("render", help="draw points and a family as SVG")
    r.add_argument("-i", "--input", default="-")
    r.add_argument("--family", default=None)
    r.add_argument("-o", "--output", default="-")
    r.set_defaults(fn=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, OrderTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except GeomError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SearchError as e:
        print(f"search failed: {e}", file=sys.stderr)
        return EXIT_SEARCH


if __name__ == "__main__":
    sys.exit(main())
