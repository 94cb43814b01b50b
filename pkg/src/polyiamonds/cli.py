"""Command line entry point: ``polyiamonds <command> ...``.

Every command prints a tab-separated table with a header row, or a JSON
document with ``--format json``.  Exit status: 0 ok, 1 a verification
failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, io_render, spiral
from .enumeration import CapExceeded, NotFoundWithinCap, enumerate_stats, g_min_tiles
from .polyiamond import PolyiamondError, dual_graph_is_tree, holes, interior_edges, perimeter

OK, FAILED, USAGE = 0, 1, 2


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ",".join(_cell(x) for x in v)
    return str(v)


def _emit(rows: list[dict], fmt: str, extra: dict | None = None) -> None:
    if fmt == "json":
        doc = {"rows": rows}
        if extra:
            doc.update(extra)
        print(json.dumps(doc, sort_keys=True, default=str))
        return
    if not rows:
        return
    header = list(rows[0])
    print("\t".join(header))
    for row in rows:
        print("\t".join(_cell(row.get(h)) for h in header))


def _cmd_pmin(args) -> int:
    rows = []
    prev = None
    for n in range(1, args.n + 1):
        p = bounds.p_min(n)
        rows.append({"n": n, "p_min": p, "increment": None if prev is None else p - prev})
        prev = p
    ok = args.n < 2 or bounds.verify_pmin_increments(args.n)
    _emit(rows, args.format, {"increments_ok": ok})
    if args.format != "json":
        print(f"# unit increments and drop bounds up to {args.n}: {_cell(ok)}", file=sys.stderr)
    return OK if ok else FAILED


def _cmd_bound(args) -> int:
    _emit([bounds.m_bound(args.tiles, args.holes).as_row()], args.format)
    return OK


def _cmd_gbound(args) -> int:
    _emit([{"h": args.h, "g_lower_bound": bounds.g_lower_bound(args.h)}], args.format)
    return OK


_SHAPE_FORMATS = {".svg": "svg", ".txt": "text", ".json": "json"}


def _render(A, fmt: str, k: int) -> str:
    if fmt == "svg":
        return io_render.to_svg(A)
    if fmt == "text":
        return io_render.to_text_art(A)
    return io_render.to_json(A, name=f"Spir_{k}", k=k, provenance="spiral construction") + "\n"


def _cmd_spiral(args) -> int:
    A = spiral.spir(args.k)
    row = {"k": args.k, "tiles": A.n, "holes": holes(A).count}
    status = OK
    if args.certify:
        cert = spiral.certify(args.k, A)
        row.update(cert.as_row())
        status = OK if cert.passes else FAILED
    if args.out:
        shape_fmt = _SHAPE_FORMATS.get(Path(args.out).suffix.lower(), "json")
        if args.format in ("svg", "text"):
            shape_fmt = args.format
        Path(args.out).write_text(_render(A, shape_fmt, args.k))
        row["out"] = args.out
    if args.format in ("svg", "text") and not args.out:
        sys.stdout.write(_render(A, args.format, args.k))
    elif args.format == "json":
        _emit([row], "json", None if args.out else
              {"document": json.loads(_render(A, "json", args.k))})
    else:
        _emit([row], "table")
    return status


def _cmd_enumerate(args) -> int:
    start = args.start if args.start is not None else args.n
    rows = []
    status = OK
    for n in range(start, args.n + 1):
        st = enumerate_stats(n, free=args.free, jobs=args.jobs, cap=args.cap)
        row = st.as_row()
        if not args.free:
            del row["free"]
        if args.holes:
            row["hole_histogram"] = list(st.hole_histogram[: st.max_holes + 1])
        rows.append(row)
        if st.bound_violations or st.min_perimeter != bounds.p_min(n):
            status = FAILED
    _emit(rows, args.format)
    return status


def _cmd_search_g(args) -> int:
    res = g_min_tiles(args.h, n_cap=args.cap, jobs=args.jobs)
    out = args.out or f"g{args.h}_witness.json"
    Path(out).write_text(io_render.to_json(
        res.witness, name=f"g_witness_h{args.h}", provenance="pruned exhaustive search") + "\n")
    row = res.as_row()
    row["witness"] = out
    _emit([row], args.format)
    return OK


def _cmd_validate(args) -> int:
    try:
        A, meta = io_render.read_document(Path(args.file).read_text())
    except (io_render.MalformedDocument, PolyiamondError) as exc:
        print(f"invalid document: {exc}", file=sys.stderr)
        return FAILED
    s = holes(A)
    p, b = perimeter(A), interior_edges(A)
    rep = bounds.m_bound(A.n, s.count)
    row = {
        "name": meta.get("name"),
        "n": A.n,
        "perimeter": p,
        "interior_edges": b,
        "holes": s.count,
        "hole_areas": sorted(s.areas),
        "hole_perimeter": s.hole_perimeter,
        "outer_perimeter": s.outer_perimeter,
        "dual_tree": dual_graph_is_tree(A),
        "p_min": bounds.p_min(A.n),
        "M": str(rep.m_value),
        "bound_ok": rep.feasible,
        "identities_ok": 3 * A.n == p + 2 * b and p == s.outer_perimeter + s.hole_perimeter,
    }
    _emit([row], args.format)
    return OK if row["bound_ok"] and row["identities_ok"] else FAILED


def _cmd_verify(args) -> int:
    from . import verify

    def report(res):
        if args.format != "json":
            print(res.line(), flush=True)

    results = verify.run_all(kmax=args.kmax, ncap=args.ncap, jobs=args.jobs, report=report)
    if args.format == "json":
        _emit([{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results], "json")
    return OK if all(r.passed for r in results) else FAILED


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyiamonds", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_, formats=("table", "json")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=formats, default="table")
        p.set_defaults(func=func)
        return p

    p = add("pmin", _cmd_pmin, "table of p_min(1..N) with increments")
    p.add_argument("n", type=_positive)

    p = add("bound", _cmd_bound, "evaluate M(n, h) exactly")
    p.add_argument("--tiles", type=_positive, required=True)
    p.add_argument("--holes", type=int, required=True)

    p = add("gbound", _cmd_gbound, "least n allowed by M for h holes")
    p.add_argument("h", type=_positive)

    p = add("spiral", _cmd_spiral, "build Spir_k", formats=("table", "json", "svg", "text"))
    p.add_argument("k", type=int)
    p.add_argument("--out")
    p.add_argument("--certify", action="store_true")

    p = add("enumerate", _cmd_enumerate, "exhaustive statistics for n tiles")
    p.add_argument("n", type=_positive)
    p.add_argument("--from", dest="start", type=_positive, help="first n of the table")
    p.add_argument("--free", action="store_true")
    p.add_argument("--holes", action="store_true", help="add the hole-count histogram")
    p.add_argument("--jobs", type=_positive)
    p.add_argument("--cap", type=_positive, default=16)

    p = add("search-g", _cmd_search_g, "fewest tiles for h holes, with witness")
    p.add_argument("h", type=_positive)
    p.add_argument("--cap", type=_positive, default=24)
    p.add_argument("--jobs", type=_positive)
    p.add_argument("--out", help="witness file (default g<H>_witness.json)")

    p = add("validate", _cmd_validate, "property report for a shape document")
    p.add_argument("file")

    p = add("verify-paper", _cmd_verify, "run every reproduction check")
    p.add_argument("--kmax", type=_positive, default=50)
    p.add_argument("--ncap", type=_positive, default=12)
    p.add_argument("--jobs", type=_positive, default=1)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except NotFoundWithinCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
