"""Command-line interface: ``qschur expand | rect | tableaux | scan``.

Exit codes: 0 success, 1 scan failure or internal error, 2 usage error,
3 non-symmetric shape for a Schur basis, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InvalidInput, NotComparable, NotSymmetric, ResourceLimit, ShapeMismatch, SizeMismatch
from .functions import skew_qschur_M
from .lr import (enumerate_lr_left, enumerate_lr_right_filtered, qs_expansion,
                 schur_expansion_left, schur_expansion_right)
from .rectify import rect_rc_chain, rect_rt_chain
from .shapes import (SkewShape, format_composition, is_uniform, parse_composition, partitions)
from .tableaux import (Tableau, enumerate_srct, enumerate_srt, enumerate_ssrct, enumerate_ssrt,
                       render, tableau_from_json, tableau_to_json)
from .verify import CHECKS, DEFAULT_LIMIT, GOLDEN_SHAPES, default_jobs, run_scan

EXIT_FAIL, EXIT_USAGE, EXIT_NOT_SYMMETRIC, EXIT_RESOURCE = 1, 2, 3, 4


class UsageError(Exception):
    pass


def parse_rows(text: str) -> list[list[int | None]]:
    """``"3,2/.,.,.,6/.,1"`` -> rows, ``.`` marking inner cells."""
    rows = []
    for chunk in text.strip().split("/"):
        row = []
        for item in chunk.split(","):
            item = item.strip()
            if item == ".":
                row.append(None)
            else:
                try:
                    row.append(int(item))
                except ValueError:
                    raise UsageError(f"bad tableau entry {item!r}") from None
        rows.append(row)
    return rows


def _shape(args, kind: str = "composition") -> SkewShape:
    try:
        outer = parse_composition(args.outer)
        inner = parse_composition(args.inner)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        return SkewShape(outer, inner, kind)
    except NotComparable as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_expand(args) -> int:
    s = _shape(args)
    if args.basis == "qs":
        e = qs_expansion(s)
        _emit(args, str(e), e.to_json())
        return 0
    if args.basis == "M":
        v = skew_qschur_M(s)
        text = " + ".join((f"{c}·" if c != 1 else "") + f"M[{','.join(map(str, k))}]"
                          for k, c in v.coeffs.items()) or "0"
        _emit(args, text, v.to_json())
        return 0
    expand = schur_expansion_left if args.basis == "schur-left" else schur_expansion_right
    try:
        e = expand(s, force=args.force)
    except NotSymmetric:
        print(f"error: {s} is not uniform (upper row lengths "
              f"{format_composition(s.outer[:s.upper_rows])} differ), so its skew "
              "quasisymmetric Schur function is not symmetric; use --force for raw "
              "filling counts", file=sys.stderr)
        return EXIT_NOT_SYMMETRIC
    text = str(e)
    if args.force and not is_uniform(s):
        text = "[forced: raw filling counts, not a Schur expansion] " + text
    _emit(args, text, e.to_json())
    return 0


def _read_tableau(args) -> Tableau:
    kind = "composition" if args.kind == "srct" else "partition"
    if args.json:
        with open(args.json, encoding="utf-8") as fh:
            t = tableau_from_json(json.load(fh))
    elif args.rows:
        t = Tableau.from_rows(parse_rows(args.rows), kind)
    else:
        raise UsageError("give the filling with --rows or --json")
    return t


def cmd_rect(args) -> int:
    try:
        t = _read_tableau(args)
        chain = rect_rc_chain(t) if t.shape.kind == "composition" else rect_rt_chain(t)
    except InvalidInput as exc:
        print(f"error: invalid filling: {exc.reason or exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ShapeMismatch, NotComparable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    shown = chain if args.trace else chain[-1:]
    text = "\n->\n".join(render(x) for x in shown)
    payload = [tableau_to_json(x) for x in shown] if args.trace else tableau_to_json(chain[-1])
    _emit(args, text, payload)
    return 0


def cmd_tableaux(args) -> int:
    kind = args.kind
    shape = _shape(args, "partition" if kind in ("ssrt", "srt", "lrrt-left", "lrrt-right") else "composition")
    groups: list[tuple[str | None, list[Tableau]]] = []
    try:
        if kind in ("srct", "srt"):
            groups.append((None, (enumerate_srct if kind == "srct" else enumerate_srt)(shape, args.limit)))
        elif kind in ("ssrct", "ssrt"):
            if not args.content:
                raise UsageError(f"--kind {kind} needs --content")
            counts = parse_composition(args.content) if args.content != "-" else ()
            enum = enumerate_ssrct if kind == "ssrct" else enumerate_ssrt
            groups.append((None, enum(shape, counts, args.limit)))
        else:
            enum = enumerate_lr_left if kind.endswith("left") else enumerate_lr_right_filtered
            nus = [parse_composition(args.nu)] if args.nu else list(partitions(shape.size))
            for nu in nus:
                found = enum(shape, nu)
                if found or args.nu:
                    groups.append((format_composition(nu), found))
    except (SizeMismatch, ValueError) as exc:
        raise UsageError(str(exc)) from None
    total = sum(len(g) for _, g in groups)
    lines = [f"# {total} tableaux of kind {kind} on shape {shape}"]
    for nu, ts in groups:
        for t in ts:
            lines.append("")
            if nu is not None:
                lines.append(f"# nu = {nu}")
            lines.append(render(t))
    payload = {"kind": kind, "count": total,
               "tableaux": [dict(tableau_to_json(t), **({"nu": [int(p) for p in nu.split(".")]} if nu not in (None, "-") else {}))
                            for nu, ts in groups for t in ts]}
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_scan(args) -> int:
    extra = GOLDEN_SHAPES if args.check == "rule-agreement" and not args.no_golden else ()
    try:
        report = run_scan(args.check, args.max_size, jobs=args.jobs, start=args.start,
                          stop=args.stop, limit=args.limit, extra=extra)
    except ResourceLimit as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")
    _emit(args, report.summary(), report.to_json())
    return 0 if report.status == "pass" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qschur", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def shape_args(sp):
        sp.add_argument("--outer", required=True, help="outer shape, e.g. 2.3.3.2")
        sp.add_argument("--inner", default="-", help="inner shape, '-' for empty")
        sp.add_argument("--format", choices=["text", "json"], default="text")

    e = sub.add_parser("expand", help="expand a skew quasisymmetric Schur function")
    shape_args(e)
    e.add_argument("--basis", choices=["qs", "schur-left", "schur-right", "M"], default="qs")
    e.add_argument("--force", action="store_true",
                   help="return raw LR filling counts even for non-symmetric shapes")
    e.set_defaults(func=cmd_expand)

    r = sub.add_parser("rect", help="rectify a standard tableau")
    r.add_argument("--rows", help="rows separated by '/', entries by ',', '.' for inner cells")
    r.add_argument("--json", help="read the tableau from a JSON file")
    r.add_argument("--kind", choices=["srct", "srt"], default="srct")
    r.add_argument("--trace", action="store_true", help="print every intermediate tableau")
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.set_defaults(func=cmd_rect)

    t = sub.add_parser("tableaux", help="enumerate tableaux of a shape")
    shape_args(t)
    t.add_argument("--kind", required=True,
                   choices=["ssrct", "srct", "ssrt", "srt", "lrrct-left", "lrrct-right",
                            "lrrt-left", "lrrt-right"])
    t.add_argument("--content", help="content for ssrct/ssrt, e.g. 1.1.1")
    t.add_argument("--nu", help="partition for the LR kinds (default: all)")
    t.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    t.set_defaults(func=cmd_tableaux)

    s = sub.add_parser("scan", help="run an exhaustive verification scan")
    s.add_argument("--check", choices=sorted(CHECKS), required=True)
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--out", help="write the JSON report here")
    s.add_argument("--jobs", type=int, default=default_jobs())
    s.add_argument("--start", type=int, default=0, help="resume from this shape index")
    s.add_argument("--stop", type=int, default=None)
    s.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="tableau-count ceiling per call")
    s.add_argument("--no-golden", action="store_true", help="skip the always-checked worked shapes")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
