"""Command line entry point: analyze, verify, enumerate, poset.

Exit codes: 0 pass, 1 counterexample or failed check, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import campaigns
from . import enumeration as enum
from . import positroid as pos
from .bits import members
from .errors import PositroidsError
from .macphersonian import build_macphersonian_plus
from .matroid import Matroid, circuits, cocircuits, connected_components
from .oriented import Chirotope, is_positively_orientable, underlying_matroid
from .poset import poset_diagnostics, to_dot, to_json
from .realization import RationalMatrix, is_totally_nonnegative, matroid_of_matrix
from .serialize import load, to_obj


def _subs(masks):
    return [list(members(m)) for m in masks]


def analyze_matroid(M: Matroid) -> dict:
    parts = pos.component_partition_check(M)
    verdict = pos.is_positroid(M)
    ds_ok, ds_witness = pos.da_silva_criterion(M)
    chi, _ = pos.indicator_chirotope(M)
    return {
        "n": M.n,
        "rank": M.k,
        "bases": len(M.bases),
        "circuits": _subs(sorted(circuits(M))),
        "cocircuits": _subs(sorted(cocircuits(M))),
        "components": _subs(connected_components(M)),
        "components_noncrossing": isinstance(parts, pos.NonCrossingPartition),
        "grassmann_necklace": _subs(pos.grassmann_necklace(M)),
        "positroid": verdict.is_positroid,
        "positroid_certificate": None if verdict.certificate is None else list(members(verdict.certificate)),
        "da_silva": ds_ok,
        "da_silva_witness": None if ds_witness is None else _subs(ds_witness),
        "circular": pos.is_circular(M),
        "positively_oriented": chi is not None,
    }


def analyze(obj) -> dict:
    if isinstance(obj, Chirotope):
        flip = is_positively_orientable(obj)
        report = {"kind": "chirotope", "d": obj.d}
        report.update(analyze_matroid(underlying_matroid(obj)))
        report["positively_orientable"] = flip is not None
        report["reorientation"] = None if flip is None else list(members(flip))
        return report
    if isinstance(obj, RationalMatrix):
        report = {"kind": "matrix", "totally_nonnegative": is_totally_nonnegative(obj)}
        report.update(analyze_matroid(matroid_of_matrix(obj)))
        return report
    report = {"kind": "matroid"}
    report.update(analyze_matroid(obj))
    return report


def cmd_analyze(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror or exc}", file=sys.stderr)
        return 2
    try:
        report = analyze(load(text))
    except PositroidsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(report, ensure_ascii=False))
    return 0


def cmd_verify(args) -> int:
    try:
        report = campaigns.run_campaign(args.theorem, args.n, args.k, args.jobs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report.as_dict(), ensure_ascii=False)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0 if report.passed else 1


ENUMERATORS = {
    "matroids": enum.enumerate_matroids,
    "positroids": enum.enumerate_positroids,
    "poms": enum.enumerate_poms,
    "chirotopes": enum.enumerate_chirotopes,
}


def cmd_enumerate(args) -> int:
    if not 0 <= args.k <= args.n:
        print(f"error: need 0 <= k <= n, got n={args.n} k={args.k}", file=sys.stderr)
        return 2
    items = ENUMERATORS[args.kind](args.n, args.k)
    if args.count_only:
        print(sum(1 for _ in items))
        return 0
    out = sys.stdout
    for x in items:
        out.write(json.dumps(to_obj(x), separators=(",", ":")) + "\n")
    return 0


def cmd_poset(args) -> int:
    if not 0 <= args.k <= args.n:
        print(f"error: need 0 <= k <= n, got k={args.k} n={args.n}", file=sys.stderr)
        return 2
    P = build_macphersonian_plus(args.k, args.n, reorientation_closed=args.reorientations)
    status = 0
    if args.check:
        diag = poset_diagnostics(P)
        report = {"k": args.k, "n": args.n, "elements": len(P)}
        report.update(diag.as_dict())
        print(json.dumps(report, ensure_ascii=False))
        if not (diag.graded and diag.thin and diag.eulerian):
            status = 1
    if args.export:
        text = to_dot(P, f"macp_{args.k}_{args.n}") if args.export == "dot" else to_json(P) + "\n"
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="positroids", description="Positroids and positively oriented matroids.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report on a matroid, chirotope or matrix JSON file")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run an exhaustive verification campaign")
    v.add_argument("theorem", help=", ".join(campaigns.THEOREMS))
    v.add_argument("--n", type=int, required=True, help="largest ground set size")
    v.add_argument("--k", type=int, default=None, help="restrict to one rank")
    v.add_argument("--out", default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="stream objects as JSON lines")
    e.add_argument("kind", choices=sorted(ENUMERATORS))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("poset", help="build the positive MacPhersonian with a bottom element")
    q.add_argument("k", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--check", action="store_true")
    q.add_argument("--export", choices=["dot", "json"])
    q.add_argument("--out", default=None)
    q.add_argument("--reorientations", action="store_true", help="keep every positively orientable chirotope")
    q.set_defaults(func=cmd_poset)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
