"""
Command line front end for batch searches.

Exit codes: 0 when a selection was made, 1 on input errors (unreadable
files, bad sheet fields), 2 when the hard filters leave no catalogue
entry to evaluate.
"""
from __future__ import annotations

import argparse
import json
import sys

from .catalogue import generate_synthetic, load_catalogue
from .engine import FUZZY, MULTICRITERIA, search
from .errors import EmptyCatalogueError, FormatError, SpecError
from .reporting import (criterion_reports, search_payload, spring_summary,
                        stable_json)
from .sheet import normalize

BOTH = "both"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stockspring",
        description="Select the stock compression spring that best matches "
                    "an interval-valued requirement sheet.")
    parser.add_argument("--spec", metavar="FILE",
                        help="requirement sheet JSON (omit for an empty sheet)")
    parser.add_argument("--catalogue", metavar="FILE",
                        help="catalogue CSV to search")
    parser.add_argument("--synthetic", type=int, metavar="COUNT",
                        help="generate a synthetic catalogue of COUNT springs")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for --synthetic (default 0)")
    parser.add_argument("--method", choices=[MULTICRITERIA, FUZZY, BOTH],
                        default=BOTH, help="analysis to run (default both)")
    parser.add_argument("--top", type=int, default=10,
                        help="ranked springs to report (default 10)")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--trace", action="store_true",
                        help="dump the per-spring evaluation of the scan")
    return parser


def _load_sheet(path):
    if path is None:
        return normalize({})
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read sheet file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"sheet file {path} is not valid JSON: {exc}") from exc
    return normalize(raw)


def _load_entries(args):
    if (args.catalogue is None) == (args.synthetic is None):
        raise SpecError("choose exactly one catalogue source: "
                        "--catalogue FILE or --synthetic COUNT")
    if args.catalogue is not None:
        try:
            return load_catalogue(args.catalogue)
        except OSError as exc:
            raise SpecError(f"cannot read catalogue {args.catalogue}: {exc}") from exc
    return generate_synthetic(args.seed, args.synthetic)


def _render_text(results, sheet, catalogue, top, trace, out):
    print(f"Catalogue: {catalogue.source} ({len(catalogue)} springs)", file=out)
    obj = sheet.objective
    print(f"Objective: {obj.sense} {obj.criterion.value}", file=out)
    for method, result in results.items():
        sel = result.selected
        e, p = sel.entry, sel.point
        print(f"\n== {method} ==", file=out)
        print(f"selected spring #{e.id}: Do {e.Do} mm, d {e.d} mm, "
              f"L0 {e.L0} mm, R {e.R} N/mm, {e.material}, {e.ends}, "
              f"price {e.price}", file=out)
        print(f"operating point: L1 = {p.L1:.3f} mm, L2 = {p.L2:.3f} mm "
              f"(P1 = {e.R * (e.L0 - p.L1):.3f} N, "
              f"P2 = {e.R * (e.L0 - p.L2):.3f} N, "
              f"stroke = {p.L1 - p.L2:.3f} mm)"
              f"{'' if p.feasible else '  [constraints not satisfiable]'}",
              file=out)
        print(f"objective value = {sel.objective_value:.6g}, "
              f"violation = {sel.violation:.4f}, ncv = {sel.ncv}", file=out)
        print(f"springs matching every bound: {result.feasible_count} "
              f"of {result.evaluated}", file=out)
        violated = [r for r in criterion_reports(sel, sheet) if r["crisp_mark"] > 0]
        if violated:
            print("violated bounds:", file=out)
            for r in violated:
                print(f"  {r['criterion']}: value {r['value']:.6g} "
                      f"outside [{r['lo']:.6g}, {r['hi']:.6g}] "
                      f"(mark {r['crisp_mark']:.4f})", file=out)
        print(f"top {min(top, len(result.ranking))} "
              f"({'by evaluation score' if method == MULTICRITERIA else 'incumbent trail'}):",
              file=out)
        for s in (spring_summary(ev) for ev in result.ranking[:top]):
            print(f"  #{s['id']:>5}  objective {s['objective_value']:>12.6g}  "
                  f"violation {s['violation']:.4f}  ncv {s['ncv']}  "
                  f"L1 {s['L1']:.2f}  L2 {s['L2']:.2f}", file=out)
        if trace:
            print("per-spring trace:", file=out)
            for s in (spring_summary(ev) for ev in result.ranking):
                print(f"  #{s['id']:>5}  score {s['score']:>12.6g}  "
                      f"objective {s['objective_value']:>12.6g}  "
                      f"violation {s['violation']:.4f}  ncv {s['ncv']}", file=out)
    if len(results) == 2:
        picks = {m: r.selected for m, r in results.items()}
        print("\n== selections side by side ==", file=out)
        for method, sel in picks.items():
            e, p = sel.entry, sel.point
            print(f"  {method:>13}: #{e.id} (Do {e.Do}, d {e.d}, L0 {e.L0}, "
                  f"R {e.R}, {e.material}) at L1 {p.L1:.2f} / L2 {p.L2:.2f}",
                  file=out)


def main(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    try:
        sheet = _load_sheet(args.spec)
        catalogue = _load_entries(args)
    except (SpecError, FormatError) as exc:
        print(f"error: {exc}", file=err)
        return 1

    methods = [MULTICRITERIA, FUZZY] if args.method == BOTH else [args.method]
    results = {}
    try:
        for method in methods:
            results[method] = search(catalogue, sheet, method)
    except EmptyCatalogueError as exc:
        print(f"error: {exc}", file=err)
        return 2

    if args.format == "json":
        payload = search_payload(results, sheet, catalogue.source,
                                 len(catalogue), top=args.top, trace=args.trace)
        out.write(stable_json(payload))
    else:
        _render_text(results, sheet, catalogue, args.top, args.trace, out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
