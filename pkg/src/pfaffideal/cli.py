"""Command line entry point.  Reports are printed to stdout as JSON."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import verify
from .algebra import parse_field
from .groebner import DEFAULT_SPAIR_BUDGET


def _heights(text: str) -> list[int]:
    try:
        return [int(h) for h in text.split(",") if h.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad heights {text!r}; expected e.g. 2,3,2")


def _field(text: str):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pfaffideal", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one claim")
    vs = v.add_subparsers(dest="what", required=True)

    pf = vs.add_parser("pfaffian", help="Groebner basis and initial ideal of the 2r-Pfaffian ideal")
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--r", type=int, required=True)
    pf.add_argument("--field", type=_field, default="rational", help="rational (default), prime or prime:P")
    pf.add_argument("--tie-break", default="span", help="span (default), lex, reverse or random:SEED")
    pf.add_argument("--budget", type=int, default=DEFAULT_SPAIR_BUDGET, help="S-pair reduction budget")

    fo = vs.add_parser("formulas", help="facet counts against the product formulas")
    fo.add_argument("--n-max", type=int, required=True)

    he = vs.add_parser("h-equality", help="h-vectors of the crossing and nesting complexes")
    he.add_argument("--n", type=int, required=True)
    he.add_argument("--r", type=int, required=True)

    po = vs.add_parser("polyomino", help="initial ideal of minors of a stack polyomino")
    po.add_argument("--heights", type=_heights, required=True, help="column heights, e.g. 2,3,2")
    po.add_argument("--r", type=int, required=True)
    po.add_argument("--field", type=_field, default="rational")
    po.add_argument("--budget", type=int, default=DEFAULT_SPAIR_BUDGET)

    pd = vs.add_parser("pf-det", help="Pfaffian squared against the determinant")
    pd.add_argument("--m-max", type=int, required=True)

    c = sub.add_parser("complex", help="simplicial complex statistics")
    cs = c.add_subparsers(dest="what", required=True)
    st = cs.add_parser("stats", help="f/h-vectors, facet count and sphere certificate")
    st.add_argument("--family", choices=["delta", "sigma"], required=True)
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--r", type=int, required=True)

    su = sub.add_parser("suite", help="run the acceptance matrix")
    mode = su.add_mutually_exclusive_group()
    mode.add_argument("--quick", action="store_true", help="skip the largest instance (default)")
    mode.add_argument("--full", action="store_true")
    su.add_argument("--jobs", type=int, default=1, help="worker processes")

    for sp in (pf, fo, he, po, pd, st, su):
        sp.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    return p


def _run(args) -> list[verify.VerificationReport]:
    if args.command == "suite":
        return verify.run_suite(quick=not args.full, jobs=args.jobs)
    if args.command == "complex":
        return [verify.complex_stats(args.family, args.n, args.r)]
    w = args.what
    if w == "pfaffian":
        field = parse_field(args.field) if isinstance(args.field, str) else args.field
        return [verify.verify_main_theorem(args.n, args.r, field, args.budget, args.tie_break)]
    if w == "formulas":
        return [verify.verify_formulas(args.n_max)]
    if w == "h-equality":
        return [verify.verify_h_equality(args.n, args.r)]
    if w == "polyomino":
        field = parse_field(args.field) if isinstance(args.field, str) else args.field
        return [verify.verify_determinantal(args.heights, args.r, field, args.budget)]
    if w == "pf-det":
        return [verify.verify_pfaffian_determinant(args.m_max)]
    raise AssertionError(w)


def render(reports: Sequence[verify.VerificationReport], single: bool) -> str:
    data = reports[0].to_dict() if single else {
        "pass": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(data, indent=2)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    reports = _run(args)
    text = render(reports, single=args.command != "suite")
    print(text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
