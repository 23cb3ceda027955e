"""Command-line front end.

Exit codes: 0 success, 1 suite failure, 2 usage or parse error,
3 PhiIncompatible, 4 ClosureNotKnot.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .braids import BraidWord
from .checks import SUITES, run_suite
from .fox import fox_derivative
from .magnus import ClosureNotKnot, PhiIncompatible, alexander_polynomial, rho
from .rings import Phi, abelianize
from .words import WordError, parse_generators, parse_word

EXIT_FAIL, EXIT_USAGE, EXIT_PHI, EXIT_DOMAIN = 1, 2, 3, 4


def _max_index(text: str) -> int:
    found = [int(k) for k in re.findall(r"x(\d+)", text)]
    return max(found, default=1)


def cmd_derive(args) -> int:
    rank = args.rank or max(_max_index(args.word), args.by)
    w = parse_word(args.word, rank)
    d = fox_derivative(w, args.by)
    result = d if args.phi == "none" else abelianize(d, Phi(args.phi))
    if args.json:
        print(json.dumps({"terms": result.to_terms()}))
    else:
        print(result)
    return 0


def cmd_matrix(args) -> int:
    word = parse_generators(args.gens, args.strands)
    m = rho(word, Phi(args.rep))
    print(json.dumps(m.to_json()) if args.json else m.pretty())
    return 0


def cmd_check(args) -> int:
    if not 2 <= args.strands <= 6:
        print(f"error: --strands must be in 2..6, got {args.strands}", file=sys.stderr)
        return EXIT_USAGE
    report = run_suite(args.suite, args.strands, args.seed, args.samples)
    if args.verbose:
        for o in report.outcomes:
            print(("ok   " if o.passed else "FAIL ") + o.name)
    for o in report.failures:
        print(f"counterexample: {o.name}: {o.detail}")
    print(report.summary())
    return 0 if report.passed else EXIT_FAIL


def cmd_alexander(args) -> int:
    braid = BraidWord.parse(args.braid, args.strands)
    print(alexander_polynomial(braid))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="foxmagnus", description="Fox calculus and Magnus representations.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("derive", help="Fox derivative of a free word")
    d.add_argument("--word", required=True, help='e.g. "x2^-1 x1 x2"; empty string is the identity')
    d.add_argument("--by", required=True, type=int, help="generator index j")
    d.add_argument("--phi", choices=["gassner", "burau", "none"], default="none")
    d.add_argument("--rank", type=int, help="rank of F_n (default: largest index seen)")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_derive)

    m = sub.add_parser("matrix", help="representation matrix of a generator word")
    m.add_argument("--gens", required=True, help='e.g. "e[1,2]^-1 s1 a[1,3] e[1,2,3]"')
    m.add_argument("--rep", choices=["gassner", "burau"], required=True)
    m.add_argument("--strands", type=int, required=True)
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_matrix)

    c = sub.add_parser("check", help="run an invariant suite")
    c.add_argument("--suite", choices=SUITES, required=True)
    c.add_argument("--strands", type=int, default=4)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int)
    c.add_argument("-v", "--verbose", action="store_true")
    c.set_defaults(func=cmd_check)

    a = sub.add_parser("alexander", help="Alexander polynomial of a braid closure")
    a.add_argument("--braid", required=True, help='e.g. "s1 s1 s1"')
    a.add_argument("--strands", type=int, required=True)
    a.set_defaults(func=cmd_alexander)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PhiIncompatible as exc:
        print(f"PhiIncompatible: {exc}", file=sys.stderr)
        return EXIT_PHI
    except ClosureNotKnot as exc:
        print(f"ClosureNotKnot: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
