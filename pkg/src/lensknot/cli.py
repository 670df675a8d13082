"""Command-line interface.

Subcommands
-----------
dinv p q        correction terms of L(p, q)
knot p q k      gradings and tau table of the class-k simple knot
table1          recompute the built-in reference example (the order-two
                knot in L(4, 1) and the contact data of L(4, 1))
verify          sweep all (p, q, k) up to --pmax and check every identity
contact m       the m - 1 tight contact structures on L(m, 1)
bound p q k     evaluate the upper bounds for a formal (tb, rot) pair

Exit codes: 0 success, 1 verification failure, 2 invalid input.  All
machine-readable output (JSON, CSV, report files) carries rationals as
exact "num/den" strings; decimal approximations appear only in the human
tables and are marked with "~".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .contact import contact_summary, enumerate_tight, match_structure
from .errors import InvalidInputError
from .exactq import format_rat, parse_rat
from .legendrian import LegendrianRep, bound_report, parity_check
from .lens import (
    LensSpace,
    CorrectionTable,
    conjugate,
    correction_terms,
    kernel_backend,
    pd_shift,
)
from .simpleknot import (
    SimpleKnot,
    alexander_gradings,
    generator_label,
)
from .sweep import run_sweep

CSV_HEADER = "p,q,k,label,A,tau,d,d_conj_shift,two_tau_check"


def _approx(x: Fraction) -> str:
    return f"~{float(x):.6g}"


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


# ---------------------------------------------------------------- dinv

def _cmd_dinv(args) -> int:
    space = LensSpace(args.p, args.q)
    table = correction_terms(space)
    if args.json:
        _print_json(table.to_json_dict())
        return 0
    if args.csv:
        print(CSV_HEADER)
        for i in space.labels():
            dc = table[conjugate(space, i)]
            print(f"{space.p},{space.q},,{i},,,{format_rat(table[i])},{format_rat(dc)},")
        return 0
    print(f"correction terms of {space}  [{kernel_backend()} kernel]")
    print("  label  d          approx")
    for i in space.labels():
        print(f"  {i:>5}  {format_rat(table[i]):<9}  {_approx(table[i])}")
    return 0


# ---------------------------------------------------------------- knot

def _cmd_knot(args) -> int:
    space = LensSpace(args.p, args.q)
    knot = SimpleKnot(space, args.k)
    data = alexander_gradings(knot)
    table = correction_terms(space)
    if args.json:
        _print_json(data.to_json_dict())
        return 0
    if args.csv:
        print(CSV_HEADER)
        for i in space.labels():
            d_i = table[i]
            d_shift = table[pd_shift(space, conjugate(space, i), knot.k)]
            ok = "pass" if 2 * data.tau[i] == d_i - d_shift else "fail"
            print(
                f"{space.p},{space.q},{knot.k},{i},{format_rat(data.tau[i])},"
                f"{format_rat(data.tau[i])},{format_rat(d_i)},{format_rat(d_shift)},{ok}")
        return 0
    print(f"{knot}: order {data.order}, a_max {format_rat(data.a_max)} "
          f"({_approx(data.a_max)}), chi_F {format_rat(data.chi_F)}")
    print("  generator  A          label  tau")
    for j in space.labels():
        i = generator_label(space.p, j)
        print(f"  {j:>9}  {format_rat(data.A[j]):<9}  {i:>5}  {format_rat(data.tau[i])}")
    return 0


# ---------------------------------------------------------------- table1

def _reference_example(break_conjugation: bool):
    """Recompute the reference rows for the order-two knot in L(4, 1)."""
    space = LensSpace(4, 1)
    knot = SimpleKnot(space, 2)
    data = alexander_gradings(knot)
    table = correction_terms(space)

    def conj(i):
        if break_conjugation:  # negative-control hook: off-by-one involution
            return (space.p + space.q - i) % space.p
        return conjugate(space, i)

    a_row = [data.A[j] for j in range(4)]
    tau_row = [data.tau[generator_label(4, j)] for j in range(4)]
    d_row = [table[generator_label(4, j)] for j in range(4)]
    dshift_row = [
        table[pd_shift(space, conj(generator_label(4, j)), 2)] for j in range(4)
    ]
    rows = [
        ("A(x)", a_row, [Fraction(0), Fraction(1, 2), Fraction(0), Fraction(-1, 2)]),
        ("tau_s(x)", tau_row, [Fraction(0), Fraction(1, 2), Fraction(0), Fraction(-1, 2)]),
        ("d(Y,s(x))", d_row, [Fraction(0), Fraction(3, 4), Fraction(0), Fraction(-1, 4)]),
        ("d(Y,Js(x)+PD)", dshift_row,
         [Fraction(0), Fraction(-1, 4), Fraction(0), Fraction(3, 4)]),
    ]

    contact_rows = []
    for s, h, d, taus in zip(
        (match_structure(s, knot) for s in enumerate_tight(4)),
        [Fraction(-2), Fraction(-1), Fraction(-2)],
        [Fraction(0), Fraction(-1, 4), Fraction(0)],
        [(Fraction(0),), (Fraction(-1, 2),), (Fraction(0),)],
    ):
        contact_rows.append((s, h, d, taus))
    return rows, contact_rows


def _cmd_table1(args) -> int:
    rows, contact_rows = _reference_example(args.selftest_break_conjugation)
    ok = True
    print("reference example: order-two simple knot in L(4,1)")
    print("  x:              a      b      c      d")
    for name, got, want in rows:
        line = "  ".join(f"{format_rat(x):>5}" for x in got)
        print(f"  {name:<15} {line}")
        if got != want:
            ok = False
            wline = "  ".join(f"{format_rat(x):>5}" for x in want)
            print(f"    MISMATCH, expected: {wline}")
    print("tight contact structures on L(4,1):")
    for s, h_want, d_want, tau_want in contact_rows:
        print(f"  xi_{s.index}: rot {s.rot:>2}  h {format_rat(s.hopf):>5}  "
              f"d {format_rat(s.d_xi):>5}  tau {{{', '.join(map(format_rat, s.tau_values))}}}")
        if s.hopf != h_want or s.d_xi != d_want or s.tau_values != tau_want:
            ok = False
            print(f"    MISMATCH, expected: h {format_rat(h_want)} "
                  f"d {format_rat(d_want)} tau {{{', '.join(map(format_rat, tau_want))}}}")
    print("result: all values match" if ok else "result: MISMATCHES FOUND")
    return 0 if ok else 1


# ---------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    report = run_sweep(
        args.pmax, jobs=args.jobs,
        shift_before_conjugation=args.shift_before_conjugation)
    print(f"sweep p <= {report.p_max}: {report.n_triples} knots, "
          f"{len(report.failures)} failures  [{report.identity_form}] "
          f"[{kernel_backend()} kernel]")
    print(f"wall time: {report.wall_time:.3f}s, jobs: {args.jobs}")
    for failure in report.failures:
        print(f"  FAIL ({failure['p']},{failure['q']},{failure['k']}): "
              f"{', '.join(failure['failed'])}")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.report_json())
        print(f"report written to {args.report}")
    return 0 if report.all_ok else 1


# ---------------------------------------------------------------- contact

def _cmd_contact(args) -> int:
    m = args.m
    k = args.k if args.k is not None else m // 2
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    if not 0 <= k < m:
        raise InvalidInputError(f"knot class {k} outside [0, {m})")
    summary = contact_summary(m, k)
    if args.json:
        _print_json(summary)
        return 0
    print(f"tight contact structures on L({m},1) "
          f"(tau against the class-{k} simple knot)")
    print("  index  rot  tb    h        d        tau")
    for i, s in enumerate(summary["structures"], start=1):
        taus = ", ".join(s["tau"])
        note = "  (ambiguous)" if len(s["tau"]) > 1 else ""
        print(f"  {i:>5}  {s['rot']:>3}  {s['tb']:>3}   {s['h']:<7}  "
              f"{s['d']:<7}  {{{taus}}}{note}")
    return 0


# ---------------------------------------------------------------- bound

def _cmd_bound(args) -> int:
    if (args.xi is None) == (args.tau_star is None):
        raise InvalidInputError("pass exactly one of --xi or --tau-star")
    space = LensSpace(args.p, args.q)
    knot = SimpleKnot(space, args.k)
    data = alexander_gradings(knot)

    if args.xi is not None:
        structures = enumerate_tight(args.p)  # requires q = 1 via tau_xi below
        if not 1 <= args.xi <= len(structures):
            raise InvalidInputError(
                f"--xi must be in [1, {len(structures)}], got {args.xi}")
        matched = match_structure(structures[args.xi - 1], knot)
        if len(matched.tau_values) > 1:
            print("ambiguous Spin^c match for xi_%d: tau in {%s}; "
                  "pass --tau-star to choose" % (
                      args.xi, ", ".join(map(format_rat, matched.tau_values))),
                  file=sys.stderr)
            return 1
        tau_star = matched.tau_values[0]
    else:
        tau_star = parse_rat(args.tau_star)

    rep = LegendrianRep(knots=(knot,), tb=parse_rat(args.tb), rot=parse_rat(args.rot))
    rpt = bound_report(rep, data, tau_star)
    if args.json:
        _print_json(rpt.to_json_dict())
    else:
        print(f"{knot}, tau* = {format_rat(tau_star)}")
        print(f"  tb + rot      = {format_rat(rpt.lhs)} ({_approx(rpt.lhs)})")
        print(f"  tau bound     = {format_rat(rpt.tau_bound)}  "
              f"{'satisfied' if rpt.satisfied_tau else 'VIOLATED'} "
              f"(slack {format_rat(rpt.slack_tau)})")
        print(f"  chi(F) bound  = {format_rat(rpt.be_bound)}  "
              f"{'satisfied' if rpt.satisfied_be else 'VIOLATED'} "
              f"(slack {format_rat(rpt.slack_be)})")
        parity = parity_check(rep, data)
        print(f"  parity of tb + rot {'consistent' if parity else 'inconsistent'} "
              "with a representative of this knot")
    return 0 if rpt.satisfied_tau else 1


# ---------------------------------------------------------------- driver

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lensknot",
        description="exact correction terms, gradings and contact bounds "
                    "for simple knots in lens spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p_dinv = sub.add_parser("dinv", help="correction terms of L(p, q)")
    p_dinv.add_argument("p", type=int)
    p_dinv.add_argument("q", type=int)
    fmt = p_dinv.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p_dinv.set_defaults(func=_cmd_dinv)

    p_knot = sub.add_parser("knot", help="gradings of the class-k simple knot")
    p_knot.add_argument("p", type=int)
    p_knot.add_argument("q", type=int)
    p_knot.add_argument("k", type=int)
    fmt = p_knot.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p_knot.set_defaults(func=_cmd_knot)

    p_t1 = sub.add_parser("table1", help="recompute the built-in reference example")
    p_t1.add_argument("--selftest-break-conjugation", action="store_true",
                      help=argparse.SUPPRESS)
    p_t1.set_defaults(func=_cmd_table1)

    p_ver = sub.add_parser("verify", help="sweep-verify all knots up to --pmax")
    p_ver.add_argument("--pmax", type=int, required=True)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--report", type=str, default=None, metavar="FILE")
    p_ver.add_argument("--shift-before-conjugation", action="store_true",
                       help="use the d(s)-d(J(s+PD)) difference form")
    p_ver.set_defaults(func=_cmd_verify)

    p_con = sub.add_parser("contact", help="tight contact structures on L(m, 1)")
    p_con.add_argument("m", type=int)
    p_con.add_argument("--k", type=int, default=None,
                       help="knot class for tau values (default m // 2)")
    p_con.add_argument("--json", action="store_true")
    p_con.set_defaults(func=_cmd_contact)

    p_bnd = sub.add_parser("bound", help="evaluate the tb + rot upper bounds")
    p_bnd.add_argument("p", type=int)
    p_bnd.add_argument("q", type=int)
    p_bnd.add_argument("k", type=int)
    p_bnd.add_argument("--xi", type=int, default=None,
                       help="tight-structure index on L(p, 1)")
    p_bnd.add_argument("--tau-star", type=str, default=None, metavar="RAT",
                       help='tau value to bound against, e.g. "-1/2"')
    p_bnd.add_argument("--tb", type=str, required=True, metavar="RAT")
    p_bnd.add_argument("--rot", type=str, required=True, metavar="RAT")
    p_bnd.add_argument("--json", action="store_true")
    p_bnd.set_defaults(func=_cmd_bound)

    return parser


_RAT_OPTIONS = ("--tb", "--rot", "--tau-star")


def _glue_rational_options(argv: list[str]) -> list[str]:
    """Rewrite ["--tb", "-3/2"] as ["--tb=-3/2"].

    argparse treats "-3/2" as an option string, so negative rational values
    must be glued onto their flag before parsing.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RAT_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_glue_rational_options(list(argv)))
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
