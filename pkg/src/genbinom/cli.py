"""``genbinom`` command line: value | table | verify | conjecture.

Exit codes: 0 success, 1 identity failure, 2 conjecture-shape violation,
64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import coefficients as cf
from .partitions import MultiIndex, check_conjecture
from .verify import SUITE_NAMES, RunConfig, default_workers, run

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_SHAPE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- value -----------------------------------------------------------------


def cmd_value(args, out) -> int:
    try:
        cf.GBKey(args.n, args.p, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.formula is None:
        values = {"canonical": cf.gb_canonical(args.n, args.p, args.k)}
    else:
        names = list(cf.FORMULAS) if args.formula == "all" else [args.formula]
        if args.formula == "all" and args.p == 0:
            names.remove("second")
        values = {}
        for name in names:
            try:
                values[name] = cf.FORMULAS[name](args.n, args.p, args.k)
            except ValueError as exc:
                raise UsageError(f"formula {name}: {exc}") from exc

    if args.format == "json":
        payload = {"n": args.n, "p": args.p, "k": args.k, "values": values}
        out.write(_dump_json(payload))
    elif args.format == "csv":
        out.write(_csv([["formula", "value"], *values.items()]))
    else:
        out.writelines(f"{v}\n" for v in values.values())

    if len(set(values.values())) > 1:
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        print(f"formula disagreement at n={args.n},p={args.p},k={args.k}: {detail}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


# -- table -----------------------------------------------------------------


def cmd_table(args, out) -> int:
    if args.n < 1:
        raise UsageError(f"table needs n >= 1, got {args.n}")
    table = cf.gb_table(args.n)
    if args.format == "json":
        out.write(_dump_json({"n": table.n, "rows": [list(r) for r in table.rows]}))
    elif args.format == "csv":
        header = ["p\\k", *range(table.n + 1)]
        out.write(_csv([header, *([p, *row] for p, row in enumerate(table.rows))]))
    else:
        width = len(str(max(max(r) for r in table.rows)))
        for row in table.rows:
            out.write(" ".join(str(v).rjust(width) for v in row) + "\n")
    return EXIT_OK


# -- verify ----------------------------------------------------------------


def _parse_suites(text: str) -> tuple[str, ...]:
    suites = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in suites if s not in SUITE_NAMES]
    if bad or not suites:
        raise UsageError(f"unknown suites {bad}; choose from {','.join(SUITE_NAMES)}")
    return suites


def cmd_verify(args, out) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    try:
        config = RunConfig(args.max_n, _parse_suites(args.suites), workers, args.format)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reports = run(config)
    ok = all(r.ok for r in reports)

    if args.format == "json":
        out.write(_dump_json({"ok": ok, "max_n": config.max_n, "suites": [r.to_json() for r in reports]}))
    elif args.format == "csv":
        rows = [["suite", "cases", "failures"]]
        rows += [[r.name, r.cases, len(r.failures)] for r in reports]
        out.write(_csv(rows))
        failures = [f for r in reports for f in r.failures]
        if failures:
            out.write("\n")
            out.write(_csv([["suite", "check", "key", "lhs", "rhs"],
                            *([f.suite, f.check, f.key, f.lhs, f.rhs] for f in failures)]))
    else:
        for r in reports:
            status = "ok" if r.ok else "FAILED"
            out.write(f"{r.name}: {r.cases} cases, {len(r.failures)} failures ... {status}\n")
            for f in r.failures:
                out.write(f"  {f}\n")
    # timing is kept off stdout so data output stays byte-identical between runs
    for r in reports:
        print(f"time {r.name}: {r.seconds:.3f}s", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILURE


# -- conjecture ------------------------------------------------------------


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_conjecture(args, out) -> int:
    try:
        r = MultiIndex(_parse_ints(args.r))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    n_values = _parse_ints(args.n) if args.n else (r.weight,)
    if not n_values or min(n_values) < 1:
        raise UsageError("every n must be >= 1")
    report = check_conjecture(r, n_values)

    if args.format == "json":
        payload = {
            "r": list(report.r),
            "results": [
                {
                    "n": res.n,
                    "coeffs": [{"k": k, "c": _rational(c)} for k, c in res.coeffs],
                    "integral": res.integral,
                    "positive": res.positive,
                    **({"overflow": [{"k": k, "a": _rational(a)} for k, a in res.overflow]}
                       if res.overflow else {}),
                }
                for res in report.results
            ],
            "stable": report.stable,
        }
        out.write(_dump_json(payload))
    elif args.format == "csv":
        rows = [["n", "k", "c"]]
        rows += [[res.n, k, _rational(c)] for res in report.results for k, c in res.coeffs]
        out.write(_csv(rows))
    else:
        out.write(f"r = ({', '.join(map(str, report.r))})\n")
        for res in report.results:
            coeffs = " ".join(f"c_{k}={_rational(c)}" for k, c in res.coeffs)
            out.write(f"n={res.n}: {coeffs}  integral={res.integral} positive={res.positive}\n")
            for k, a in res.overflow:
                out.write(f"  shape violation: basis coefficient a_{k}={_rational(a)} != 0\n")
        out.write(f"stable={report.stable}\n")

    if not report.shape_ok:
        return EXIT_SHAPE
    return EXIT_OK


# -- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = dict(choices=("csv", "json", "plain"), default="plain", help="output format")
    parser = _Parser(prog="genbinom", description="Generalized binomial coefficients gb(n,p,k).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("value", help="compute gb(n,p,k)")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--formula", choices=(*cf.FORMULAS, "all"),
                   help="evaluator to use (default: total canonical evaluator)")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("table", help="(n+1)x(n+1) table, rows p, columns k")
    p.add_argument("n", type=int)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "verify",
        help="run verification suites",
        description=(
            "Grids as functions of MAX_N. "
            "core: every formula, positivity, divisibility, closed forms, symmetry and "
            "the recurrence for 1<=n<=MAX_N. "
            "gf: bivariate and univariate generating functions, helper Lucas identity and "
            "closing identity for n<=MAX_N, plus the fixed contiguity grid "
            "(-6<=a<=6, -8<=b<=0, c=2, degree 16). "
            "partition: partition counts and moment identity for n<=MAX_N, 0<=r<=4, 1<=s<=4. "
            "lemma: sum identity for n<=MAX_N and the lemma for r+s<=MAX_N. "
            "conjecture: m=1 and m=2 reproductions for |r|<=min(MAX_N,8), "
            "m=3 probes for |r|<=min(MAX_N,9)."
        ),
    )
    p.add_argument("--suites", default=",".join(SUITE_NAMES[:4]),
                   help=f"comma-separated subset of {','.join(SUITE_NAMES)}")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $GENBINOM_WORKERS or CPU count)")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="partition-moment coefficients c_k for a multi-index")
    p.add_argument("--r", required=True, help="multi-index, e.g. 1,1,1")
    p.add_argument("--n", default=None, help="comma-separated n values (default |r|)")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"genbinom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
