"""Command line front end: ``compute``, ``verify`` and ``limit-check``.

Exit codes: 0 all checks pass, 1 mismatch, 2 usage or I/O error,
3 an identity whose reading could not be adjudicated.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from .combinatorics import classical_bernoulli_poly, classical_poly_bernoulli
from .degenerate import SequenceTable, degenerate_bernoulli, poly_bernoulli_table
from .exact import VARIABLES, MultiPoly, format_rational, var_index
from .identities import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    IDENTITIES,
    VARIANTS,
    verify,
)

__all__ = ["main", "render_table", "render_report", "parse_int_range", "UsageError"]


class UsageError(Exception):
    pass


def parse_int_range(text: str) -> list[int]:
    """``"-2..3"``, ``"1,2,5"`` or ``"4"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", part)
        try:
            if m:
                lo, hi = int(m.group(1)), int(m.group(2))
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad integer range {text!r}") from None
    return sorted(set(out))


def parse_eval(items: list[str] | None) -> dict[str, Fraction]:
    values: dict[str, Fraction] = {}
    for item in items or []:
        for assignment in item.split(","):
            name, sep, value = assignment.partition("=")
            if not sep:
                raise UsageError(f"--eval expects var=value, got {assignment!r}")
            try:
                var = VARIABLES[var_index(name.strip())]
                values[var] = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(str(exc)) from None
    return values


# -- rendering -----------------------------------------------------------------

_TEX_VAR = {"x": "x", "y": "y", "lam": r"\lambda"}


def _tex_rational(q: Fraction, leading: bool) -> str:
    sign = "-" if q < 0 else ("" if leading else "+")
    a = abs(q)
    body = str(a.numerator) if a.denominator == 1 else rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
    return f"{sign}{body}" if leading else f" {sign} {body}"


def _tex_monomial(var: str, k: int) -> str:
    v = _TEX_VAR[var]
    return "" if k == 0 else (v if k == 1 else f"{v}^{{{k}}}")


def _tex_univariate(coeffs: dict[int, Fraction], var: str) -> str:
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        mono = _tex_monomial(var, k)
        leading = not parts
        if mono and abs(c) == 1:
            s = ("-" if c < 0 else "") if leading else (" - " if c < 0 else " + ")
            parts.append(s + mono)
        else:
            parts.append(_tex_rational(c, leading) + mono)
    return "".join(parts) or "0"


def poly_to_latex(p: MultiPoly) -> str:
    """Descending powers of x (or of the single free variable), lambda-polynomial coefficients."""
    if "y" in p.free_variables():
        raise UsageError("LaTeX output supports polynomials in x and lambda only")
    if p.is_zero:
        return "0"
    main = "x" if "x" in p.free_variables() else "lam"
    i = var_index(main)
    groups: dict[int, dict[int, Fraction]] = {}
    for e, c in p.items():
        rest = e[2] if main == "x" else 0
        groups.setdefault(e[i], {})[rest] = c
    parts = []
    for deg in sorted(groups, reverse=True):
        coeff = groups[deg]
        mono = _tex_monomial(main, deg)
        leading = not parts
        if list(coeff) == [0]:
            c = coeff[0]
            if mono and abs(c) == 1:
                parts.append(("-" if c < 0 else "") + mono if leading else (" - " if c < 0 else " + ") + mono)
            else:
                parts.append(_tex_rational(c, leading) + mono)
        else:
            inner = _tex_univariate(coeff, "lam")
            parts.append(("" if leading else " + ") + rf"\left({inner}\right){mono}")
    return "".join(parts)


def _table_free_variables(table: SequenceTable) -> tuple[str, ...]:
    free = set()
    for e in table.entries:
        free.update(e.free_variables())
    return tuple(v for v in VARIABLES if v in free)


def render_table(table: SequenceTable, fmt: str, include_meta: bool = False) -> str:
    if fmt == "json":
        return table.to_json(include_meta)
    free = _table_free_variables(table)
    if fmt == "csv":
        if len(free) > 1:
            raise UsageError(
                f"csv needs at most one free variable, table has {', '.join(free)}; use --eval or json"
            )
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if not free:
            w.writerow(["n", "value"])
            for n, e in enumerate(table.entries):
                w.writerow([n, format_rational(e.constant_term)])
        else:
            v = free[0]
            i = var_index(v)
            width = max(e.degree(v) for e in table.entries) + 1
            w.writerow(["n"] + [f"{v}^{j}" for j in range(width)])
            for n, e in enumerate(table.entries):
                row = [Fraction(0)] * width
                for exp, c in e.items():
                    row[exp[i]] = c
                w.writerow([n] + [format_rational(c) for c in row])
        return buf.getvalue()
    if fmt == "latex":
        lines = [r"\begin{align*}"]
        args = []
        for var, sym in (("x", "x"), ("lam", r"\lambda")):
            args.append(table.evaluation[var] if var in table.evaluation else sym)
        for n, e in enumerate(table.entries):
            end = r" \\" if n < table.n_max else ""
            label = rf"\beta_{{{n}}}^{{({table.k})}}({args[0]}\mid {args[1]})"
            lines.append(f"{label} &= {poly_to_latex(e)}{end}")
        lines.append(r"\end{align*}")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def render_report(result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.to_dict(), indent=1) + "\n"
    rows = [
        (r.case.identity_id, r.case.n, r.case.k, r.case.d, r.case.variant, r.verdict,
         0 if r.witness is None else len(r.witness))
        for r in result.report
    ]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "n", "k", "d", "variant", "verdict", "witness_terms"])
        for row in rows:
            w.writerow(["" if v is None else v for v in row])
        return buf.getvalue()
    if fmt == "latex":
        lines = [r"\begin{tabular}{lrrrllr}", r"identity & $n$ & $k$ & $d$ & variant & verdict & witness terms \\ \hline"]
        for row in rows:
            cells = ["" if v is None else str(v) for v in row]
            lines.append(" & ".join(cells) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# -- commands --------------------------------------------------------------------


def cmd_compute(args) -> int:
    values = parse_eval(args.eval)
    table = poly_bernoulli_table(args.k, args.n_max)
    if values:
        table = table.evaluate(values)
    _emit(render_table(table, args.format, include_meta=args.meta), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.identity and args.all:
        raise UsageError("use either --all or --identity, not both")
    identities = tuple(args.identity) if args.identity else IDENTITIES
    for i in identities:
        if i not in IDENTITIES:
            raise UsageError(f"unknown identity {i!r}; choose from {', '.join(IDENTITIES)}")
    if args.variant is not None:
        allowed = {v for i in identities if i in VARIANTS for v in VARIANTS[i]}
        bad = [i for i in identities if i in VARIANTS and args.variant not in VARIANTS[i]]
        if args.variant not in allowed or bad:
            raise UsageError(f"variant {args.variant!r} does not apply to {', '.join(bad or identities)}")
    k_range = parse_int_range(args.k) if args.k else None
    d_range = parse_int_range(args.d) if args.d else None
    if d_range and min(d_range) < 1:
        raise UsageError("modulus d must be >= 1")
    identities = tuple(i for i in IDENTITIES if i in identities)
    result = verify(identities, args.n_max, k_range, d_range, args.variant)
    _emit(render_report(result, args.format), args.out)
    judged = {a.identity_id for a in result.adjudications}
    bad = [r for r in result.report.mismatches() if r.case.identity_id not in judged]
    rejected = len(result.report.mismatches()) - len(bad)
    unresolved = [a.identity_id for a in result.adjudications if not a.resolved]
    for a in result.adjudications:
        print(f"{a.identity_id}: adjudicated variant = {a.winner or 'UNRESOLVED'}", file=sys.stderr)
    print(
        f"{len(result.report)} cases, {len(bad)} mismatch"
        + (f", {rejected} rejected-variant cases" if judged else "")
        + (f"; unresolved: {', '.join(unresolved)}" if unresolved else ""),
        file=sys.stderr,
    )
    return result.status


def cmd_limit_check(args) -> int:
    ks = parse_int_range(args.k)
    checked = 0
    for k in ks:
        table = poly_bernoulli_table(k, args.n_max)
        for n, entry in enumerate(table.entries):
            pairs = [(f"beta_{n}^({k})(x|0) vs B_{n}^({k})(x)", entry, classical_poly_bernoulli(k, n))]
            if k == 1:
                pairs.append((f"beta_{n}(x|0) vs B_{n}(x)", degenerate_bernoulli(n), classical_bernoulli_poly(n)))
            for label, degen, classical in pairs:
                witness = degen.substitute("lam", 0) - classical
                checked += 1
                if witness:
                    print(f"mismatch: {label}; difference {witness}", file=sys.stderr)
                    return EXIT_MISMATCH
    print(f"lambda -> 0 limit holds for {checked} cases (n <= {args.n_max}, k in {ks})", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degenpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="table of beta_n^(k)(x|lambda), n = 0..n_max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--eval", action="append", metavar="VAR=VALUE", help="e.g. lambda=0 or x=1/2,lambda=1")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--meta", action="store_true", help="include generation metadata (json only)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check identities against the generating function")
    p.add_argument("--all", action="store_true", help="every identity (the default)")
    p.add_argument("--identity", action="append", metavar="ID", help=", ".join(IDENTITIES))
    p.add_argument("--variant", help="pin a reading for T3/T4 instead of adjudicating")
    p.add_argument("--n-max", type=int)
    p.add_argument("--k", metavar="RANGE", help="e.g. -2..3")
    p.add_argument("--d", metavar="RANGE", help="e.g. 1..3")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limit-check", help="compare lambda = 0 with the classical polynomials")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--k", metavar="RANGE", default="-2..3")
    p.set_defaults(func=cmd_limit_check)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse treats "-2..3" as an option; glue it to its flag
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in ("--k", "--d") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "n_max", None) is not None and args.n_max < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
