"""``logint`` command line.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 quadrature did not converge.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import math
import re
import sys
from typing import Sequence, TextIO

from logint import catalog, reduce, specfun
from logint.errors import CapacityError, DivergenceError, DomainError
from logint.oracle import QuadratureError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NONCONVERGED = 3


def fmt(v: float) -> str:
    return f"{v:.15g}"


def _symbolic(expr) -> str:
    return f"{expr.symbolic()} = {fmt(expr.to_float())}"


_PI_VALUE = re.compile(r"^\s*([-+]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_value(text: str):
    """``3`` -> int, ``0.5`` -> float, ``pi/4`` or ``3*pi/8`` -> float."""
    t = text.strip()
    if re.fullmatch(r"[-+]?\d+", t):
        return int(t)
    m = _PI_VALUE.match(t)
    if m:
        mult = m.group(1)
        mult = 1.0 if mult in ("", "+") else -1.0 if mult == "-" else float(mult)
        den = float(m.group(2)) if m.group(2) else 1.0
        return mult * math.pi / den
    try:
        return float(t)
    except ValueError:
        raise DomainError(f"cannot parse parameter value {text!r}") from None


def _params(pairs: Sequence[str] | None) -> dict:
    out = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise DomainError(f"--param expects name=value, got {pair!r}")
        name, value = pair.split("=", 1)
        out[name.strip()] = parse_value(value)
    return out


def _param_text(kw: dict) -> str:
    return ", ".join(f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in kw.items())


def _dump(doc, out: TextIO) -> None:
    out.write(json.dumps(doc, indent=2) + "\n")


# ---------------------------------------------------------------- commands


def cmd_list(args, out: TextIO) -> int:
    if args.json:
        out.write(catalog.export_json() + "\n")
        return EXIT_OK
    rows = [("ID", "CLOSED FORM AT DEFAULTS", "PARAMS", "NOTE")]
    for e in catalog.entries():
        rows.append((
            e.id,
            e.closed_form.symbolic(),
            ",".join(p.name for p in e.params) or "-",
            "erratum" if e.is_erratum else "",
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    for r in rows:
        out.write(f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]:<{widths[2]}}  {r[3]}".rstrip() + "\n")
    return EXIT_OK


def cmd_show(args, out: TextIO) -> int:
    e = catalog.lookup(args.id)
    iv = e.interval(**e.resolve())
    hi = "inf" if math.isinf(iv.hi) else fmt(iv.hi)
    out.write(f"id:          {e.id}\n")
    out.write(f"description: {e.description}\n")
    if e.params:
        for p in e.params:
            default = fmt(p.default) if isinstance(p.default, float) else str(p.default)
            out.write(f"param:       {p.name} = {default}  ({p.domain})\n")
    out.write(f"closed form: {_symbolic(e.closed_form)}\n")
    out.write(f"interval:    [{fmt(iv.lo)}, {hi}]\n")
    if e.is_erratum:
        out.write(f"printed:     {_symbolic(e.printed_value)}\n")
        out.write(f"erratum:     {e.erratum_note}\n")
    return EXIT_OK


def cmd_eval(args, out: TextIO) -> int:
    e = catalog.lookup(args.id)
    kw = e.resolve(_params(args.param))
    value = e.closed(kw)
    at_defaults = kw == e.resolve()
    if args.json:
        doc = {"id": e.id, "params": kw, "value": value}
        if at_defaults:
            doc["closed_form"] = {"atoms": e.closed_form.to_json()}
        _dump(doc, out)
        return EXIT_OK
    label = f"{e.id}({_param_text(kw)})" if kw else e.id
    if at_defaults:
        out.write(f"{label} = {e.closed_form.symbolic()} = {fmt(value)}\n")
    else:
        out.write(f"{label} = {fmt(value)}\n")
    return EXIT_OK


def _report_lines(r: catalog.VerifyReport) -> list[str]:
    status = "PASS" if r.passed else "FAIL"
    label = r.id + (f" ({_param_text(r.params)})" if r.params else "")
    numeric = "n/a" if r.numeric is None else fmt(r.numeric.value)
    lines = [f"{status} {label} closed={fmt(r.closed)} numeric={numeric} diff={r.abs_diff:.3g}"]
    if r.erratum_flag:
        lines.append(f"     erratum: printed={fmt(r.printed)} deviates from oracle by {r.printed_deviation:.3g}"
                     if r.printed_deviation is not None else f"     erratum: printed={fmt(r.printed)}")
    if r.reason:
        lines.append(f"     reason: {r.reason}")
    return lines


def _verify_exit(reports) -> int:
    failed = [r for r in reports if not r.passed]
    if not failed:
        return EXIT_OK
    mismatched = [r for r in failed if r.numeric is None or r.numeric.converged]
    return EXIT_FAIL if mismatched else EXIT_NONCONVERGED


def cmd_verify(args, out: TextIO) -> int:
    if args.all == bool(args.id):
        raise DomainError("verify needs exactly one of <id> or --all")
    if args.all:
        summary = catalog.verify_all(args.tol)
        if args.json:
            _dump(summary.to_json(), out)
        else:
            for r in summary.reports:
                out.write("\n".join(_report_lines(r)) + "\n")
            out.write(f"{summary.n_pass} passed, {summary.n_fail} failed, {summary.n_errata} errata flagged\n")
        return _verify_exit(summary.reports)
    r = catalog.verify_entry(args.id, _params(args.param), args.tol)
    if args.json:
        _dump(r.to_json(), out)
    else:
        out.write("\n".join(_report_lines(r)) + "\n")
    return _verify_exit([r])


def cmd_reduce(args, out: TextIO) -> int:
    r = reduce.parse_integrand(args.expr)
    bc = reduce.reduce_integrand(r, args.upper)
    result = reduce.evaluate_combination(bc)
    if args.json:
        _dump({
            "integrand": r.text(),
            "upper": "inf" if math.isinf(float(bc.upper)) else str(bc.upper),
            "partial_fractions": bc.pf.text(),
            "terms": [
                {"weight": [w.numerator, w.denominator], "call": c.kind,
                 "description": c.describe(), "value": c.evaluate()}
                for w, c in bc.terms
            ],
            "value": result.value,
        }, out)
    elif args.explain:
        out.write(reduce.explain(bc) + "\n")
    else:
        out.write(f"{fmt(result.value)}\n")
    return EXIT_OK


def cmd_quad(args, out: TextIO) -> int:
    r = reduce.parse_integrand(args.expr)
    q = reduce.quad(r, args.upper, args.tol)
    out.write(f"value={fmt(q.value)} err={q.err_estimate:.3g} evals={q.n_evals} "
              f"converged={'yes' if q.converged else 'no'}\n")
    return EXIT_OK if q.converged else EXIT_NONCONVERGED


def cmd_constants(args, out: TextIO) -> int:
    consts = specfun.constants()
    width = max(len(k) for k in consts)
    for name, expr in consts.items():
        out.write(f"{name:<{width}}  {_symbolic(expr)}\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _tol(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def _upper(text: str):
    try:
        return reduce.as_upper(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="logint", description="Closed forms and quadrature checks for logarithmic integrals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("list", help="list catalog entries")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("show", help="show one catalog entry")
    s.add_argument("id")
    s.set_defaults(func=cmd_show)

    s = sub.add_parser("eval", help="evaluate an entry's closed form")
    s.add_argument("id")
    s.add_argument("--param", action="append", metavar="NAME=VALUE")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("verify", help="compare closed forms with the quadrature oracle")
    s.add_argument("id", nargs="?")
    s.add_argument("--all", action="store_true")
    s.add_argument("--param", action="append", metavar="NAME=VALUE")
    s.add_argument("--tol", type=_tol, default=1e-10)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reduce", help="reduce int_0^b R(x) ln x dx to basis integrals")
    s.add_argument("expr")
    s.add_argument("--upper", type=_upper, required=True)
    s.add_argument("--explain", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("quad", help="integrate an expression numerically from 0 to b")
    s.add_argument("expr")
    s.add_argument("--upper", type=_upper, required=True)
    s.add_argument("--tol", type=_tol, default=1e-12)
    s.set_defaults(func=cmd_quad)

    s = sub.add_parser("constants", help="print the named constants")
    s.set_defaults(func=cmd_constants)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with contextlib.redirect_stderr(err):
            args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (catalog.UnknownEntryError, reduce.IntegrandSyntaxError, reduce.UnsupportedPoleError,
            DomainError, DivergenceError, CapacityError) as exc:
        err.write(f"logint: error: {exc}\n")
        return EXIT_USAGE
    except QuadratureError as exc:
        err.write(f"logint: error: {exc}\n")
        return EXIT_NONCONVERGED


def main() -> None:
    sys.exit(run())
