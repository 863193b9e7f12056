"""Command-line front end.

    dirlambda values  [--max-m N] [--fn lambda,zeta,beta,eta] [--digits D]
    dirlambda verify  [--max-m N] [--n-max N] [--alpha p/q,...] [--only id,...] [--numeric]
    dirlambda eval    FUNC S [--a A] [--method M] [--x-free X] [--tol T] [--digits D]
    dirlambda bench   [--s 2,...] [--a 1,...] [--x-free 1,...] [--tol T]

Every command accepts ``--format json|csv|text`` and ``--out PATH``.
Exit codes: 0 success, 1 verification failures, 2 bad configuration,
3 numeric domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import mpmath

from . import __version__
from . import closed_forms as cf
from . import numeric as nm
from .identities import (
    IDENTITIES,
    DEFAULT_ALPHAS,
    IdentityReport,
    SuiteConfig,
    record_to_report,
    report_to_record,
    run_suite,
)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_DOMAIN = 0, 1, 2, 3

VALUE_FUNCTIONS = ("zeta", "lambda", "beta", "eta")
EVAL_FUNCTIONS = ("lambda", "zeta", "eta", "beta", "J")
METHODS = ("auto", "series", "mellin", "hermite", "promain", "sech")


class ConfigError(ValueError):
    pass


@dataclass
class CliConfig:
    command: str
    max_m: int = 4
    precision_digits: int = 50
    tolerance: Optional[float] = None
    alpha_list: list = field(default_factory=lambda: [str(a) for a in DEFAULT_ALPHAS])
    x_free: Optional[float] = None
    output_format: str = "text"
    output_path: Optional[str] = None

    def validate(self) -> None:
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError("--tol must be positive")
        if self.precision_digits < 5:
            raise ConfigError("--digits must be at least 5")
        for a in self.alpha_list:
            parse_rational(a)
        if self.x_free is not None and not 0 < self.x_free < math.pi:
            raise ConfigError("--x-free must lie in (0, pi)")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"not a rational number: {text!r}") from exc


def _split(text: Optional[str]) -> list[str]:
    if text is None:
        return []
    return [t for t in (p.strip() for p in text.split(",")) if t]


# --- output ------------------------------------------------------------------


def _emit(rows: list[dict], fmt: str, out: Optional[str], meta: dict, key: str = "rows") -> None:
    if fmt == "json":
        text = json.dumps({"meta": meta, key: rows}, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        text = buf.getvalue()
    else:
        if rows:
            cols = list(rows[0])
            widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
            lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
            lines += ["  ".join(str(r[c]).ljust(widths[c]) for c in cols) for r in rows]
            text = "\n".join(lines) + "\n"
        else:
            text = ""
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _meta(config: CliConfig, **extra) -> dict:
    return {"tool": "dirlambda", "version": __version__, "config": {**asdict(config), **extra}}


def report_row(report: IdentityReport, fmt: str) -> dict:
    rec = report_to_record(report)
    if fmt == "json":
        rec["params"] = {k: str(v) for k, v in report.params.items()}
    rec["decimal"] = _residual_decimal(report)
    return rec


def _residual_decimal(report: IdentityReport) -> str:
    if report.residual is None:
        return ""
    with mpmath.workdps(30):
        if isinstance(report.residual, cf.PiPower):
            v = report.residual.to_mpf()
        else:
            v = mpmath.mpf(report.residual.numerator) / report.residual.denominator
        return mpmath.nstr(v, 15)


def load_reports(path: str | Path) -> list[IdentityReport]:
    """Read back a JSON or CSV report file written by ``verify``."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        rows = json.loads(text)["reports"]
        for row in rows:
            if isinstance(row["params"], dict):
                row["params"] = ";".join(f"{k}={v}" for k, v in row["params"].items())
    else:
        rows = list(csv.DictReader(io.StringIO(text)))
    return [record_to_report(row) for row in rows]


# --- commands ------------------------------------------------------------------


def _values_rows(fns: Sequence[str], max_m: int, digits: int) -> list[dict]:
    table = {
        "zeta": (lambda m: cf.zeta_even(m), lambda m: f"{2 * m}"),
        "lambda": (lambda m: cf.lambda_even(m), lambda m: f"{2 * m}"),
        "beta": (lambda m: cf.beta_odd(m - 1), lambda m: f"{2 * m - 1}"),
        "eta": (lambda m: cf.eta_even(m), lambda m: f"{2 * m}"),
    }
    rows = []
    with mpmath.workdps(digits + 15):
        for fn in fns:
            value_of, arg_of = table[fn]
            for m in range(1, max_m + 1):
                v = value_of(m)
                rows.append({
                    "function": fn,
                    "argument": arg_of(m),
                    "coefficient": str(v.coefficient),
                    "pi_exponent": v.exponent,
                    "decimal": mpmath.nstr(v.to_mpf(), digits),
                })
    return rows


def cmd_values(config: CliConfig, fns: Sequence[str]) -> int:
    if config.max_m < 1:
        raise ConfigError("--max-m must be at least 1")
    unknown = [f for f in fns if f not in VALUE_FUNCTIONS]
    if unknown:
        raise ConfigError(f"unknown functions: {unknown}")
    rows = _values_rows(fns, config.max_m, config.precision_digits)
    _emit(rows, config.output_format, config.output_path, _meta(config, functions=list(fns)))
    return EXIT_OK


def numeric_crosschecks(prec: nm.Precision) -> list[dict]:
    """Exact-vs-numeric spot checks; each row says whether the exact value sits inside the bound."""
    rows = []

    def add(name, arg, nv, exact):
        ok = bool(nv.contains(exact))
        rows.append({"check": name, "argument": arg, "value": mpmath.nstr(nv.value, 20),
                     "error_bound": mpmath.nstr(nv.error_bound, 3), "pass": ok})

    with mpmath.workdps(prec.dps):
        for m in range(1, 7):
            add("lambda_series", 2 * m, nm.eval_lambda_series(2 * m, prec), cf.lambda_even(m).to_mpf())
            add("zeta_via_lambda", 2 * m, nm.eval_zeta_via_lambda(2 * m, prec), cf.zeta_even(m).to_mpf())
            add("eta_series", 2 * m, nm.eval_eta_series(2 * m, prec), cf.eta_even(m).to_mpf())
        for m in range(4):
            add("beta_series", 2 * m + 1, nm.eval_beta_series(2 * m + 1, prec), cf.beta_odd(m).to_mpf())
    return rows


def cmd_verify(config: CliConfig, n_max: int, only: Sequence[str], numeric: bool) -> int:
    if config.max_m < 1:
        raise ConfigError("--max-m must be at least 1")
    if n_max < 0:
        raise ConfigError("--n-max must be nonnegative")
    unknown = [i for i in only if i not in IDENTITIES]
    if unknown:
        raise ConfigError(f"unknown identities: {unknown}; choose from {sorted(IDENTITIES)}")
    alphas = tuple(parse_rational(a) for a in config.alpha_list)
    suite = SuiteConfig(m_max=config.max_m, n_max=n_max, alphas=alphas,
                        identities=tuple(only) if only else None)
    result = run_suite(suite)
    rows = [report_row(r, config.output_format) for r in result]
    meta = _meta(config, n_max=n_max, only=list(only),
                 excluded=[{"identity_id": i, "params": {k: str(v) for k, v in p.items()}, "reason": why}
                           for i, p, why in result.excluded])
    failed = len(result.failures)
    if numeric:
        checks = numeric_crosschecks(_precision(config, 1e-25))
        meta["numeric_checks"] = checks
        failed += sum(not c["pass"] for c in checks)
    _emit(rows, config.output_format, config.output_path, meta, key="reports")
    print(f"{len(result)} reports, {len(result.failures)} failed, {len(result.excluded)} excluded"
          + (f", {sum(not c['pass'] for c in meta['numeric_checks'])} numeric checks failed"
             if numeric else ""), file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def _precision(config: CliConfig, default_tol: float, digits: Optional[int] = None) -> nm.Precision:
    tol = config.tolerance if config.tolerance is not None else default_tol
    d = digits if digits is not None else config.precision_digits
    # keep enough digits to resolve the tolerance
    d = max(d, math.ceil(-math.log10(tol)) + 2)
    return nm.Precision(target_tolerance=tol, working_digits=d)


def _parse_s(text: str):
    try:
        if "/" in text:
            return parse_rational(text)
        if "j" in text:
            return complex(text)
        value = float(text)
        return int(value) if value.is_integer() and "." not in text and "e" not in text.lower() else value
    except ValueError as exc:
        raise ConfigError(f"bad s: {text!r}") from exc


def _closed_form_eval(fn: str, s, a: Fraction):
    """Exact value at nonpositive integer s, or None."""
    if isinstance(s, complex) or Fraction(s) != int(Fraction(s)) or s > 0:
        return None
    k = -int(s)
    if fn == "eta":
        return cf.eta_neg_int(k)
    if fn == "beta":
        return cf.beta_neg_int(k)
    if fn == "J":
        return cf.J_neg_int(k, a)
    raise nm.DomainError(f"no value of {fn} at s = {s} is provided")


def evaluate(fn: str, s, a: Fraction, method: str, x_free: float, config: CliConfig) -> nm.NumericValue:
    series_prec = _precision(config, 1e-30)
    quad_prec = _precision(config, 1e-12, digits=30)
    s_real = not isinstance(s, complex)
    positive = s_real and s > 0
    if method == "auto":
        if fn in ("lambda", "zeta"):
            method = "series"
        elif positive:
            method = "series"
        else:
            method = "hermite" if fn in ("J", "eta") else "promain"
    if fn == "lambda":
        if method == "mellin":
            return nm.eval_lambda_mellin(s, quad_prec)
        if method == "series":
            return nm.eval_lambda_series(s, series_prec)
    elif fn == "zeta":
        if method == "series":
            return nm.eval_zeta_via_lambda(s, series_prec)
    elif fn == "eta":
        if method == "series":
            return nm.eval_eta_series(s, series_prec)
        if method == "promain":
            return nm.eval_eta_coffey(s, x_free, quad_prec)
        if method == "mellin":
            return nm.eval_J_mellin(s, 1, quad_prec)
        if method == "hermite":
            return nm.eval_J_hermite(s, 1, quad_prec)
    elif fn == "beta":
        if method == "series":
            return nm.eval_beta_series(s, series_prec)
        if method == "sech":
            return nm.eval_beta_sech(s, quad_prec)
        if method == "promain":
            return nm.eval_beta_promain(s, x_free, quad_prec)
    elif fn == "J":
        if method == "series":
            return nm.eval_J_direct(s, a, series_prec)
        if method == "promain":
            return nm.eval_J_promain(s, a, x_free, quad_prec)
        if method == "mellin":
            return nm.eval_J_mellin(s, a, quad_prec)
        if method == "hermite":
            return nm.eval_J_hermite(s, a, quad_prec)
    raise ConfigError(f"method {method!r} is not available for {fn}")


def cmd_eval(config: CliConfig, fn: str, s_text: str, a_text: str, method: str) -> int:
    if fn not in EVAL_FUNCTIONS:
        raise ConfigError(f"unknown function {fn!r}; choose from {EVAL_FUNCTIONS}")
    if method not in METHODS:
        raise ConfigError(f"unknown method {method!r}")
    s = _parse_s(s_text)
    a = parse_rational(a_text)
    x_free = config.x_free if config.x_free is not None else 1.0
    exact = _closed_form_eval(fn, s, a)
    if exact is not None:
        row = {"function": fn, "s": s_text, "a": str(a) if fn == "J" else "", "value": str(exact),
               "error_bound": "0", "method": "closed-form", "terms": 0}
    else:
        nv = evaluate(fn, s, a, method, x_free, config)
        row = {"function": fn, "s": s_text, "a": str(a) if fn == "J" else "",
               "value": mpmath.nstr(nv.value, nv.working_precision),
               "error_bound": mpmath.nstr(nv.error_bound, 5), "method": nv.method, "terms": nv.terms}
    _emit([row], config.output_format, config.output_path, _meta(config, function=fn, s=s_text))
    return EXIT_OK


def cmd_bench(config: CliConfig, s_list: Sequence[str], a_list: Sequence[str], x_list: Sequence[str]) -> int:
    if not s_list or not a_list:
        raise ConfigError("bench needs a nonempty --s and --a grid")
    xs = [float(x) for x in x_list] or [config.x_free if config.x_free is not None else 1.0]
    for x in xs:
        if not 0 < x < math.pi:
            raise ConfigError("--x-free values must lie in (0, pi)")
    prec = _precision(config, 1e-12, digits=30)
    rows = []
    for s_text in s_list:
        s = _parse_s(s_text)
        for a_text in a_list:
            a = parse_rational(a_text)
            runs = []
            if not isinstance(s, complex) and s > 0:
                runs.append(("direct", None, lambda: nm.eval_J_direct(s, a, prec)))
                runs.append(("mellin", None, lambda: nm.eval_J_mellin(s, a, prec)))
            for x in xs:
                runs.append(("promain", x, lambda x=x: nm.eval_J_promain(s, a, x, prec)))
            runs.append(("hermite", None, lambda: nm.eval_J_hermite(s, a, prec)))
            for name, x, fn in runs:
                start = time.perf_counter()
                nv = fn()
                wall = time.perf_counter() - start
                rows.append({"representation": name, "s": s_text, "a": str(a),
                             "x_free": "" if x is None else x, "terms": nv.terms,
                             "wall_s": f"{wall:.4f}", "value": mpmath.nstr(nv.value, 20),
                             "error_bound": mpmath.nstr(nv.error_bound, 3)})
    _emit(rows, config.output_format, config.output_path, _meta(config, s=list(s_list), a=list(a_list)))
    return EXIT_OK


# --- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-m", type=int, default=4)
    common.add_argument("--digits", type=int, default=50)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--alpha", default=None, help="comma-separated rationals, e.g. 0,1,-2/3")
    common.add_argument("--x-free", type=float, default=None)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", default=None)

    parser = argparse.ArgumentParser(prog="dirlambda", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("values", parents=[common], help="tabulate closed-form values")
    p.add_argument("--fn", default=",".join(VALUE_FUNCTIONS))

    p = sub.add_parser("verify", parents=[common], help="run the exact identity sweep")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--only", default=None, help="comma-separated identity ids")
    p.add_argument("--numeric", action="store_true", help="also run exact-vs-numeric checks")
    p.set_defaults(max_m=40)

    p = sub.add_parser("eval", parents=[common], help="evaluate a function numerically")
    p.add_argument("function", choices=EVAL_FUNCTIONS)
    p.add_argument("s")
    p.add_argument("--a", default="1")
    p.add_argument("--method", choices=METHODS, default="auto")

    p = sub.add_parser("bench", parents=[common], help="compare representations of J(s, a)")
    p.add_argument("--s", dest="s_grid", default="2")
    p.add_argument("--a", dest="a_grid", default="1")
    p.add_argument("--x-grid", default=None, help="comma-separated x_free values")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = CliConfig(
        command=args.command,
        max_m=args.max_m,
        precision_digits=args.digits,
        tolerance=args.tol,
        x_free=args.x_free,
        output_format=args.format,
        output_path=args.out,
    )
    if args.alpha is not None:
        config.alpha_list = _split(args.alpha)
    try:
        config.validate()
        if args.command == "values":
            return cmd_values(config, _split(args.fn))
        if args.command == "verify":
            return cmd_verify(config, args.n_max, _split(args.only), args.numeric)
        if args.command == "eval":
            return cmd_eval(config, args.function, args.s, args.a, args.method)
        return cmd_bench(config, _split(args.s_grid), _split(args.a_grid), _split(args.x_grid))
    except ConfigError as exc:
        print(f"dirlambda: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except nm.DomainError as exc:
        print(f"dirlambda: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
