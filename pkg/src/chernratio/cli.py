"""
Command-line interface.

Every subcommand prints structured records to stdout (JSON lines by default,
CSV with ``--format csv`` or ``CHERNRATIO_FORMAT=csv``) and diagnostics to
stderr. Exit status: 0 success, 1 validation or parse error, 2 infeasible
request.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import records
from .bogomolov import check, surface_criterion
from .chern import DegreeVector, chern_numbers, ratio_at_scale, ratio_closed_form
from .density import DEFAULT_MAX_STEPS, approximate_surface_ratio, asymptotic_ratio
from .errors import ConsistencyError, InfeasibleError, NonterminationError, ValidationError
from .finiteness import enumerate_ge2
from .geometry import AmbientInvariants, CurveProductConfig, curve_product_invariants

FORMAT_ENV = "CHERNRATIO_FORMAT"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _bools(text: str) -> list[bool]:
    out = []
    for x in text.split(","):
        x = x.strip().lower()
        if x in ("1", "true", "t", "yes", "y"):
            out.append(True)
        elif x in ("0", "false", "f", "no", "n"):
            out.append(False)
        else:
            raise UsageError(f"cannot read {x!r} as a boolean flag")
    return out


def _rational(text: str, name: str) -> Fraction:
    try:
        return records.parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{name}: cannot parse {text!r} as a rational number") from exc


def _config(args) -> CurveProductConfig:
    hyper = _bools(args.hyperelliptic) if args.hyperelliptic else None
    return CurveProductConfig.from_lists(_ints(args.genera), _ints(args.multiples), hyper)


def _ambient_fields(rec: dict, amb: AmbientInvariants) -> None:
    rec["n"] = amb.n
    rec["c1sq_h"] = str(amb.c1sq_h)
    rec["c2_h"] = str(amb.c2_h)
    rec["a"] = str(amb.a)
    rec["b"] = str(amb.b)


def cmd_invariants(args) -> list[dict]:
    config = _config(args)
    amb = curve_product_invariants(config)
    d = DegreeVector(tuple(_ints(args.degrees))) if args.degrees else DegreeVector.ones(config.n - 2)
    inv = chern_numbers(amb, d)
    closed = ratio_closed_form(config, d)
    rec = {
        "command": "invariants",
        "genera": records.int_list(config.genera),
        "multiples": records.int_list(config.multiples),
        "degrees": records.int_list(d),
    }
    _ambient_fields(rec, amb)
    rec["c1sq"] = str(inv.c1sq)
    rec["c2"] = str(inv.c2)
    records.put_rational(rec, "ratio", inv.ratio)
    rec["ratio_closed_form"] = records.rational_str(closed)
    rec["agreement"] = closed == inv.ratio
    rec["ample_hypothesis"] = inv.ample_hypothesis
    if closed != inv.ratio:
        print(f"error: computation paths disagree ({inv.ratio} vs {closed})", file=sys.stderr)
    return [rec]


def cmd_approximate(args) -> list[dict]:
    target = _rational(args.target, "--target")
    tol = _rational(args.tol, "--tol")
    res = approximate_surface_ratio(target, tol, max_steps=args.max_steps)
    rec = {
        "command": "approximate",
        "target": records.rational_str(target),
        "tol": records.rational_str(tol),
        "m": res.m,
        "e": records.int_list(res.e),
    }
    records.put_rational(rec, "f_value", res.f_value)
    records.put_rational(rec, "asymptotic", res.asymptotic)
    records.put_rational(rec, "error", res.error)
    return [rec]


def cmd_scale_sweep(args) -> list[dict]:
    config = _config(args)
    amb = curve_product_invariants(config)
    e = DegreeVector(tuple(_ints(args.e)))
    if args.d_max < 1:
        raise ValidationError(f"--d-max must be >= 1, got {args.d_max}")
    limit = asymptotic_ratio(e)
    out = []
    d = 1
    while d <= args.d_max:
        ratio = ratio_at_scale(amb, e, d)
        rec = {"command": "scale-sweep", "d": d, "degrees": records.int_list(e.scaled(d))}
        records.put_rational(rec, "ratio", ratio)
        records.put_rational(rec, "asymptotic", limit)
        records.put_rational(rec, "gap", abs(ratio - limit))
        out.append(rec)
        d *= 2
    return out


def cmd_enumerate(args) -> list[dict]:
    raw = (args.n, args.c1sq_h, args.c2_h, args.a, args.b)
    if args.genera or args.multiples:
        if any(v is not None for v in raw):
            raise UsageError("give either --genera/--multiples or raw invariants, not both")
        if not (args.genera and args.multiples):
            raise UsageError("--genera and --multiples must be given together")
        amb = curve_product_invariants(_config(args))
    else:
        if any(v is None for v in raw):
            raise UsageError("raw ambient needs all of --n, --c1sq-h, --c2-h, --a, --b")
        amb = AmbientInvariants(n=args.n, c1sq_h=args.c1sq_h, c2_h=args.c2_h, a=args.a, b=args.b)
    report = enumerate_ge2(amb)
    rec = {"command": "enumerate"}
    _ambient_fields(rec, amb)
    records.put_rational(rec, "bound", report.bound)
    rec["count"] = len(report.vectors)
    rec["vectors"] = ";".join(records.int_list(v) for v in report.vectors)
    rec["ratios"] = ";".join(records.rational_str(r) for r in report.ratios)
    rec["boundary"] = ";".join("true" if b else "false" for b in report.boundary)
    return [rec]


def cmd_hypothesis(args) -> list[dict]:
    rep = check(_ints(args.dims), args.dim_y)
    rec = {"command": "hypothesis", "m": rep.m, "d_min": rep.d_min, "dim_y": rep.dim_y}
    records.put_rational(rec, "bound", rep.bound)
    rec["satisfied"] = rep.satisfied
    if rep.dim_y == 2:
        rec["surface_criterion"] = surface_criterion(rep.m, rep.d_min)
    return [rec]


def _add_curve_args(p, required=True):
    p.add_argument("--genera", required=required, help="comma-separated genera g_i >= 2")
    p.add_argument("--multiples", required=required, help="comma-separated pluricanonical multiples l_i")
    p.add_argument(
        "--hyperelliptic",
        help="comma-separated flags (default: true exactly for genus 2)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernratio",
        description="Exact Chern numbers of complete-intersection surfaces in products of curves.",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv"),
        default=None,
        help=f"output format (default: ${FORMAT_ENV} or json)",
    )
    parser.add_argument("--out", help="write records to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="c1^2, c2 and their ratio for a curve product")
    _add_curve_args(p)
    p.add_argument("--degrees", help="comma-separated degrees d_1..d_{N-2} (default: all ones)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("approximate", help="direction vector with asymptotic ratio near a target in (1,2)")
    p.add_argument("--target", required=True, help='rational target, "p/q" or decimal')
    p.add_argument("--tol", default="1e-6", help="absolute tolerance (default 1e-6)")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("scale-sweep", help="ratio along d*e for d = 1, 2, 4, ... <= d-max")
    _add_curve_args(p)
    p.add_argument("--e", required=True, help="comma-separated direction e_1..e_{N-2}")
    p.add_argument("--d-max", type=int, required=True)
    p.set_defaults(func=cmd_scale_sweep)

    p = sub.add_parser("enumerate", help="all degree vectors with c1^2 >= 2 c2")
    _add_curve_args(p, required=False)
    p.add_argument("--n", type=int)
    p.add_argument("--c1sq-h", type=int)
    p.add_argument("--c2-h", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hypothesis", help="dimension condition for ample cotangent bundle")
    p.add_argument("--dims", required=True, help="comma-separated factor dimensions")
    p.add_argument("--dim-y", type=int, required=True)
    p.set_defaults(func=cmd_hypothesis)
    return parser


def render(recs: list[dict], fmt: str) -> str:
    if fmt == "csv":
        return records.to_csv(recs)
    return "".join(records.to_json_line(r) + "\n" for r in recs)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    fmt = args.format or os.environ.get(FORMAT_ENV, "json").lower()
    if fmt not in ("json", "csv"):
        print(f"error: unknown output format {fmt!r}", file=sys.stderr)
        return EXIT_INVALID
    try:
        recs = args.func(args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except NonterminationError as exc:
        print(f"not attained: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValidationError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INVALID

    text = render(recs, fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if any(r.get("agreement") is False for r in recs):
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
