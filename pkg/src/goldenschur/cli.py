"""Command-line front end.

Subcommands::

    verify        run a verification suite (exit 0 iff nothing failed)
    moments       exact/decimal power sums and moments at (N, q)
    schur         κ_Schur curve and property report for a family file
    stationarity  synthesize consistent coefficients and check the golden point
    fit-ab        identify quadratic-law coefficients from (q, κ) samples
    golden-table  the integer reduction table q⋆^m = a_m·q⋆ + b_m
    lambda        Λ(N) in both bases and decimal

Reports render as ``table``, ``csv`` or ``json``; all output is
deterministic for a fixed ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from .folded import Scalar, moments, sums_closed, theta_derivatives
from .golden import golden_power_table, lambda_n
from .lockin import (
    QuadLawCoeffs,
    bracket_residual,
    stationarity_check,
    synthesize_consistent_ab,
    uniqueness_scan,
)
from .qfield import QSTAR, Q5, decimal_str
from .schur import (
    FamilyValidationError,
    kappa_convexity_scan,
    load_family,
    quadratic_law_fit,
    schur_curvature,
)
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser"]

_GOLDEN_TOKENS = {"phi^-2", "qstar", "q*", "golden"}


def _parse_rational(text: str, name: str) -> Fraction | float:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"{name}: cannot parse {text!r} as a rational or float") from None


def _parse_q(text: str) -> Scalar:
    if text.strip().lower() in _GOLDEN_TOKENS:
        return QSTAR
    return _parse_rational(text, "q")


def _exact_str(v: Scalar) -> str:
    if isinstance(v, Q5):
        if v.is_rational:
            return str(v.a)
        return f"{v} = {v.to_golden()}"
    return str(v)


def _decimal(v: Scalar, digits: int) -> str:
    if isinstance(v, float):
        return f"{v:.{digits}g}"
    return decimal_str(v, digits)


def _cmd_moments(args: argparse.Namespace) -> int:
    q = _parse_q(args.q)
    s = sums_closed(args.N, q)
    m = moments(args.N, q)
    i1p, i2p = theta_derivatives(m)
    rows = [
        ("S0", s.s0), ("S1", s.s1), ("S2", s.s2), ("S3", s.s3),
        ("I1", m.i1), ("I2", m.i2), ("I3", m.i3), ("Var", m.var),
        ("I1'", i1p), ("I2'", i2p),
    ]
    q_label = "q⋆ = (3 − √5)/2" if isinstance(q, Q5) else str(q)
    print(f"N = {args.N}, q = {q_label}")
    for name, value in rows:
        if args.format == "exact":
            print(f"{name:>4} = {_exact_str(value)}")
        elif args.format == "decimal":
            print(f"{name:>4} = {_decimal(value, args.digits)}")
        else:
            print(f"{name:>4} = {_exact_str(value)} ≈ {_decimal(value, args.digits)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = run_suite(args.suite, args.seed)
    sys.stdout.write(doc.render(args.format))
    return doc.exit_code


def _cmd_schur(args: argparse.Namespace) -> int:
    fam = load_family(args.hessian_file)
    if args.points < 3:
        raise ValueError("need at least 3 grid points")
    if not args.theta_min < args.theta_max:
        raise ValueError("need theta_min < theta_max")
    scan = kappa_convexity_scan(fam, args.theta_min, args.theta_max, args.points)
    curve = [
        {"theta": t, "q": math.exp(t), "kappa": k}
        for t, k in zip(scan.thetas, scan.kappas)
    ]
    convexity = {
        "min_second_difference": scan.min_second_difference,
        "violations": list(scan.violations),
        "convex_ok": scan.convex_ok,
    }
    fit_info = None
    if args.fit_law:
        fit = quadratic_law_fit([(row["q"], row["kappa"]) for row in curve], fam.n)
        fit_info = {
            "A": float(fit.a),
            "B": float(fit.b),
            "max_abs_residual": fit.max_abs_residual,
        }
    if args.format == "json":
        doc = {"N": fam.n, "curve": curve, "convexity": convexity}
        if fit_info is not None:
            doc["fit"] = fit_info
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.format == "csv":
        print("theta,q,kappa")
        for row in curve:
            print(f"{row['theta']:.12g},{row['q']:.12g},{row['kappa']:.12g}")
        print(f"# convex_ok={scan.convex_ok} min_second_difference={scan.min_second_difference:.6e}")
        if scan.violations:
            print(f"# violations at grid indices {list(scan.violations)}")
        if fit_info is not None:
            print(
                f"# fit A={fit_info['A']:.12g} B={fit_info['B']:.12g} "
                f"max_abs_residual={fit_info['max_abs_residual']:.6e}"
            )
    else:
        print(f"κ_Schur curve, N = {fam.n}, {args.points} points")
        print(f"{'theta':>12}  {'q':>10}  {'kappa':>14}")
        for row in curve:
            print(f"{row['theta']:>12.6f}  {row['q']:>10.6f}  {row['kappa']:>14.8f}")
        status = "pass" if scan.convex_ok else f"FAIL at indices {list(scan.violations)}"
        print(f"convexity: {status} (min second difference {scan.min_second_difference:.6e})")
        if fit_info is not None:
            print(
                f"quadratic-law fit: A = {fit_info['A']:.10g}, B = {fit_info['B']:.10g}, "
                f"max |residual| = {fit_info['max_abs_residual']:.6e}"
            )
    return 0 if scan.convex_ok else 1


def _cmd_stationarity(args: argparse.Namespace) -> int:
    if args.N < 2:
        raise ValueError("stationarity synthesis needs N >= 2")
    b = _parse_rational(args.B, "B")
    m2 = _parse_rational(args.m_rho_sq, "m-rho-sq")
    coeffs = synthesize_consistent_ab(b, args.N, m2)
    lam = lambda_n(args.N)
    rep = stationarity_check(coeffs)
    grid = [math.log(0.05) + i * (math.log(0.95) - math.log(0.05)) / 600 for i in range(601)]
    scan = uniqueness_scan(coeffs, grid)
    residual = bracket_residual(coeffs, lam)
    payload = {
        "N": args.N,
        "B": str(b),
        "m_rho_sq": str(m2),
        "A_exact": _exact_str(coeffs.a),
        "A_decimal": _decimal(coeffs.a, 12),
        "lambda_exact": _exact_str(lam.value),
        "lambda_decimal": lam.decimal(10),
        "bracket_residual": str(residual),
        "f_prime_at_golden_point": str(rep.f_prime_at_star),
        "stationary": rep.stationary,
        "sign_changes": scan.sign_changes,
        "sign_change_intervals_q": [
            [math.exp(a), math.exp(b_)] for a, b_ in scan.sign_change_intervals
        ],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        print("key,value")
        for key, value in payload.items():
            print(f"{key},{json.dumps(value) if isinstance(value, list) else value}")
    else:
        print(f"N = {args.N}, m_ρ² = {m2}, B = {b}")
        print(f"Λ(N) = {payload['lambda_exact']} ≈ {payload['lambda_decimal']}")
        print(f"A = {payload['A_exact']} ≈ {payload['A_decimal']}")
        print(f"bracket residual = {payload['bracket_residual']}")
        print(f"F'(θ⋆) = {payload['f_prime_at_golden_point']}")
        print(f"stationary at the golden point: {'yes' if rep.stationary else 'NO'}")
        print(
            f"scan: {scan.sign_changes} sign change(s); q intervals "
            + str([[f"{a:.6f}", f"{c:.6f}"] for a, c in payload["sign_change_intervals_q"]])
        )
    return 0 if rep.stationary and scan.sign_changes == 1 else 1


def _read_points(path: str) -> list[tuple[Scalar, Scalar]]:
    points: list[tuple[Scalar, Scalar]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'q,kappa', got {raw!r}")
            if lineno == 1 and not _looks_numeric(parts[0]):
                continue  # header row
            points.append(
                (_parse_rational(parts[0], "q"), _parse_rational(parts[1], "kappa"))
            )
    return points


def _looks_numeric(text: str) -> bool:
    try:
        _parse_rational(text, "probe")
        return True
    except ValueError:
        return False


def _cmd_fit_ab(args: argparse.Namespace) -> int:
    points = _read_points(args.points)
    fit = quadratic_law_fit(points, args.N)
    payload = {
        "N": args.N,
        "A": _exact_str(fit.a) if not isinstance(fit.a, float) else repr(fit.a),
        "B": _exact_str(fit.b) if not isinstance(fit.b, float) else repr(fit.b),
        "A_decimal": _decimal(fit.a, 12),
        "B_decimal": _decimal(fit.b, 12),
        "residuals": [str(r) for r in fit.residuals],
        "max_abs_residual": fit.max_abs_residual,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        print("key,value")
        for key, value in payload.items():
            print(f"{key},{json.dumps(value) if isinstance(value, list) else value}")
    else:
        print(f"N = {args.N}, {len(points)} samples")
        print(f"A = {payload['A']} ≈ {payload['A_decimal']}")
        print(f"B = {payload['B']} ≈ {payload['B_decimal']}")
        print(f"residuals: {payload['residuals']} (max |r| = {fit.max_abs_residual:.6e})")
    return 0


def _cmd_golden_table(args: argparse.Namespace) -> int:
    rows = golden_power_table(args.max_m)
    if args.format == "json":
        print(
            json.dumps(
                [{"m": r.m, "a": r.a, "b": r.b} for r in rows], indent=2, sort_keys=True
            )
        )
    elif args.format == "table":
        width = len(str(rows[-1].a))
        print(f"{'m':>4}  {'a_m':>{width}}  {'b_m':>{width + 1}}")
        for r in rows:
            print(f"{r.m:>4}  {r.a:>{width}}  {r.b:>{width + 1}}")
    else:
        print("m,a,b")
        for r in rows:
            print(f"{r.m},{r.a},{r.b}")
    return 0


def _cmd_lambda(args: argparse.Namespace) -> int:
    lam = lambda_n(args.N)
    if args.format == "json":
        payload = {
            "N": args.N,
            "sqrt5_basis": str(lam.value),
            "golden_basis": str(lam.golden),
            "decimal": lam.decimal(args.digits),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        print("key,value")
        print(f"N,{args.N}")
        print(f"sqrt5_basis,{lam.value}")
        print(f"golden_basis,{lam.golden}")
        print(f"decimal,{lam.decimal(args.digits)}")
    else:
        print(f"Λ({args.N}) = {lam.value} = {lam.golden} ≈ {lam.decimal(args.digits)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldenschur",
        description="Exact golden-point identities and Schur-curvature checks "
        "for folded exponential families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("moments", help="power sums and folded moments at (N, q)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--q", required=True, help="rational like 1/2, decimal, or phi^-2 / qstar")
    p.add_argument("--format", choices=("exact", "decimal", "both"), default="both")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("schur", help="κ_Schur curve and property report for a family file")
    p.add_argument("hessian_file")
    p.add_argument("theta_min", type=float)
    p.add_argument("theta_max", type=float)
    p.add_argument("points", type=int)
    p.add_argument("--fit-law", action="store_true", help="fit κ = A·I1² + B·Var to the curve")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("stationarity", help="synthesize consistent (A, B) and check q⋆")
    p.add_argument("--N", type=int, default=12)
    p.add_argument("--m-rho-sq", default="2", help="collective normalization m_ρ²")
    p.add_argument("--B", required=True, help="law coefficient B (rational)")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_stationarity)

    p = sub.add_parser("fit-ab", help="identify (A, B) from a CSV of q,kappa rows")
    p.add_argument("--points", required=True, help="CSV file of q,kappa rows")
    p.add_argument("--N", type=int, default=12)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_fit_ab)

    p = sub.add_parser("golden-table", help="reduction table q⋆^m = a_m·q⋆ + b_m")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--format", choices=("table", "csv", "json"), default="csv")
    p.set_defaults(func=_cmd_golden_table)

    p = sub.add_parser("lambda", help="Λ(N) in both bases and decimal")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_lambda)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FamilyValidationError as exc:
        print("family validation failed:", file=sys.stderr)
        for violation in exc.violations:
            print(f"  - {violation}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
