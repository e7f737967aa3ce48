"""Command-line interface: certification, classification, family emission,
verification suites, and asymptotic-curve figures.

Subcommands and exit codes:

  check <poly>     0 hyperbolic, 1 not hyperbolic, 2 parse error,
                   3 the two certification methods disagree (internal error)
  index <poly>     0 with the classification report, 1 not hyperbolic, 2 parse
  family <kind>    0 with one JSON member per line, 2 bad parameters
  verify <suite>   0 iff every case passes, 1 on any failure, 2 bad arguments
  lemma1           0 iff the critical-point certification passes for all n
  curves           0 with the figure written, 1 not hyperbolic, 2 bad input

Reports are JSON on stdout; progress summaries go to stderr.  All output is
deterministic for fixed flags; random corpora take an explicit --seed that is
echoed inside the report.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .certify import Certificate, is_hyperbolic, is_hyperbolic_polar
from .classify import admissible_indices, classify_form
from .core import BinaryForm, NotHyperbolicError, ParseError, parse_form, format_form
from .families import FamilyMember, arnold, f_family, g_even, p_factorized, representatives
from .asymptotics import CurvePolyline, integrate_curve, polylines_to_csv, polylines_to_svg
from .verify import SUITE_NAMES, run_suite, suite_lemma1


def _cert_dict(cert: Certificate) -> dict:
    w = cert.witness
    return {
        "verdict": cert.verdict,
        "method": cert.method,
        "witness": None if w is None else [str(w[0]), str(w[1])],
    }


def _member_dict(m: FamilyMember) -> dict:
    return {
        "polynomial": format_form(m.form),
        "family_tag": m.family_tag,
        "params": list(m.params),
        "degree": m.form.degree,
        "expected_index": m.expected_index,
        "label": m.label,
    }


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_check(poly: str) -> int:
    """Certify hyperbolicity by both methods and report any disagreement."""
    try:
        f = parse_form(poly)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    h = is_hyperbolic(f)
    p = is_hyperbolic_polar(f)
    agree = h.verdict == p.verdict
    _emit(
        {
            "input": poly,
            "canonical": format_form(f),
            "degree": f.degree,
            "hessian": _cert_dict(h),
            "polar": _cert_dict(p),
            "agree": agree,
        }
    )
    if not agree:
        print("internal error: certification methods disagree", file=sys.stderr)
        return 3
    return 0 if h.is_hyperbolic else 1


def cmd_index(poly: str) -> int:
    """Classify a hyperbolic form: index, component rank, factor count."""
    try:
        f = parse_form(poly)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    try:
        rep = classify_form(f)
    except NotHyperbolicError as exc:
        _emit({"input": poly, "canonical": format_form(f), "error": str(exc)})
        return 1
    _emit(
        {
            "input": poly,
            "canonical": format_form(f),
            "degree": rep.degree,
            "index": rep.index,
            "component_rank": rep.component_rank,
            "factor_count": rep.factor_count,
            "admissible_indices": admissible_indices(rep.degree),
        }
    )
    return 0


def cmd_family(kind: str, params: list[int], even: bool) -> int:
    """Emit family members as polynomial text plus metadata, one per line."""
    try:
        if kind == "arnold":
            if len(params) != 2:
                raise ValueError("arnold takes two parameters: degree and factor count")
            members = [arnold(params[0], params[1])]
        elif kind == "pfact":
            if len(params) != 1:
                raise ValueError("pfact takes one parameter: k")
            members = [p_factorized(params[0], even=even)]
        elif kind == "g":
            if len(params) != 1:
                raise ValueError("g takes one parameter: n")
            members = [g_even(params[0])]
        elif kind == "f":
            if len(params) != 2:
                raise ValueError("f takes two parameters: n and k")
            members = [f_family(params[0], params[1], even=even)]
        elif kind == "reps":
            if len(params) != 1:
                raise ValueError("reps takes one parameter: the degree")
            members = representatives(params[0])
        else:
            raise ValueError(f"unknown family kind {kind!r}")
    except ValueError as exc:
        print(f"bad family parameters: {exc}", file=sys.stderr)
        return 2
    for m in members:
        _emit(_member_dict(m))
    return 0


def cmd_verify(suite: str, d_max: int | None, n_max: int | None, seed: int | None) -> int:
    """Run one verification suite (or all) and emit the JSON reports."""
    try:
        reports = run_suite(suite, d_max=d_max, n_max=n_max, seed=seed)
    except ValueError as exc:
        print(f"bad verify arguments: {exc}", file=sys.stderr)
        return 2
    for r in reports:
        print(r.summary_line(), file=sys.stderr)
        for case in r.cases:
            if not case["pass"]:
                print(
                    f"  FAIL {case['id']}: expected {case['expected']!r}, "
                    f"got {case['got']!r}",
                    file=sys.stderr,
                )
    _emit([r.to_dict() for r in reports])
    return 0 if all(r.ok for r in reports) else 1


def cmd_lemma1(n_max: int) -> int:
    """Certify the bump polynomial's critical point and maximum for each n."""
    try:
        report = suite_lemma1(n_max)
    except ValueError as exc:
        print(f"bad arguments: {exc}", file=sys.stderr)
        return 2
    print(report.summary_line(), file=sys.stderr)
    _emit(report.to_dict())
    return 0 if report.ok else 1


def _poly_roots_bisect(p, lo: float, hi: float, samples: int) -> list[float]:
    """Distinct real roots of a univariate polynomial on [lo, hi] by grid
    sign-change bisection.  Adequate here because hyperbolic forms never
    carry repeated real lines, so every root is simple."""
    cs = [float(c) for c in p.coeffs]

    def ev(t: float) -> float:
        acc = 0.0
        for c in reversed(cs):
            acc = acc * t + c
        return acc

    width = (hi - lo) / samples
    vals = [ev(lo + i * width) for i in range(samples + 1)]
    roots = []
    for i in range(samples + 1):
        if vals[i] == 0.0:
            roots.append(lo + i * width)
    for i in range(samples):
        va, vb = vals[i], vals[i + 1]
        if va == 0.0 or vb == 0.0 or (va > 0.0) == (vb > 0.0):
            continue
        a, b = lo + i * width, lo + (i + 1) * width
        for _ in range(200):
            mid = 0.5 * (a + b)
            if mid == a or mid == b:
                break
            vm = ev(mid)
            if vm == 0.0:
                a = b = mid
                break
            if (vm > 0.0) == (va > 0.0):
                a, va = mid, vm
            else:
                b = mid
        roots.append(0.5 * (a + b))
    roots.sort()
    return roots


def _line_directions(f: BinaryForm) -> list[tuple[float, float]]:
    """One unit vector per real zero line of f, each in the upper half plane."""
    dirs: list[tuple[float, float]] = []
    p = f.restrict("x=1")  # roots t give the lines y = t*x
    if not p.is_zero() and p.degree >= 1:
        lead = abs(float(p.coeffs[-1]))
        bound = 1.0 + max((abs(float(c)) for c in p.coeffs[:-1]), default=0.0) / lead
        for t in _poly_roots_bisect(p, -bound, bound, samples=4096):
            n = math.hypot(1.0, t)
            dirs.append((1.0 / n, t / n))
    if f.coeffs[-1] == 0:  # no y^degree term: x = 0 is a zero line
        dirs.append((0.0, 1.0))
    return dirs


def _figure_seeds(f: BinaryForm, viewport: float) -> list[tuple[float, float]]:
    """Deterministic seed set: a point on each ray of every zero line, plus a
    twelve-point ring to populate the rest of the viewport."""
    seeds: list[tuple[float, float]] = []
    r_line = 0.5 * viewport
    for ux, uy in _line_directions(f):
        seeds.append((r_line * ux, r_line * uy))
        seeds.append((-r_line * ux, -r_line * uy))
    r_ring = 0.625 * viewport
    for i in range(12):
        theta = 0.1 + i * math.pi / 6.0
        seeds.append((r_ring * math.cos(theta), r_ring * math.sin(theta)))
    return seeds


def figure_curves(
    f: BinaryForm, step: float = 1e-3, viewport: float = 2.0
) -> list[CurvePolyline]:
    """Both asymptotic-field integral curves through every figure seed."""
    curves = []
    max_len = 6.0 * viewport
    for seed in _figure_seeds(f, viewport):
        for field in ("F1", "F2"):
            curves.append(
                integrate_curve(
                    f, seed, field_choice=field, step=step,
                    max_len=max_len, viewport=viewport,
                )
            )
    return curves


def cmd_curves(poly: str, out: str, step: float, viewport: float) -> int:
    """Integrate the asymptotic fields of a hyperbolic form and write the
    figure as SVG (or the raw polylines as CSV)."""
    try:
        f = parse_form(poly)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    if step <= 0.0 or viewport <= 0.0:
        print("step and viewport must be positive", file=sys.stderr)
        return 2
    try:
        curves = figure_curves(f, step=step, viewport=viewport)
    except NotHyperbolicError as exc:
        print(f"not hyperbolic: {exc}", file=sys.stderr)
        return 1
    if out.endswith(".svg"):
        payload = polylines_to_svg(curves, viewport=viewport)
    elif out.endswith(".csv"):
        payload = polylines_to_csv(curves)
    else:
        print("output path must end in .svg or .csv", file=sys.stderr)
        return 2
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(payload)
    n_pts = sum(len(c.points) for c in curves)
    print(f"wrote {out}: {len(curves)} curves, {n_pts} vertices", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hypforms",
        description="Certification and classification of saddle-type binary forms.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="certify hyperbolicity by both methods")
    p_check.add_argument("poly", help='polynomial text, e.g. "x^3 - x*y^2"')

    p_index = sub.add_parser("index", help="winding index and component data")
    p_index.add_argument("poly", help="polynomial text")

    p_family = sub.add_parser("family", help="emit family members as JSON lines")
    p_family.add_argument("kind", choices=("arnold", "pfact", "g", "f", "reps"))
    p_family.add_argument("params", type=int, nargs="*", help="integer parameters")
    p_family.add_argument("--even", action="store_true",
                          help="even-degree variant (pfact and f kinds)")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--d-max", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)

    p_lemma1 = sub.add_parser("lemma1", help="bump-polynomial critical point check")
    p_lemma1.add_argument("--n-max", type=int, default=40)

    p_curves = sub.add_parser("curves", help="asymptotic-curve figure (SVG/CSV)")
    p_curves.add_argument("--poly", required=True, help="polynomial text")
    p_curves.add_argument("--out", required=True, help="output path (.svg or .csv)")
    p_curves.add_argument("--step", type=float, default=1e-3)
    p_curves.add_argument("--viewport", type=float, default=2.0)
    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args.poly)
    if args.command == "index":
        return cmd_index(args.poly)
    if args.command == "family":
        return cmd_family(args.kind, args.params, args.even)
    if args.command == "verify":
        return cmd_verify(args.suite, args.d_max, args.n_max, args.seed)
    if args.command == "lemma1":
        return cmd_lemma1(args.n_max)
    if args.command == "curves":
        return cmd_curves(args.poly, args.out, args.step, args.viewport)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
