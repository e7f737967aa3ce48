"""Asymptotic direction fields of saddle-type binary forms.

A hyperbolic form has a sign-indefinite second fundamental form at every
point away from the origin, so two transverse null-direction line fields
live on the punctured plane.  This module evaluates that quadratic form,
extracts the two direction fields, measures their half-integer turning
index around the origin, proves positivity of the discriminants that
arise when a line-product form is multiplied by an even rotational
padding, and integrates/renders the fields' integral curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .certify import hessian, is_hyperbolic, is_negative_form, require_hyperbolic
from .classify import RefinementError, count_real_linear_factors
from .core import BinaryForm, Rat

_MAX_DEPTH = 24


@dataclass(frozen=True)
class QuadFormAt:
    """Quadratic form a*dx^2 + 2b*dx*dy + c*dy^2 attached to a base point."""

    a: float
    b: float
    c: float
    at: tuple[float, float]

    @property
    def discriminant(self) -> float:
        return self.b * self.b - self.a * self.c


@dataclass(frozen=True)
class CurvePolyline:
    """Integral curve of one null-direction field, as an ordered polyline.

    Every vertex except the last satisfies: the segment leaving it points
    along a null direction of the quadratic form evaluated at that vertex.
    """

    points: tuple[tuple[float, float], ...]
    field_choice: str
    seed: tuple[float, float]


@dataclass(frozen=True)
class IsotopyCheck:
    """Verdict for one deformation family over a grid of parameter values.

    verdict is True iff the family's quadratic form has strictly positive
    discriminant off the origin at every grid value; failed_ts lists the
    grid values where that certification did not hold.
    """

    kind: str
    t_grid: tuple[Fraction, ...]
    verdict: bool
    failed_ts: tuple[Fraction, ...] = ()


@lru_cache(maxsize=512)
def _second_partials(f: BinaryForm) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
    fx = f.partial_x()
    fy = f.partial_y()
    return fx.partial_x(), fx.partial_y(), fy.partial_y()


def second_fundamental_form(f: BinaryForm, x: float, y: float) -> QuadFormAt:
    """Second partial derivatives of f at (x, y), evaluated exactly over the
    rationals and only then rounded to float.  The base point must not be
    the origin."""
    if f.degree < 2:
        raise ValueError("second partials need degree >= 2")
    if x == 0 and y == 0:
        raise ValueError("base point must differ from the origin")
    fxx, fxy, fyy = _second_partials(f)
    qx, qy = Rat(x), Rat(y)
    return QuadFormAt(
        float(fxx.eval(qx, qy)),
        float(fxy.eval(qx, qy)),
        float(fyy.eval(qx, qy)),
        (float(x), float(y)),
    )


def _null_vectors(a: float, b: float, c: float) -> tuple[tuple[float, float], tuple[float, float]]:
    # Solutions (u, v) of a u^2 + 2b uv + c v^2 = 0, discriminant > 0 required.
    # The large-magnitude root numerator s avoids cancellation; the second
    # root comes from the root product c/a.
    disc = b * b - a * c
    if disc <= 0.0:
        raise ValueError("no real null directions: discriminant <= 0")
    r = math.sqrt(disc)
    if a == 0.0:
        return (1.0, 0.0), (-c, 2.0 * b)
    s = -(b + r) if b >= 0.0 else -b + r
    return (s, a), (c, s)


def asymptotic_directions(q: QuadFormAt) -> tuple[float, float]:
    """The two null directions of q as angles in [0, pi), ascending.
    Scaling q by a nonzero constant leaves the result unchanged."""
    v1, v2 = _null_vectors(q.a, q.b, q.c)
    angles = sorted(math.atan2(v[1], v[0]) % math.pi for v in (v1, v2))
    return angles[0], angles[1]


def asymptotic_residual(q: QuadFormAt, direction: tuple[float, float]) -> float:
    """Normalized magnitude of q on a direction: |q(u, v)| for the unit
    vector along `direction`, divided by the coefficient norm of q.
    Zero exactly when the direction is null for q."""
    u, v = direction
    n = math.hypot(u, v)
    if n == 0.0:
        raise ValueError("direction must be nonzero")
    u, v = u / n, v / n
    num = abs(q.a * u * u + 2.0 * q.b * u * v + q.c * v * v)
    den = math.sqrt(q.a * q.a + 4.0 * q.b * q.b + q.c * q.c)
    return num / den if den > 0.0 else num


def poincare_index_origin(f: BinaryForm) -> Fraction:
    """Total turning, in revolutions, of one null-direction field along the
    unit circle: a half-integer (line directions live modulo pi).  Equals
    half the winding of the degenerate-cone curve of f."""
    require_hyperbolic(f)
    fxx, fxy, fyy = _second_partials(f)
    cache: dict[float, tuple[float, float]] = {}

    def dirs(phi: float) -> tuple[float, float]:
        got = cache.get(phi)
        if got is not None:
            return got
        x, y = Rat(math.cos(phi)), Rat(math.sin(phi))
        a = float(fxx.eval(x, y))
        b = float(fxy.eval(x, y))
        c = float(fyy.eval(x, y))
        if b * b - a * c <= 0.0:
            raise RefinementError("degenerate directions on the unit circle")
        v1, v2 = _null_vectors(a, b, c)
        out = (math.atan2(v1[1], v1[0]), math.atan2(v2[1], v2[0]))
        cache[phi] = out
        return out

    def jumps(theta: float, phi: float) -> tuple[float, float]:
        # Signed angle from theta to each candidate direction, modulo pi,
        # ordered by magnitude.
        ds = []
        for cand in dirs(phi):
            d = (cand - theta) % math.pi
            if d > math.pi / 2.0:
                d -= math.pi
            ds.append(d)
        ds.sort(key=abs)
        return ds[0], ds[1]

    def unambiguous(d_near: float, d_far: float) -> bool:
        return abs(d_near) < math.pi / 8.0 and abs(d_far) >= 2.0 * abs(d_near) + 1e-3

    def advance(theta: float, phi0: float, phi1: float, depth: int) -> float:
        # A step is accepted only when the nearest candidate clearly beats
        # the other root AND the jump composed through the midpoint agrees,
        # which rules out a fast near-pi swing aliasing to a small jump.
        d1, d2 = jumps(theta, phi1)
        if unambiguous(d1, d2):
            mid = 0.5 * (phi0 + phi1)
            m1, m2 = jumps(theta, mid)
            if unambiguous(m1, m2):
                e1, _ = jumps(theta + m1, phi1)
                if abs(m1 + e1 - d1) < 1e-9:
                    return theta + d1
        if depth >= _MAX_DEPTH:
            raise RefinementError("direction lift failed to converge")
        mid = 0.5 * (phi0 + phi1)
        theta_mid = advance(theta, phi0, mid, depth + 1)
        return advance(theta_mid, mid, phi1, depth + 1)

    n = 256 + 64 * f.degree
    start = min(d % math.pi for d in dirs(0.0))
    theta = start
    for i in range(n):
        phi0 = 2.0 * math.pi * i / n
        phi1 = 2.0 * math.pi * (i + 1) / n
        theta = advance(theta, phi0, phi1, 0)
    half_units = (theta - start) / math.pi
    k = round(half_units)
    if abs(half_units - k) >= 0.2:
        raise RefinementError(
            f"direction turning {half_units:.3f} half-revolutions is not near a half-integer"
        )
    return Fraction(k, 2)


def _unit(u: float, v: float) -> tuple[float, float]:
    n = math.hypot(u, v)
    return u / n, v / n


def integrate_curve(
    f: BinaryForm,
    seed: tuple[float, float],
    field_choice: str = "F1",
    step: float = 1e-3,
    max_len: float = 10.0,
    viewport: float = 2.0,
    standoff: float = 1e-3,
) -> CurvePolyline:
    """Integral curve of one null-direction field through `seed`, grown in
    both senses and emitted as a single polyline.

    The field label is fixed at the seed: F1 is the null direction with the
    smaller angle in [0, pi), F2 the larger.  Each arm stops on leaving the
    square |x|, |y| <= viewport, on entering the disk of radius `standoff`
    around the origin (the only singular point), or at arc length
    max_len / 2.  Every vertex's outgoing segment points along a null
    direction evaluated at that vertex, so the per-vertex form residual is
    at rounding level.
    """
    require_hyperbolic(f)
    sx, sy = float(seed[0]), float(seed[1])
    if sx == 0.0 and sy == 0.0:
        raise ValueError("seed must differ from the origin")
    if field_choice not in ("F1", "F2"):
        raise ValueError("field_choice must be 'F1' or 'F2'")
    if step <= 0.0 or max_len <= 0.0:
        raise ValueError("step and max_len must be positive")
    fxx, fxy, fyy = _second_partials(f)

    def null_dirs(x: float, y: float) -> tuple[tuple[float, float], tuple[float, float]]:
        # float evaluation: direction error stays at rounding level, and the
        # stepper calls this once or more per vertex
        a = fxx.eval_float(x, y)
        b = fxy.eval_float(x, y)
        c = fyy.eval_float(x, y)
        if b * b - a * c <= 0.0:
            raise RefinementError(
                f"degenerate direction field at ({x!r}, {y!r}); "
                "cannot happen for a certified hyperbolic form"
            )
        v1, v2 = _null_vectors(a, b, c)
        return _unit(*v1), _unit(*v2)

    def aligned(x: float, y: float, ref: tuple[float, float]) -> tuple[float, float]:
        # Null direction at (x, y) closest to ref, sign-matched to ref.
        best = None
        best_dot = 0.0
        for w in null_dirs(x, y):
            d = w[0] * ref[0] + w[1] * ref[1]
            if abs(d) > abs(best_dot):
                best, best_dot = w, d
        if best_dot < 0.0:
            best = (-best[0], -best[1])
            best_dot = -best_dot
        if best_dot <= math.cos(math.pi / 4.0):
            raise RefinementError("direction lift broke between consecutive points")
        return best

    w1, w2 = null_dirs(sx, sy)
    by_angle = sorted(
        (w1, w2), key=lambda w: math.atan2(w[1], w[0]) % math.pi
    )
    d0 = by_angle[0] if field_choice == "F1" else by_angle[1]
    arm_steps = int((max_len / 2.0) / step)

    def grow_forward() -> list[tuple[float, float]]:
        pts = [(sx, sy)]
        x, y = sx, sy
        d = d0
        for _ in range(arm_steps):
            nx, ny = x + step * d[0], y + step * d[1]
            if math.hypot(nx, ny) < standoff:
                break
            pts.append((nx, ny))
            if abs(nx) > viewport or abs(ny) > viewport:
                break
            x, y = nx, ny
            d = aligned(x, y, d)
        return pts

    def grow_backward() -> list[tuple[float, float]]:
        # Build predecessors of the seed so that, in final order, each
        # vertex's outgoing segment is the null direction at that vertex:
        # solve prev + step * dir(prev) = cur by fixed-point iteration.
        pts: list[tuple[float, float]] = []
        x, y = sx, sy
        d = d0
        for _ in range(arm_steps):
            u = aligned(x - step * d[0], y - step * d[1], d)
            for _ in range(7):
                u_next = aligned(x - step * u[0], y - step * u[1], u)
                if math.hypot(u_next[0] - u[0], u_next[1] - u[1]) < 1e-15:
                    u = u_next
                    break
                u = u_next
            px, py = x - step * u[0], y - step * u[1]
            if math.hypot(px, py) < standoff:
                break
            pts.append((px, py))
            if abs(px) > viewport or abs(py) > viewport:
                break
            x, y = px, py
            d = u
        return pts

    back = grow_backward()
    fwd = grow_forward()
    points = tuple(reversed(back)) + tuple(fwd)
    return CurvePolyline(points=points, field_choice=field_choice, seed=(sx, sy))


def _even_power_sum_exponent(q: BinaryForm) -> int:
    # Recognize x^(2n) + y^(2n); return n, else raise.
    d = q.degree
    if d < 2 or d % 2 != 0:
        raise ValueError("padding factor must be x^(2n) + y^(2n) with n >= 1")
    want = BinaryForm.monomial(d, 0) + BinaryForm.monomial(d, d)
    if q != want:
        raise ValueError("padding factor must be x^(2n) + y^(2n) with n >= 1")
    return d // 2


def _validate_pair(p: BinaryForm, q: BinaryForm) -> int:
    n = _even_power_sum_exponent(q)
    if p.degree < 2:
        raise ValueError("line-product factor must have degree >= 2")
    if count_real_linear_factors(p) != p.degree:
        raise ValueError(
            "first factor must be a product of distinct real linear forms"
        )
    return n


def _mixed_coeffs(
    p: BinaryForm, q: BinaryForm
) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
    # Coefficients (with the 2b middle convention) of the quadratic form
    # obtained by distributing second derivatives of the product p*q across
    # both factors symmetrically, omitting the p * (second partials of q)
    # block.
    px, py = p.partial_x(), p.partial_y()
    qx, qy = q.partial_x(), q.partial_y()
    pxx, pxy, pyy = _second_partials(p)
    a = q * pxx + Rat(2) * (px * qx)
    b = q * pxy + (px * qy + py * qx)
    c = q * pyy + Rat(2) * (py * qy)
    return a, b, c


def discriminant_omega(p: BinaryForm, q: BinaryForm) -> BinaryForm:
    """Exact discriminant b^2 - a*c of the cross-term quadratic form built
    from a distinct-real-lines factor p and an even padding q = x^(2n) + y^(2n).

    Before assembling the discriminant this verifies, as an exact polynomial
    identity, that the mixed second-derivative combination
    p_xx p_y q_y + p_yy p_x q_x - p_xy (p_x q_y + p_y q_x) equals
    (2n / (deg p - 1)) * q * (Hessian of p)."""
    n = _validate_pair(p, q)
    px, py = p.partial_x(), p.partial_y()
    qx, qy = q.partial_x(), q.partial_y()
    pxx, pxy, pyy = _second_partials(p)
    t_comb = pxx * py * qy + pyy * px * qx - pxy * (px * qy + py * qx)
    expected = Rat(2 * n, p.degree - 1) * (q * hessian(p))
    if t_comb != expected:
        raise ValueError("mixed second-derivative identity failed")
    a, b, c = _mixed_coeffs(p, q)
    return b * b - a * c


def check_isotopies(
    p: BinaryForm,
    q: BinaryForm,
    t_grid: tuple[Fraction, ...] = (
        Fraction(0),
        Fraction(1, 4),
        Fraction(1, 2),
        Fraction(3, 4),
        Fraction(1),
    ),
) -> list[IsotopyCheck]:
    """Certify three deformation families joining quadratic forms built from
    p (distinct real lines) and q = x^(2n) + y^(2n), at each grid value:

    - phi: cross-term form plus t times p * (second fundamental form of q);
      at t = 1 this is the full second fundamental form of p*q.
    - psi: q * (second fundamental form of p) plus 2t times the symmetrized
      first-derivative product; at t = 1 this is the cross-term form.
    - gamma_t: the scalar (t + (1-t) q) times the second fundamental form
      of p; the scalar is positive away from the origin for t in [0, 1].

    Each verdict is True iff the family's discriminant is strictly positive
    off the origin at every grid value (proved exactly)."""
    _validate_pair(p, q)
    grid = tuple(Fraction(t) for t in t_grid)
    for t in grid:
        if t < 0 or t > 1:
            raise ValueError("grid values must lie in [0, 1]")
    # Verifies the mixed-derivative identity as a side effect.
    discriminant_omega(p, q)

    px, py = p.partial_x(), p.partial_y()
    qx, qy = q.partial_x(), q.partial_y()
    pxx, pxy, pyy = _second_partials(p)
    qxx, qxy, qyy = _second_partials(q)
    oa, ob, oc = _mixed_coeffs(p, q)

    def positive_off_origin(disc: BinaryForm) -> bool:
        ok, _ = is_negative_form(-disc)
        return ok

    checks = []

    failed = []
    for t in grid:
        a = oa + (t * p) * qxx
        b = ob + (t * p) * qxy
        c = oc + (t * p) * qyy
        if not positive_off_origin(b * b - a * c):
            failed.append(t)
    checks.append(IsotopyCheck("phi", grid, not failed, tuple(failed)))

    failed = []
    for t in grid:
        a = q * pxx + (2 * t) * (px * qx)
        b = q * pxy + t * (px * qy + py * qx)
        c = q * pyy + (2 * t) * (py * qy)
        if not positive_off_origin(b * b - a * c):
            failed.append(t)
    checks.append(IsotopyCheck("psi", grid, not failed, tuple(failed)))

    # gamma_t scales the second fundamental form of p by t + (1-t)q, which
    # is positive off the origin for every t in [0, 1] (q is a sum of even
    # powers), so its discriminant sign reduces to hyperbolicity of p.
    p_ok = is_hyperbolic(p).is_hyperbolic
    failed = [] if p_ok else list(grid)
    checks.append(IsotopyCheck("gamma_t", grid, not failed, tuple(failed)))
    return checks


_FIELD_COLORS = {"F1": "#1f77b4", "F2": "#d62728"}


def _svg_path(points, viewport: float, size: int) -> str:
    scale = size / (2.0 * viewport)
    coords = []
    stride = max(1, len(points) // 800)
    sampled = list(points[::stride])
    if sampled[-1] != points[-1]:
        sampled.append(points[-1])
    for x, y in sampled:
        coords.append(f"{(x + viewport) * scale:.4f},{(viewport - y) * scale:.4f}")
    return "M " + " L ".join(coords)


def polylines_to_svg(
    curves: list[CurvePolyline], viewport: float = 2.0, size: int = 640
) -> str:
    """Deterministic SVG document with one path per polyline; paths carry
    their seed and field label as data attributes and are colored by field."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="0" y1="{size / 2:.1f}" x2="{size}" y2="{size / 2:.1f}" '
        'stroke="#dddddd" stroke-width="1"/>',
        f'<line x1="{size / 2:.1f}" y1="0" x2="{size / 2:.1f}" y2="{size}" '
        'stroke="#dddddd" stroke-width="1"/>',
    ]
    for curve in curves:
        color = _FIELD_COLORS[curve.field_choice]
        seed_attr = f"{curve.seed[0]!r},{curve.seed[1]!r}"
        parts.append(
            f'<path d="{_svg_path(curve.points, viewport, size)}" fill="none" '
            f'stroke="{color}" stroke-width="1" data-seed="{seed_attr}" '
            f'data-field="{curve.field_choice}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def polylines_to_csv(curves: list[CurvePolyline]) -> str:
    """CSV rendering with columns curve_id, field, x, y (full resolution)."""
    lines = ["curve_id,field,x,y"]
    for i, curve in enumerate(curves):
        for x, y in curve.points:
            lines.append(f"{i},{curve.field_choice},{x!r},{y!r}")
    return "\n".join(lines) + "\n"
