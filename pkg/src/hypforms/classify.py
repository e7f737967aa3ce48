"""Connected-component classification of hyperbolic forms.

The exact invariant is the count m of distinct real linear factors; the
index of the second-derivative curve is 2 - m, and two hyperbolic forms
of equal degree lie in the same component exactly when their indexes
agree.  Two float winding numbers cross-check the exact index: one for
the triple of second partials along the unit circle, one for the jet
(value, first and second angular derivative) projected into the plane
2*D*u + w = 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import BinaryForm, NotHyperbolicError, rotational_derivative
from .certify import require_hyperbolic, sturm_count


class RefinementError(RuntimeError):
    """Adaptive sampling hit its bisection budget or a residual bound."""


_MAX_DEPTH = 24
_RESIDUAL = 0.1  # accepted distance to the nearest whole revolution


def count_real_linear_factors(f: BinaryForm) -> int:
    """Number of distinct real lines in the zero set of f."""
    if f.is_zero():
        raise ValueError("zero form")
    line = f.restrict("x=1")
    roots = sturm_count(line) if line.degree >= 1 else 0
    # the line x = 0 is a factor exactly when the y^D coefficient vanishes
    return roots + (1 if f.coeffs[-1] == 0 else 0)


def index_gamma(f: BinaryForm) -> int:
    """Index of the closed curve of second partials; equals 2 - m for a
    hyperbolic form with m distinct real linear factors."""
    require_hyperbolic(f)
    return 2 - count_real_linear_factors(f)


def admissible_indices(degree: int) -> list[int]:
    """Indexes realized by hyperbolic forms of the given degree, descending."""
    if degree < 3:
        raise ValueError("admissible index list needs degree >= 3")
    start = 0 if degree % 2 == 0 else -1
    return list(range(start, 1 - degree, -2))


def num_components(degree: int) -> int:
    """(D-1)/2 components for odd D, D/2 for even D.

    For degree 4 this returns the even-degree formula value 2 even though
    the space is connected; classification by index is reliable from
    degree 5 (odd) and degree 6 (even) where the representative
    constructions below exist.
    """
    if degree < 3:
        raise ValueError("component count needs degree >= 3")
    return (degree - 1) // 2 if degree % 2 else degree // 2


def same_component(f: BinaryForm, g: BinaryForm) -> bool:
    if f.degree != g.degree:
        raise ValueError("forms of different degree are never comparable")
    return index_gamma(f) == index_gamma(g)


@dataclass(frozen=True)
class ComponentReport:
    degree: int
    index: int
    component_rank: int
    factor_count: int

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "index": self.index,
            "component_rank": self.component_rank,
            "factor_count": self.factor_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def classify_form(f: BinaryForm) -> ComponentReport:
    """Certify, compute index and rank among the admissible indexes."""
    idx = index_gamma(f)
    ranks = admissible_indices(f.degree)
    return ComponentReport(
        degree=f.degree,
        index=idx,
        component_rank=ranks.index(idx),
        factor_count=count_real_linear_factors(f),
    )


# ---------------------------------------------------------------------------
# numeric winding cross-checks
# ---------------------------------------------------------------------------

def _float_eval(f: BinaryForm):
    d = f.degree
    cs = [float(c) for c in f.coeffs]

    def ev(x: float, y: float) -> float:
        acc = 0.0
        for i, c in enumerate(cs):
            if c:
                acc += c * x ** (d - i) * y ** i
        return acc

    return ev


def _arg_delta(u: tuple[float, float], v: tuple[float, float]) -> float:
    return math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])


def _winding_turns(vec, lo: float, hi: float, samples: int) -> float:
    """Accumulated argument of the closed plane curve vec over [lo, hi],
    in revolutions.  Segments with an argument step of pi/2 or more are
    bisected, at most _MAX_DEPTH times each."""

    def accum(a: float, b: float, va, vb, depth: int) -> float:
        d = _arg_delta(va, vb)
        if abs(d) < math.pi / 2:
            return d
        if depth >= _MAX_DEPTH:
            raise RefinementError("winding bisection budget exhausted")
        m = 0.5 * (a + b)
        vm = vec(m)
        return accum(a, m, va, vm, depth + 1) + accum(m, b, vm, vb, depth + 1)

    total = 0.0
    prev_t = lo
    prev_v = vec(lo)
    for k in range(1, samples + 1):
        t = lo + (hi - lo) * k / samples
        v = vec(t)
        total += accum(prev_t, t, prev_v, v, 0)
        prev_t, prev_v = t, v
    return total / (2.0 * math.pi)


def _round_turns(turns: float) -> int:
    k = round(turns)
    if abs(turns - k) >= _RESIDUAL:
        raise RefinementError(f"winding residual too large: {turns}")
    return int(k)


def winding_gamma_numeric(f: BinaryForm) -> int:
    """Winding of (f_xx - f_yy, 2*f_xy) along the unit circle; must equal
    index_gamma exactly after rounding."""
    require_hyperbolic(f)
    fx = f.partial_x()
    fy = f.partial_y()
    exx = _float_eval(fx.partial_x())
    exy = _float_eval(fx.partial_y())
    eyy = _float_eval(fy.partial_y())

    def vec(phi: float) -> tuple[float, float]:
        x, y = math.cos(phi), math.sin(phi)
        a, b, c = exx(x, y), exy(x, y), eyy(x, y)
        if a * c - b * b >= 0.0:
            raise RefinementError("sample left the indefinite cone")
        return (a - c, 2.0 * b)

    samples = 64 + 16 * f.degree
    return _round_turns(_winding_turns(vec, 0.0, 2.0 * math.pi, samples))


def winding_alpha_numeric(f: BinaryForm) -> int:
    """Winding of the circle jet (value, angular derivative, second angular
    derivative) projected to the plane 2*D*u + w = 0; equals index_gamma - 2."""
    require_hyperbolic(f)
    d = f.degree
    ev0 = _float_eval(f)
    r1 = rotational_derivative(f)
    ev1 = _float_eval(r1)
    ev2 = _float_eval(rotational_derivative(r1))

    def vec(phi: float) -> tuple[float, float]:
        x, y = math.cos(phi), math.sin(phi)
        u, v, w = ev0(x, y), ev1(x, y), ev2(x, y)
        if d * d * u * u + d * u * w - (d - 1) * v * v >= 0.0:
            raise RefinementError("sample left the hyperbolicity cone")
        # in-plane coordinates: component along (1, 0, -2D) and along (0, 1, 0)
        return (u - 2.0 * d * w, v)

    samples = 64 + 16 * d
    return _round_turns(_winding_turns(vec, 0.0, 2.0 * math.pi, samples))


def zeros_vs_critical_points(f: BinaryForm) -> tuple[int, int]:
    """Circle-zero count of f and critical-point count of its circle
    restriction; both equal twice a linear-factor count and must agree for
    hyperbolic f."""
    require_hyperbolic(f)
    zeros = 2 * count_real_linear_factors(f)
    crit = 2 * count_real_linear_factors(rotational_derivative(f))
    return zeros, crit


@dataclass(frozen=True)
class CurveSample:
    """One angular sample of both cross-check curves."""

    phi: float
    second_partials: tuple[float, float, float]  # (f_xx, f_xy, f_yy) on the circle
    circle_jet: tuple[float, float, float]       # (f, f', f'') on the circle


def curve_samples(f: BinaryForm, n: int) -> list[CurveSample]:
    """n uniform samples; raises if any sample violates the defining cones."""
    require_hyperbolic(f)
    d = f.degree
    fx = f.partial_x()
    fy = f.partial_y()
    exx = _float_eval(fx.partial_x())
    exy = _float_eval(fx.partial_y())
    eyy = _float_eval(fy.partial_y())
    ev0 = _float_eval(f)
    r1 = rotational_derivative(f)
    ev1 = _float_eval(r1)
    ev2 = _float_eval(rotational_derivative(r1))
    out = []
    for k in range(n):
        phi = 2.0 * math.pi * k / n
        x, y = math.cos(phi), math.sin(phi)
        a, b, c = exx(x, y), exy(x, y), eyy(x, y)
        u, v, w = ev0(x, y), ev1(x, y), ev2(x, y)
        if a * c - b * b >= 0.0:
            raise RefinementError(f"second-partial sample at phi={phi} left the cone")
        if d * d * u * u + d * u * w - (d - 1) * v * v >= 0.0:
            raise RefinementError(f"jet sample at phi={phi} left the cone")
        out.append(CurveSample(phi, (a, b, c), (u, v, w)))
    return out
