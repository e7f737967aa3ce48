"""Null-direction fields: pointwise data, index halving, curve integration,
cross-term discriminants, and deformation checks."""

import math
from fractions import Fraction

import pytest

from hypforms import (
    RefinementError,
    asymptotic_directions,
    asymptotic_residual,
    check_isotopies,
    discriminant_omega,
    hessian,
    index_gamma,
    integrate_curve,
    is_negative_form,
    parse_form,
    poincare_index_origin,
    polylines_to_csv,
    polylines_to_svg,
    second_fundamental_form,
)

F3 = parse_form("x^3 - x*y^2")        # three lines: x=0, y=+-x
F4 = parse_form("x^3*y - x*y^3")      # four lines: x=0, y=0, y=+-x


# ------------------------------------------------------ pointwise quadratic


def test_second_fundamental_form_values():
    q = second_fundamental_form(F3, 1.0, 0.0)
    assert (q.a, q.b, q.c) == (6.0, 0.0, -2.0)
    assert q.at == (1.0, 0.0)
    assert q.discriminant > 0


def test_second_fundamental_form_rejects_origin():
    with pytest.raises(ValueError):
        second_fundamental_form(F3, 0.0, 0.0)


def test_asymptotic_directions_are_null():
    for x, y in ((1.0, 0.0), (0.7, -1.3), (2.0, 0.5)):
        q = second_fundamental_form(F4, x, y)
        th1, th2 = asymptotic_directions(q)
        assert 0.0 <= th1 < th2 < math.pi
        for th in (th1, th2):
            assert asymptotic_residual(q, (math.cos(th), math.sin(th))) < 1e-12


def test_asymptotic_directions_need_positive_discriminant():
    q = second_fundamental_form(parse_form("x^2 + y^2"), 1.0, 0.0)
    with pytest.raises(ValueError):
        asymptotic_directions(q)


# ----------------------------------------------------------- index halving


def test_poincare_index_small_cases():
    assert poincare_index_origin(F3) == Fraction(-1, 2)
    assert poincare_index_origin(F4) == Fraction(-1)
    assert poincare_index_origin(parse_form("x*y")) == 0


def test_poincare_index_halves_gamma_index():
    for text in ("x^3 - x*y^2", "x^3*y - x*y^3", "x^2 - 5*y^2"):
        f = parse_form(text)
        assert poincare_index_origin(f) == Fraction(index_gamma(f), 2)


def test_poincare_rejects_non_hyperbolic():
    from hypforms import NotHyperbolicError

    with pytest.raises(NotHyperbolicError):
        poincare_index_origin(parse_form("x^4 + y^4"))


# ----------------------------------------------------- ray-field parity law


def _transport_half_loop(f, phi0: float, theta0: float, steps: int = 4096) -> float:
    """Continue a null direction mod pi along the half circle phi0 ->
    phi0 + pi and return the lifted angle at the antipode."""
    theta = theta0
    for i in range(1, steps + 1):
        phi = phi0 + math.pi * i / steps
        q = second_fundamental_form(f, math.cos(phi), math.sin(phi))
        cands = asymptotic_directions(q)
        best = None
        for c in cands:
            for lift in (c, c + math.pi, c - math.pi, c + 2 * math.pi, c - 2 * math.pi):
                d = lift - theta
                if best is None or abs(d) < abs(best[0]):
                    best = (d, lift)
        assert abs(best[0]) < math.pi / 4, "transport step too coarse"
        theta = theta + best[0]
    return theta


def _ray_field_swap(f, line_angle: float) -> bool:
    """True when transporting the line's own null direction to the antipodal
    ray lands on the other field."""
    q = second_fundamental_form(f, math.cos(line_angle), math.sin(line_angle))
    th1, th2 = asymptotic_directions(q)
    radial = line_angle % math.pi
    start = min((th1, th2), key=lambda t: min(abs(t - radial), math.pi - abs(t - radial)))
    end = _transport_half_loop(f, line_angle, start)
    other = th2 if start == th1 else th1
    dist_same = min(abs((end - start) % math.pi), math.pi - abs((end - start) % math.pi))
    dist_other = min(abs((end - other) % math.pi), math.pi - abs((end - other) % math.pi))
    assert min(dist_same, dist_other) < 1e-6
    return dist_other < dist_same


def test_even_degree_rays_share_a_field():
    # the two rays of each zero line of an even form belong to one field
    for angle in (0.0, math.pi / 2, math.pi / 4, -math.pi / 4):
        assert not _ray_field_swap(F4, angle)


def test_odd_degree_rays_swap_fields():
    for angle in (math.pi / 2, math.pi / 4, -math.pi / 4):
        assert _ray_field_swap(F3, angle)


# ------------------------------------------------------------- integration


def test_integrate_stays_on_zero_line():
    # seeds exactly on a zero line: the polyline must stay on the line
    for f, seed, normal in (
        (F3, (1.0, 1.0), (1.0, -1.0)),
        (F3, (0.0, 1.2), (1.0, 0.0)),
        (F4, (-0.8, 0.8), (1.0, 1.0)),
        (F4, (1.1, 0.0), (0.0, 1.0)),
    ):
        found = False
        for field in ("F1", "F2"):
            c = integrate_curve(f, seed, field_choice=field, step=1e-3)
            off = max(abs(p[0] * normal[0] + p[1] * normal[1]) for p in c.points)
            if off == 0.0:
                found = True
        assert found, f"no field keeps {seed} on its line for {f}"


def test_integrate_residual_invariant():
    f = F4
    fxx = f.partial_x().partial_x()
    fxy = f.partial_x().partial_y()
    fyy = f.partial_y().partial_y()
    c = integrate_curve(f, (0.9, 0.3), field_choice="F2", step=1e-3, max_len=2.0)
    assert len(c.points) > 100
    worst = 0.0
    for i in range(len(c.points) - 1):
        x, y = c.points[i]
        dx = c.points[i + 1][0] - x
        dy = c.points[i + 1][1] - y
        n = math.hypot(dx, dy)
        u, v = dx / n, dy / n
        a = fxx.eval_float(x, y)
        b = fxy.eval_float(x, y)
        cc = fyy.eval_float(x, y)
        r = abs(a * u * u + 2 * b * u * v + cc * v * v) / math.sqrt(
            a * a + 4 * b * b + cc * cc
        )
        worst = max(worst, r)
    assert worst < 1e-9


def test_integrate_termination_modes():
    # viewport exit: at most one vertex beyond the box on each arm
    c = integrate_curve(F3, (1.0, 1.0), viewport=1.5, max_len=50.0)
    outside = sum(1 for p in c.points if abs(p[0]) > 1.5 or abs(p[1]) > 1.5)
    assert outside <= 2
    # origin standoff: approaching arm stops at radius >= standoff
    c2 = integrate_curve(F3, (0.0, 0.5), standoff=1e-2)
    assert all(math.hypot(*p) >= 1e-2 for p in c2.points)
    # arc-length cap
    c3 = integrate_curve(F3, (1.0, 1.0), max_len=0.5, viewport=50.0)
    length = sum(
        math.hypot(c3.points[i + 1][0] - c3.points[i][0], c3.points[i + 1][1] - c3.points[i][1])
        for i in range(len(c3.points) - 1)
    )
    assert length <= 0.5 + 2e-3


def test_integrate_validates_arguments():
    with pytest.raises(ValueError):
        integrate_curve(F3, (0.0, 0.0))
    with pytest.raises(ValueError):
        integrate_curve(F3, (1.0, 0.0), field_choice="F3")
    with pytest.raises(ValueError):
        integrate_curve(F3, (1.0, 0.0), step=-1.0)


def test_fields_are_transverse_at_seed():
    seed = (0.5, 0.25)

    def seed_direction(field):
        c = integrate_curve(F4, seed, field_choice=field, max_len=0.2)
        i = c.points.index(seed)
        return (c.points[i + 1][0] - seed[0], c.points[i + 1][1] - seed[1])

    d1 = seed_direction("F1")
    d2 = seed_direction("F2")
    cross = abs(d1[0] * d2[1] - d1[1] * d2[0])
    assert cross > 1e-4 * math.hypot(*d1) * math.hypot(*d2)


# ---------------------------------------------------------------- emission


def test_svg_and_csv_emission():
    curves = [
        integrate_curve(F3, (1.0, 1.0), field_choice="F1", max_len=1.0),
        integrate_curve(F3, (1.0, 1.0), field_choice="F2", max_len=1.0),
    ]
    svg = polylines_to_svg(curves, viewport=2.0)
    assert svg.startswith("<svg")
    assert svg.count("<path") == 2
    assert 'data-field="F1"' in svg and 'data-field="F2"' in svg
    csv = polylines_to_csv(curves)
    lines = csv.strip().splitlines()
    assert lines[0] == "curve_id,field,x,y"
    assert len(lines) == 1 + sum(len(c.points) for c in curves)


# ------------------------------------------------------- cross-term algebra


def test_discriminant_omega_positive_small_pair():
    p = parse_form("x^3 - x*y^2")
    q = parse_form("x^2 + y^2")
    disc = discriminant_omega(p, q)
    ok, _ = is_negative_form(Fraction(-1) * disc)
    assert ok


def test_discriminant_omega_positive_larger_pair():
    p = parse_form("x*(x^2 - y^2)*(x^2 - 4*y^2)")
    q = parse_form("x^4 + y^4")
    disc = discriminant_omega(p, q)
    ok, _ = is_negative_form(Fraction(-1) * disc)
    assert ok


def test_discriminant_omega_rejects_repeated_factor():
    p = parse_form("x^2*(x^2 - y^2)")
    q = parse_form("x^2 + y^2")
    with pytest.raises(ValueError):
        discriminant_omega(p, q)


def test_discriminant_omega_rejects_wrong_q():
    p = parse_form("x^3 - x*y^2")
    with pytest.raises(ValueError):
        discriminant_omega(p, parse_form("x^2 + 2*y^2"))


def test_check_isotopies_clean_pair():
    p = parse_form("x^3 - x*y^2")
    q = parse_form("x^4 + y^4")
    checks = {c.kind: c for c in check_isotopies(p, q)}
    assert set(checks) == {"phi", "psi", "gamma_t"}
    for c in checks.values():
        assert c.verdict
        assert c.failed_ts == ()
        assert list(c.t_grid) == [
            Fraction(0),
            Fraction(1, 4),
            Fraction(1, 2),
            Fraction(3, 4),
            Fraction(1),
        ]


def test_check_isotopies_boundary_pair_fails_only_at_endpoint():
    # the endpoint of the phi family for this pair is the quadratic data of
    # a non-hyperbolic quintic, so the check must flag exactly t = 1
    p = parse_form("x^3 - x*y^2")
    q = parse_form("x^2 + y^2")
    checks = {c.kind: c for c in check_isotopies(p, q)}
    assert checks["phi"].verdict is False
    assert checks["phi"].failed_ts == (Fraction(1),)
    assert checks["psi"].verdict
    assert checks["gamma_t"].verdict
