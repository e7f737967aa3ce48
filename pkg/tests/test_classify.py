"""Index computation, component bookkeeping, and numeric winding checks."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hypforms import (
    BinaryForm,
    NotHyperbolicError,
    admissible_indices,
    classify_form,
    count_real_linear_factors,
    curve_samples,
    index_gamma,
    num_components,
    parse_form,
    same_component,
    winding_alpha_numeric,
    winding_gamma_numeric,
    zeros_vs_critical_points,
)

X, Y = sympy.symbols("x y")


def sympy_distinct_real_lines(f: BinaryForm) -> int:
    """Independent count of distinct real linear factors, via sympy roots of
    f(1,t) plus the line x = 0 when the top y-power is present."""
    d = f.degree
    expr = sum(sympy.Rational(c) * X ** (d - i) * Y**i for i, c in enumerate(f.coeffs))
    t = sympy.Symbol("t")
    slice_ = sympy.Poly(expr.subs(X, 1).subs(Y, t), t)
    n = len(set(sympy.real_roots(slice_)))
    if f.coeffs[-1] == 0:
        n += 1
    return n


def random_form(rng: random.Random, degree: int) -> BinaryForm:
    return BinaryForm(
        degree, tuple(Fraction(rng.randint(-9, 9)) for _ in range(degree + 1))
    )


# ---------------------------------------------------------------- counting


def test_count_real_linear_factors_known():
    assert count_real_linear_factors(parse_form("x^3 - x*y^2")) == 3
    assert count_real_linear_factors(parse_form("x^3*y - x*y^3")) == 4
    assert count_real_linear_factors(parse_form("x^2 + y^2")) == 0
    # repeated line counts once
    assert count_real_linear_factors(parse_form("x^2*(x - y)")) == 2


def test_count_real_linear_factors_matches_sympy():
    rng = random.Random(4242)
    for _ in range(80):
        f = random_form(rng, rng.randint(2, 7))
        if f.is_zero():
            continue
        assert count_real_linear_factors(f) == sympy_distinct_real_lines(f)


# ------------------------------------------------------------------- index


def test_index_gamma_known_values():
    assert index_gamma(parse_form("x^3 - x*y^2")) == -1
    assert index_gamma(parse_form("x*y")) == 0
    assert index_gamma(parse_form("x^3*y - x*y^3")) == -2


def test_index_gamma_rejects_non_hyperbolic():
    with pytest.raises(NotHyperbolicError):
        index_gamma(parse_form("x^2 + y^2"))


def test_classify_form_fields():
    rep = classify_form(parse_form("x^3*y - x*y^3"))
    assert rep.degree == 4
    assert rep.index == -2
    assert rep.factor_count == 4
    assert rep.index == 2 - rep.factor_count
    assert rep.component_rank == admissible_indices(4).index(rep.index)


# --------------------------------------------------------------- components


@given(st.integers(min_value=3, max_value=40))
@settings(max_examples=40)
def test_component_count_closed_form(d):
    want = (d - 1) // 2 if d % 2 == 1 else d // 2
    assert num_components(d) == want
    idxs = admissible_indices(d)
    assert len(idxs) == want
    assert idxs[0] == (-1 if d % 2 == 1 else 0)
    assert idxs[-1] == 2 - d
    assert all(a - b == 2 for a, b in zip(idxs, idxs[1:]))
    assert all((i - d) % 2 == 0 for i in idxs)


def test_same_component():
    f = parse_form("x^3 - x*y^2")
    g = parse_form("x^3 - 4*x*y^2")  # three real lines as well
    assert same_component(f, g)
    h = parse_form("x^3*y - x*y^3")
    with pytest.raises(ValueError):
        same_component(f, h)  # different degrees have no common component


# ----------------------------------------------------------------- winding


def test_winding_matches_index_on_small_forms():
    for text in ("x^3 - x*y^2", "x*y", "x^3*y - x*y^3", "x^2 - 3*y^2"):
        f = parse_form(text)
        idx = index_gamma(f)
        assert winding_gamma_numeric(f) == idx
        assert winding_gamma_numeric(f) == 2 + winding_alpha_numeric(f)


def test_winding_rejects_non_hyperbolic():
    with pytest.raises(NotHyperbolicError):
        winding_gamma_numeric(parse_form("x^4 + y^4"))


# --------------------------------------------------- zeros vs critical pts


def test_zeros_vs_critical_points_equal_on_hyperbolic():
    for text in ("x^3 - x*y^2", "x^3*y - x*y^3", "x*y"):
        z, c = zeros_vs_critical_points(parse_form(text))
        assert z == c


def test_zeros_vs_critical_counts_value():
    # x(x^2-y^2) restricted to the circle: zeros at 6 angles, and the
    # circle restriction of a hyperbolic form alternates max/min between
    # consecutive zeros, so the counts agree at 6
    z, c = zeros_vs_critical_points(parse_form("x^3 - x*y^2"))
    assert (z, c) == (6, 6)


# ------------------------------------------------------------ curve samples


def test_curve_samples_shape_and_values():
    f = parse_form("x^3 - x*y^2")
    samples = curve_samples(f, 16)
    assert len(samples) == 16
    first = samples[0]  # phi = 0: point (1, 0)
    assert first.phi == 0.0
    fxx = f.partial_x().partial_x()
    assert abs(first.second_partials[0] - float(fxx.eval(1, 0))) < 1e-12
    # circle jet leads with the value of f itself
    assert abs(first.circle_jet[0] - float(f.eval(1, 0))) < 1e-12
