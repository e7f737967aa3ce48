"""Witness families: construction rules, certification, index bookkeeping."""

import pytest

from hypforms import (
    admissible_indices,
    arnold,
    count_real_linear_factors,
    f_family,
    format_form,
    g_even,
    hessian,
    index_gamma,
    is_hyperbolic,
    p_factorized,
    parse_form,
    representatives,
    table1,
)


# ------------------------------------------------------------------ arnold


def test_arnold_smallest_member():
    m = arnold(3, 3)
    assert format_form(m.form) == "x^3 - 3*x*y^2"
    assert m.expected_index == -1
    assert index_gamma(m.form) == -1


def test_arnold_padding_preserves_index():
    # same harmonic part, more pads: index stays 2 - m
    for d in (5, 7):
        m = arnold(d, 3)
        assert index_gamma(m.form) == -1
        assert count_real_linear_factors(m.form) == 3


def test_arnold_parameter_validation():
    for d, m in ((4, 3), (3, 2), (9, 3), (10, 3), (6, 7)):
        with pytest.raises(ValueError):
            arnold(d, m)


def test_arnold_degree_window():
    # valid exactly when 3 <= m <= d < m^2 and d - m even
    arnold(8, 4)
    arnold(14, 4)
    with pytest.raises(ValueError):
        arnold(16, 4)


# ----------------------------------------------------------- line products


def test_p_factorized_odd_members():
    m = p_factorized(1)
    assert format_form(m.form) == "x^3 - x*y^2"
    assert m.expected_index == -1
    m2 = p_factorized(2)
    assert m2.form.degree == 5
    assert index_gamma(m2.form) == -3
    assert count_real_linear_factors(m2.form) == 5


def test_p_factorized_even_members():
    m = p_factorized(2, even=True)
    assert m.form.degree == 6
    assert index_gamma(m.form) == -4
    assert count_real_linear_factors(m.form) == 6


def test_p_factorized_rejects_small_k():
    with pytest.raises(ValueError):
        p_factorized(0)


# ---------------------------------------------------------------- g family


def test_g_even_form_and_index():
    m = g_even(2)
    assert format_form(m.form) == "x^6 - x^4*y^2 + x^2*y^4 - y^6"
    assert m.expected_index == 0
    assert index_gamma(m.form) == 0


def test_g_even_accepted_through_n_12():
    for n in range(2, 13):
        m = g_even(n)
        assert m.form.degree == 2 * n + 2
        assert is_hyperbolic(m.form).is_hyperbolic
        assert index_gamma(m.form) == 0


def test_g_even_degree_four_is_not_constructible():
    # n = 1 would give (x^2-y^2)(x^2+y^2), which is not hyperbolic
    with pytest.raises(ValueError):
        g_even(1)
    g4 = parse_form("x^4 - y^4")
    assert format_form(hessian(g4)) == "-144*x^2*y^2"
    cert = is_hyperbolic(g4)
    assert not cert.is_hyperbolic
    w = cert.witness
    assert w is not None and hessian(g4).eval(w[0], w[1]) >= 0


# ---------------------------------------------------------------- f family


def test_f_family_members():
    m = f_family(1, 2)  # degree 7, two pad factors on the quintic lines
    assert m.form.degree == 7
    assert index_gamma(m.form) == -3
    m2 = f_family(2, 1, even=True)
    assert m2.form.degree == 8
    assert index_gamma(m2.form) == -2


def test_f_family_degenerate_slot_is_not_hyperbolic():
    # the lowest odd slot builds x^5 - x*y^4, whose hessian vanishes on a
    # line; it must be constructible (the formula exists) but rejected
    m = f_family(1, 1)
    assert format_form(m.form) == "x^5 - x*y^4"
    cert = is_hyperbolic(m.form)
    assert not cert.is_hyperbolic
    w = cert.witness
    assert w is not None
    assert hessian(m.form).eval(w[0], w[1]) >= 0


def test_f_family_parameter_validation():
    for n, k in ((0, 1), (1, 0), (-1, 2)):
        with pytest.raises(ValueError):
            f_family(n, k)


# ------------------------------------------------------------------ table 1


def test_table1_counts_and_certification():
    members = table1(16)
    assert len(members) == 51
    for m in members:
        assert is_hyperbolic(m.form).is_hyperbolic
        assert index_gamma(m.form) == m.expected_index


def test_table1_range_validation():
    with pytest.raises(ValueError):
        table1(2)
    # enumeration extends smoothly past the classical window
    assert table1(17)[: len(table1(16))] == table1(16)


# ------------------------------------------------------------ representatives


def test_representatives_cover_components():
    for d in list(range(3, 14)) + [14, 15]:
        if d == 4:
            continue
        reps = representatives(d)
        idxs = [index_gamma(m.form) for m in reps]
        assert idxs == admissible_indices(d)
        for m in reps:
            assert m.form.degree == d
            assert is_hyperbolic(m.form).is_hyperbolic


def test_representatives_refuse_degree_four():
    with pytest.raises(ValueError):
        representatives(4)


def test_representatives_degree_five_substitute():
    # the index -1 slot at degree 5 cannot come from the line-product
    # construction (its product form is not hyperbolic); it is filled by the
    # padded harmonic cubic instead
    reps = representatives(5)
    by_index = {index_gamma(m.form): m for m in reps}
    assert sorted(by_index) == [-3, -1]
    assert format_form(by_index[-1].form) == "x^5 - 2*x^3*y^2 - 3*x*y^4"
