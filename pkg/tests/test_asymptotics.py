import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from overpartitions.asymptotics import (
    AsymptoticsError,
    ConeDomain,
    WrightParams,
    eta_major,
    f1_major_arc,
    lerch_partial_sum,
    lerch_weight2,
    li2_unit,
    load_published_table,
    log_main_term,
    main_term,
    major_arc_value,
    minor_arc_bound,
    minor_arc_constant_search,
    product_eta,
    product_f1,
    product_kj,
    ratio_report,
    relative_error,
    wright_c,
    wright_expansion,
    wright_p_coefficients,
)
from overpartitions.partitions import coloured_overpartition_series
from overpartitions.series import expand_inverse_pochhammer

mpmath.mp.dps = 50


def primitive_roots(max_b):
    for b in range(2, max_b + 1):
        for a in range(1, b):
            if math.gcd(a, b) == 1:
                yield a, b


# --- dilogarithm ---------------------------------------------------------

def test_li2_endpoints():
    assert abs(li2_unit(0) - mpmath.pi**2 / 6) < 1e-40
    assert abs(li2_unit(mpmath.pi) + mpmath.pi**2 / 12) < 1e-40
    assert abs(li2_unit(2 * mpmath.pi) - mpmath.pi**2 / 6) < 1e-40


@given(st.floats(min_value=0, max_value=2 * math.pi - 1e-9))
@settings(max_examples=200, deadline=None)
def test_li2_matches_polylog(theta):
    expected = mpmath.re(mpmath.polylog(2, mpmath.expj(theta)))
    assert abs(li2_unit(theta) - expected) < 1e-30


@given(st.floats(min_value=1e-6, max_value=math.pi))
@settings(max_examples=100, deadline=None)
def test_li2_reflection_symmetry(theta):
    assert abs(li2_unit(theta) - li2_unit(2 * mpmath.pi - theta)) < 1e-40


def test_li2_out_of_range():
    with pytest.raises(AsymptoticsError):
        li2_unit(-0.1)
    with pytest.raises(AsymptoticsError):
        li2_unit(7)


def test_lerch_against_polylog():
    for a, b in primitive_roots(12):
        expected = mpmath.polylog(2, mpmath.expjpi(mpmath.mpf(2 * a) / b))
        assert abs(lerch_weight2(a, b) - expected) < 1e-35


def test_lerch_imaginary_part_is_clausen():
    for a, b in primitive_roots(9):
        theta = 2 * mpmath.pi * a / b
        assert abs(mpmath.im(lerch_weight2(a, b)) - mpmath.clsin(2, theta)) < 1e-35


def test_lerch_reduces_fraction():
    assert abs(lerch_weight2(2, 8) - lerch_weight2(1, 4)) < 1e-45
    assert abs(lerch_weight2(9, 4) - lerch_weight2(1, 4)) < 1e-45
    assert abs(lerch_weight2(0, 5) - mpmath.pi**2 / 6) < 1e-45


def test_lerch_quarter_turn_closed_form():
    # Li_2(i) = -pi^2/48 + i G, with G computed from its alternating series
    terms = 4000
    G = mpmath.fsum(mpmath.mpf((-1) ** k) / (2 * k + 1) ** 2 for k in range(terms))
    G_err = mpmath.mpf(1) / (2 * terms + 1) ** 2
    value = lerch_weight2(1, 4)
    assert abs(mpmath.re(value) + mpmath.pi**2 / 48) < 1e-40
    assert abs(mpmath.im(value) - G) < G_err


def test_lerch_partial_sum_consistent():
    for a, b in [(1, 3), (2, 5), (1, 7), (5, 12)]:
        partial, bound = lerch_partial_sum(a, b, 5000)
        assert abs(partial - lerch_weight2(a, b)) < bound


# --- Wright engine -------------------------------------------------------

def test_hardy_ramanujan_constant():
    wp = WrightParams(mpmath.pi**2 / 6, mpmath.mpf(1) / 2, (1 / mpmath.sqrt(2 * mpmath.pi),))
    p0 = wright_p_coefficients(wp)[0]
    assert abs(p0 * 4 * mpmath.sqrt(3) - 1) < 1e-40


def test_wright_depth_one_is_main_term():
    for k in range(1, 7):
        for j in range(1, k + 1):
            wp = WrightParams.for_params((k, j))
            for n in (100, 1000):
                assert relative_error(wright_expansion(wp, n), main_term((k, j), n)) < 1e-40


def test_wright_first_correction_has_right_sign_and_size():
    # p(n) with the second major-arc coefficient: 1/(q;q) = sqrt(z/2pi) e^{pi^2/6z} e^{-z/24}
    a0 = 1 / mpmath.sqrt(2 * mpmath.pi)
    wp = WrightParams(mpmath.pi**2 / 6, mpmath.mpf(1) / 2, (a0, -a0 / 24))
    p = expand_inverse_pochhammer(1, 1, 1000)
    one = WrightParams(wp.A, wp.B, wp.alphas, depth=1)
    for n in (200, 1000):
        err1 = relative_error(wright_expansion(one, n), p[n])
        err2 = relative_error(wright_expansion(wp, n), p[n])
        assert err2 < err1 / 10


def test_wright_c_denominator_pole_vanishes():
    # B = -1/2, s = 0, r = 1: 1/Gamma(0) = 0
    assert wright_c(1, -mpmath.mpf(1) / 2, 0, 1) == 0


def test_wright_c_numerator_pole_raises():
    with pytest.raises(AsymptoticsError):
        wright_c(1, -mpmath.mpf(5) / 2, 0, 0)


def test_wright_c_leading_value():
    A, B = mpmath.mpf(2), mpmath.mpf(3) / 4
    expected = mpmath.sqrt(A) ** (B + mpmath.mpf(1) / 2) / (2 * mpmath.sqrt(mpmath.pi))
    assert abs(wright_c(A, B, 0, 0) - expected) < 1e-45


def test_wright_params_validation():
    with pytest.raises(AsymptoticsError):
        WrightParams(1, 0, ())
    with pytest.raises(AsymptoticsError):
        WrightParams(-1, 0, (1,))
    with pytest.raises(AsymptoticsError):
        WrightParams(1, 0, (1,), depth=2)
    with pytest.raises(AsymptoticsError):
        WrightParams(1, 0, (1,), depth=0)


def test_wright_n_must_be_positive():
    with pytest.raises(AsymptoticsError):
        wright_expansion(WrightParams.for_params((1, 1)), 0)


# --- main term and ratios --------------------------------------------------

def test_main_term_closed_form():
    k, j, n = 3, 2, 250
    s = 2 * k + j
    expected = (
        mpmath.mpf(s) ** (mpmath.mpf(k + 1) / 4)
        * mpmath.exp(mpmath.pi * mpmath.sqrt(mpmath.mpf(s) * n / 3))
        / (mpmath.mpf(2) ** (mpmath.mpf(s + 3) / 2) * mpmath.mpf(3) ** (mpmath.mpf(k + 1) / 4) * mpmath.mpf(n) ** (mpmath.mpf(k + 3) / 4))
    )
    assert relative_error(main_term((k, j), n), expected) < 1e-40


def test_log_main_term_large_n_is_finite():
    assert log_main_term((5, 3), 5000) > 0


def test_ratio_report_against_direct_division():
    rows = ratio_report((2, 1), [50, 120])
    series = coloured_overpartition_series((2, 1), 120)
    for row in rows:
        direct = mpmath.mpf(series[row.n]) / main_term((2, 1), row.n, dps=60)
        assert abs(row.ratio - direct) < mpmath.mpf(10) ** -40
        assert row.pbar == series[row.n]


def test_ratio_row_formatting():
    row = ratio_report((1, 1), [100])[0]
    scaled = row.ratio * 1000
    assert row.truncated() == f"{int(mpmath.floor(scaled)) / 1000:.3f}"
    assert row.rounded() == f"{int(mpmath.nint(scaled)) / 1000:.3f}"


def test_ratio_report_shift_uses_previous_coefficient():
    shifted = ratio_report((1, 1), [100], index_shift=-1)[0]
    assert shifted.pbar == coloured_overpartition_series((1, 1), 100)[99]


def test_ratios_approach_one():
    # the main term is the leading asymptotic, so ratios drift toward 1
    r = [row.ratio for row in ratio_report((3, 2), [100, 1000, 3000])]
    assert abs(r[0] - 1) > abs(r[1] - 1) > abs(r[2] - 1)


def test_published_table_shape():
    entries = load_published_table()
    assert len(entries) == 20
    assert {(e.k, e.j) for e in entries} == {(1, 1), (2, 1), (3, 1), (3, 2), (5, 3)}
    assert all(len(e.printed) == 5 and e.printed.startswith("0.") for e in entries)


# --- major arc ---------------------------------------------------------------

def slope_ratios(approx, exact, zs=(0.04, 0.02, 0.01)):
    errs = [relative_error(approx(z), exact(z)) for z in zs]
    return [errs[i + 1] / errs[i] for i in range(len(errs) - 1)]


def test_eta_major_slope():
    for ratio in slope_ratios(eta_major, product_eta):
        assert 0.3 <= ratio <= 0.7


@pytest.mark.parametrize("params", [(2, 1), (3, 2), (5, 3)])
def test_major_arc_value_slope(params):
    ratios = slope_ratios(lambda z: major_arc_value(params, z), lambda z: product_kj(params, z))
    for ratio in ratios:
        assert 0.3 <= ratio <= 0.7


def test_equal_colours_error_is_exponentially_small():
    # k = j: the product is an eta quotient with no O(z) correction
    assert relative_error(major_arc_value((2, 2), 0.04), product_kj((2, 2), 0.04)) < 1e-20


@pytest.mark.parametrize("root", [(1, 2), (1, 3)])
def test_f1_major_arc_slope(root):
    ratios = slope_ratios(lambda z: f1_major_arc(*root, z), lambda z: product_f1(*root, z))
    for ratio in ratios:
        assert 0.3 <= ratio <= 0.7


def test_major_arc_complex_point():
    z = mpmath.mpc(0.02, 0.01)
    err = relative_error(major_arc_value((3, 2), z), product_kj((3, 2), z))
    assert err < 0.05
    assert err > 0


def test_major_arc_positive_on_real_axis():
    for z in (0.5, 0.1, 0.03):
        assert major_arc_value((3, 1), z) > 0
        assert eta_major(z) > 0


def test_f1_rejects_trivial_root_and_left_half_plane():
    with pytest.raises(AsymptoticsError):
        f1_major_arc(0, 1, 0.1)
    with pytest.raises(AsymptoticsError):
        f1_major_arc(3, 3, 0.1)
    with pytest.raises(AsymptoticsError):
        f1_major_arc(1, 2, -0.1)
    with pytest.raises(AsymptoticsError):
        eta_major(mpmath.mpc(0, 1))


def test_product_oracle_matches_series():
    # 1/(q;q) at q = e^{-z} against the exact partition numbers summed directly
    z = mpmath.mpf(1)
    p = expand_inverse_pochhammer(1, 1, 200)
    direct = mpmath.fsum(c * mpmath.exp(-n * z) for n, c in enumerate(p))
    assert relative_error(product_eta(z), direct) < 1e-40


# --- minor arc ---------------------------------------------------------------

def test_minor_arc_bound_zero_constant():
    x = mpmath.mpf("0.05")
    expected = mpmath.sqrt(x) * mpmath.exp(mpmath.pi**2 / (6 * x))
    assert relative_error(minor_arc_bound(mpmath.mpc(x, 0.3), 0), expected) < 1e-40


def test_minor_arc_bound_decreases_in_constant():
    values = [minor_arc_bound(0.05, c) for c in (0, 0.1, 0.5, 1)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_minor_arc_constant_positive_away_from_cusp():
    x = mpmath.mpf("0.02")
    M = 10
    ys = [M * x + t * (mpmath.pi - M * x) / 40 for t in range(40)]
    C = minor_arc_constant_search(x, ys)
    assert C > 0
    for y in ys[::10]:
        z = mpmath.mpc(x, y)
        assert abs(product_eta(z, dps=30)) <= minor_arc_bound(z, C, dps=30) * (1 + mpmath.mpf(10) ** -20)


def test_cone_domain():
    cone = ConeDomain(M=2, theta=0.5)
    assert cone.on_major_arc(mpmath.mpc(1, 2))
    assert not cone.on_major_arc(mpmath.mpc(1, 2.1))
    assert cone.in_cone(mpmath.mpc(1, 0.5))
    assert not cone.in_cone(mpmath.mpc(1, 1))
    with pytest.raises(AsymptoticsError):
        ConeDomain(M=0)
    with pytest.raises(AsymptoticsError):
        ConeDomain(M=1, theta=2)
