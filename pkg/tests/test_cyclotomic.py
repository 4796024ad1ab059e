import cmath
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from overpartitions.cyclotomic import (
    CycloElem,
    CyclotomicError,
    IntPoly,
    NotDivisibleError,
    cyclotomic_poly,
    divides_exactly,
    evaluate_at_root,
    laurent_quotient,
    reduce_mod_phi,
)
from overpartitions.partitions import is_prime
from overpartitions.series import ZetaPoly


def as_zeta(poly: IntPoly, lo: int = 0) -> ZetaPoly:
    return ZetaPoly(lo, poly.coeffs)


def numeric(elem: CycloElem, k: int = 1) -> complex:
    w = cmath.exp(2j * cmath.pi * k / elem.b)
    return sum(float(c) * w**i for i, c in enumerate(elem.coords))


def test_small_cases():
    assert cyclotomic_poly(1).coeffs == (-1, 1)
    assert cyclotomic_poly(7).coeffs == (1,) * 7
    assert cyclotomic_poly(6).coeffs == (1, -1, 1)


@pytest.mark.parametrize("b", range(1, 31))
def test_product_over_divisors(b):
    prod = IntPoly([1])
    for d in range(1, b + 1):
        if b % d == 0:
            prod = prod * cyclotomic_poly(d)
    assert prod.coeffs == (-1,) + (0,) * (b - 1) + (1,)


@pytest.mark.parametrize("ell", [p for p in range(2, 60) if is_prime(p)])
def test_prime_cyclotomic_is_all_ones(ell):
    assert cyclotomic_poly(ell).coeffs == (1,) * ell


def test_reduce_modulus_to_zero():
    assert reduce_mod_phi(as_zeta(cyclotomic_poly(7)), 7).is_zero()


def test_reduce_symmetric_window_is_nonzero():
    p = ZetaPoly(-2, [1, 1, 1, 1, 1])
    r = reduce_mod_phi(p, 7)
    assert not r.is_zero()
    # shifted by zeta^7 this is Phi_7 - zeta^3 - zeta^4 ... reduced
    assert r == CycloElem.from_poly(7, [0, 0, 0, -1, -1])


def test_reduce_power_of_b():
    assert reduce_mod_phi(ZetaPoly.monomial(7), 7) == CycloElem.constant(7, 1)
    with pytest.raises(CyclotomicError):
        reduce_mod_phi(ZetaPoly.monomial(1), 0)


def test_divides_exactly_examples():
    assert divides_exactly(ZetaPoly(), 5)
    assert divides_exactly(as_zeta(cyclotomic_poly(7)), 7)
    assert not divides_exactly(ZetaPoly(0, [1, 1]), 7)


def test_laurent_quotient_examples():
    phi7 = as_zeta(cyclotomic_poly(7))
    assert laurent_quotient(phi7, 7) == ZetaPoly.constant(1)
    one_plus = ZetaPoly(0, [1, 1])
    assert laurent_quotient(one_plus * phi7, 7) == one_plus
    two_plus = ZetaPoly(0, [2, 1])
    assert laurent_quotient(two_plus * phi7, 7) == two_plus
    assert laurent_quotient(phi7.shift(-3), 7) == ZetaPoly.monomial(-3)
    with pytest.raises(NotDivisibleError):
        laurent_quotient(one_plus, 7)


laurent = st.builds(
    lambda lo, coeffs: ZetaPoly(lo, coeffs),
    st.integers(-12, 12),
    st.lists(st.integers(-5, 5), max_size=10),
)


@given(laurent, st.sampled_from([2, 3, 4, 5, 6, 7, 9, 11, 12]))
def test_quotient_round_trip(q, b):
    p = q * as_zeta(cyclotomic_poly(b))
    assert divides_exactly(p, b)
    assert laurent_quotient(p, b) * as_zeta(cyclotomic_poly(b)) == p


def test_evaluate_examples():
    assert evaluate_at_root(ZetaPoly.constant(1), 9, 4) == CycloElem.constant(9, 1)
    assert evaluate_at_root(ZetaPoly.monomial(1), 4, 2) == CycloElem.constant(4, -1)
    # zeta + zeta^-1 at a primitive 5th root: x + x^4 with x^4 = -1 - x - x^2 - x^3
    e = evaluate_at_root(ZetaPoly(-1, [1, 0, 1]), 5, 1)
    assert e.coords == (-1, 0, -1, -1)
    assert abs(numeric(e) - 2 * cmath.cos(2 * cmath.pi / 5)) < 1e-12


@given(laurent, st.integers(1, 12))
def test_evaluate_at_zero_is_specialization(p, b):
    assert evaluate_at_root(p, b, 0) == CycloElem.constant(b, p.at_one())


def test_evaluate_matches_complex_numerics():
    rng = random.Random(3)
    for _ in range(40):
        b = rng.randint(2, 15)
        k = rng.randint(0, b - 1)
        p = ZetaPoly(rng.randint(-6, 6), [rng.randint(-3, 3) for _ in range(6)])
        w = cmath.exp(2j * cmath.pi * k / b)
        direct = sum(c * w**m for m, c in p.terms().items())
        assert abs(numeric(evaluate_at_root(p, b, k)) - direct) < 1e-9


def test_field_arithmetic():
    b = 12
    x = CycloElem.root_power(b, 1)
    acc = CycloElem.constant(b, 1)
    for _ in range(b):
        acc = acc * x
    assert acc == CycloElem.constant(b, 1)
    half = CycloElem.constant(b, 1) / 2
    assert half + half == CycloElem.constant(b, 1)
    with pytest.raises(CyclotomicError):
        CycloElem.constant(5, 1) + CycloElem.constant(7, 1)
