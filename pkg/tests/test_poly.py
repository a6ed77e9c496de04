from fractions import Fraction
from math import gcd as igcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcong.expr import parse_ratfun
from qcong.poly import (
    NEG_INF,
    IntPoly,
    RatFun,
    add,
    content,
    div_one_minus_power,
    divrem_monic,
    eval_at_one,
    format_poly,
    format_ratfun,
    gcd,
    mul,
    mul_one_minus_power,
    ratfun_add,
    ratfun_div,
    ratfun_make,
    ratfun_mul,
    ratfun_pow,
    ratfun_sub,
    substitute_monomial,
)

from _oracles import pgcd, pmul, prem

Q = IntPoly([0, 1])


def P(*c):
    return IntPoly(c)


coeff = st.integers(-50, 50)
polys = st.lists(coeff, max_size=8).map(IntPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
monic = st.lists(coeff, min_size=1, max_size=5).map(lambda c: IntPoly(c + [1]))


# -- examples ---------------------------------------------------------------


def test_add_examples():
    assert add(P(1, 1), P(-1, 1)) == P(0, 2)
    assert add(P(3, 0, 1), IntPoly()) == P(3, 0, 1)
    s = add(P(1, 1, 1), P(-1, -1, -1))
    assert s.coeffs == () and s.degree == NEG_INF


def test_normalization_strips_zeros():
    p = IntPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert IntPoly([0, 0]).is_zero()


def test_mul_examples():
    assert mul(P(1, 1), P(1, -1)) == P(1, 0, -1)
    assert mul(P(1, 1, 1), P(1, 1, 1)) == P(1, 2, 3, 2, 1)
    assert mul(P(1, 2), IntPoly()).is_zero()


def test_divrem_examples():
    assert divrem_monic(P(-1, 0, 0, 1), P(-1, 1)) == (P(1, 1, 1), IntPoly())
    assert divrem_monic(P(0, 0, 1), P(1, 1)) == (P(-1, 1), P(1))
    assert divrem_monic(P(1), P(1, 0, 1)) == (IntPoly(), P(1))


def test_divrem_rejects():
    with pytest.raises(ZeroDivisionError):
        divrem_monic(P(1), IntPoly())
    with pytest.raises(ValueError):
        divrem_monic(P(1, 2, 3), P(1, 2))


def test_gcd_examples():
    assert gcd(P(-1, 0, 1), P(-1, 0, 0, 1)) == P(-1, 1)
    assert gcd(P(-2, 0, -4), IntPoly()) == P(2, 0, 4)
    assert gcd(P(1, 0, 1), P(1, 1)) == P(1)


def test_substitute_examples():
    assert substitute_monomial(P(1, 1) ** 2, 3) == P(1, 0, 0, 2, 0, 0, 1)
    assert substitute_monomial(P(4, 5, 6), 1) == P(4, 5, 6)
    assert substitute_monomial(P(1, 1, 1), 2) == P(1, 0, 1, 0, 1)


def test_eval_at_one_examples():
    assert eval_at_one(P(1, 1, 1)) == 3
    assert eval_at_one(IntPoly()) == 0
    assert eval_at_one(P(1, 1, 2, 1, 1)) == 6


def test_ratfun_examples():
    assert ratfun_make(P(1, 0, -1), P(1, -1)) == RatFun(P(1, 1))
    qm2 = ratfun_pow(RatFun(Q), -2)
    assert ratfun_mul(qm2, RatFun(Q**3)) == RatFun(Q)
    a = ratfun_make(P(1, 1), P(1, -1))
    b = ratfun_make(P(1, 1), P(-1, 1))
    assert ratfun_add(a, b).is_zero()
    assert ratfun_sub(a, a).is_zero()
    assert ratfun_div(a, a) == RatFun(1)


def test_ratfun_rejects_zero():
    with pytest.raises(ZeroDivisionError):
        RatFun(P(1), IntPoly())
    with pytest.raises(ZeroDivisionError):
        RatFun(P(1)) / RatFun(0)
    with pytest.raises(ZeroDivisionError):
        ratfun_pow(RatFun(0), -1)


def test_ratfun_sign_and_content():
    r = ratfun_make(P(2, 2), P(-4))
    assert r.num == P(-1, -1) and r.den == P(2)
    assert r.den.lc > 0


def test_format_examples():
    assert format_poly(P(-1, 2, 0, 1)) == "-1 + 2*q + q^3"
    assert format_poly(IntPoly()) == "0"
    assert format_poly(P(0, -1)) == "-q"
    assert format_ratfun(ratfun_make(P(1), P(1, 1))) == "(1)/(1 + q)"
    assert format_ratfun(RatFun(P(3, 0, 1))) == "3 + q^2"


def test_binomial_kernels():
    c = [1, 2, 3]
    assert mul_one_minus_power(c, 2) == list(pmul(c, [1, 0, -1]))
    assert div_one_minus_power(mul_one_minus_power(c, 5), 5) == c
    with pytest.raises(ValueError):
        div_one_minus_power([1, 1], 3)


# -- properties -------------------------------------------------------------


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == IntPoly()


@given(polys, polys)
def test_mul_matches_convolution(a, b):
    assert list((a * b).coeffs) == pmul(list(a.coeffs), list(b.coeffs))


@given(polys, monic)
def test_divrem_invariant(a, d):
    quot, rem = divrem_monic(a, d)
    assert quot * d + rem == a
    assert rem.degree < d.degree


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_divides_and_matches_oracle(a, b, c):
    x, y = a * c, b * c
    g = gcd(x, y)
    assert not prem(list(x.coeffs), list(g.coeffs))
    assert not prem(list(y.coeffs), list(g.coeffs))
    monic_g = [Fraction(v, g.lc) for v in g.coeffs]
    assert monic_g == pgcd(list(x.coeffs), list(y.coeffs))
    assert g.lc > 0


@given(polys, st.integers(1, 4), st.integers(1, 4))
def test_substitute_composition(a, m1, m2):
    assert substitute_monomial(substitute_monomial(a, m1), m2) == substitute_monomial(a, m1 * m2)


@given(polys, polys)
def test_eval_at_one_homomorphism(a, b):
    assert eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b)
    assert eval_at_one(a + b) == eval_at_one(a) + eval_at_one(b)


@given(polys, nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_ratfun_canonical(num, den, k):
    assert ratfun_make(k * num, k * den) == ratfun_make(num, den)
    r = ratfun_make(num, den)
    if not r.is_zero():
        g = gcd(r.num, r.den)
        assert g.is_constant()
    assert r.den.lc > 0
    assert igcd(content(r.num), content(r.den)) == 1


@given(polys, nonzero_polys, polys, nonzero_polys)
@settings(max_examples=60)
def test_field_operations(a, b, c, d):
    x, y = ratfun_make(a, b), ratfun_make(c, d)
    assert (x + y) - y == x
    assert x * y == y * x
    if not y.is_zero():
        assert (x / y) * y == x


@given(polys, nonzero_polys)
@settings(max_examples=80)
def test_text_round_trip(a, b):
    assert parse_ratfun(format_poly(a)) == RatFun(a)
    r = ratfun_make(a, b)
    assert parse_ratfun(format_ratfun(r)) == r


def test_inputs_not_mutated():
    c = [1, 2, 3]
    mul_one_minus_power(c, 1)
    div_one_minus_power([1, 1, -1, -1], 2)
    assert c == [1, 2, 3]
