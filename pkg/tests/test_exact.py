import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from partikit.errors import InvalidWeightsError
from partikit.exact import (
    RationalPoly,
    binom_count,
    binom_poly_shifted,
    int_poly_divexact,
    int_poly_mul,
    lcm_vec,
    parse_rat,
    poly_add,
    poly_eval,
    poly_mul,
    poly_scale,
    rat_str,
)


def P(*coeffs):
    return RationalPoly(coeffs)


@pytest.mark.parametrize("m,k,expected", [(5, 2, 10), (-1, 1, 0), (3, 0, 1), (2, 3, 0), (-4, 0, 0), (0, 0, 1)])
def test_binom_count(m, k, expected):
    assert binom_count(m, k) == expected


def test_binom_count_is_big():
    assert binom_count(200, 100) == math.factorial(200) // math.factorial(100) ** 2


@settings(max_examples=300)
@given(st.integers(1, 60), st.integers(1, 60))
def test_pascal(m, k):
    if m >= k:
        assert binom_count(m, k) == binom_count(m - 1, k - 1) + binom_count(m - 1, k)


def test_binom_poly_shifted_examples():
    assert binom_poly_shifted(0, 6, 1) == P(1, F(1, 6))
    assert binom_poly_shifted(1, 6, 1) == P(F(5, 6), F(1, 6))
    assert binom_poly_shifted(7, 6, 1) == P(F(-1, 6), F(1, 6))
    assert binom_poly_shifted(0, 1, 0) == P(1)


def _falling_oracle(c, D, k, n):
    # direct evaluation of prod_{i=1..k} ((n - c)/D + i) / k!
    x = (F(n) - c) / D
    out = F(1)
    for i in range(1, k + 1):
        out *= x + i
    return out / math.factorial(k)


@settings(max_examples=300)
@given(st.integers(-50, 50), st.integers(1, 12), st.integers(0, 5), st.integers(-30, 30))
def test_binom_poly_shifted_matches_direct_product(c, D, k, n):
    assert binom_poly_shifted(c, D, k)(n) == _falling_oracle(c, D, k, n)


@settings(max_examples=300)
@given(st.integers(-50, 50), st.integers(1, 12), st.integers(0, 5), st.integers(0, 40))
def test_binom_poly_shifted_hits_counts_on_progression(c, D, k, t):
    assert poly_eval(binom_poly_shifted(c, D, k), c + t * D) == binom_count(t + k, k)


@given(st.fractions(max_denominator=50), st.integers(1, 12), st.integers(0, 6))
def test_binom_poly_shifted_degree_and_leading(c, D, k):
    p = binom_poly_shifted(c, D, k)
    assert p.degree == k
    assert p.leading == F(1, D**k * math.factorial(k))


def test_binom_poly_shifted_rational_shift():
    assert binom_poly_shifted(F(1, 2), 2, 1) == P(F(3, 4), F(1, 2))


def test_poly_eval_examples():
    assert poly_eval(P(1, F(1, 6)), 12) == 3
    assert poly_eval(RationalPoly(), F(7, 3)) == 0
    assert poly_eval(P(F(5, 12), F(1, 6)), 0) == F(5, 12)


def test_poly_ring_examples():
    assert poly_add(P(1, F(1, 6)), P(0, F(-1, 6))) == P(1)
    assert poly_scale(P(1, F(1, 6)), F(1, 6)) == P(F(1, 6), F(1, 36))
    assert poly_mul(P(1, -1), P(1, 1)) == P(1, 0, -1)


def test_poly_trims_and_zero():
    assert P(1, 0, 0).coeffs == (F(1),)
    assert P(0, 0).is_zero()
    assert RationalPoly().degree == -1
    assert poly_scale(P(1, 2), 0).is_zero()
    assert P(3) == 3


def test_poly_is_immutable():
    p = P(1, 2)
    with pytest.raises(AttributeError):
        p.coeffs = ()


rats = st.fractions(max_denominator=10**6)
polys = st.lists(rats, max_size=5).map(RationalPoly)


@given(polys, polys, rats)
def test_poly_ops_agree_with_pointwise(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(rats, rats)
def test_rat_normalisation(x, y):
    s = x + y
    cross = F(x.numerator * y.denominator + y.numerator * x.denominator, x.denominator * y.denominator)
    assert s == cross
    assert s.denominator >= 1
    assert math.gcd(abs(s.numerator), s.denominator) == 1


def test_rat_serialisation():
    assert rat_str(F(5, 12)) == "5/12"
    assert rat_str(3) == "3"
    assert rat_str(F(-1, 6)) == "-1/6"
    assert rat_str(0) == "0"
    assert parse_rat("5/12") == F(5, 12)
    assert parse_rat("-7") == -7
    with pytest.raises(ValueError):
        parse_rat("0.5")


def test_poly_json():
    p = P(F(5, 12), F(1, 6))
    assert p.to_json() == ["5/12", "1/6"]
    assert RationalPoly.from_json(p.to_json()) == p
    assert RationalPoly().to_json() == []


@pytest.mark.parametrize(
    "coeffs,text",
    [
        ((F(5, 12), F(1, 6)), "5/12 + 1/6·n"),
        ((1,), "1"),
        ((), "0"),
        ((F(-1, 6), F(1, 6)), "-1/6 + 1/6·n"),
        ((1, 1), "1 + n"),
        ((0, 0, F(-1, 2)), "-1/2·n^2"),
        ((2, -1, 3), "2 - n + 3·n^2"),
    ],
)
def test_poly_format(coeffs, text):
    assert RationalPoly(coeffs).format() == text


@pytest.mark.parametrize("a,expected", [((2, 3), 6), ((1, 1, 1), 1), ((4, 6), 12), ((7,), 7)])
def test_lcm_vec(a, expected):
    assert lcm_vec(a) == expected


@pytest.mark.parametrize("a", [(), (0, 3), (2, -1)])
def test_lcm_vec_rejects(a):
    with pytest.raises(InvalidWeightsError):
        lcm_vec(a)


def test_int_poly_division():
    # (z^2 - 1) / (z - 1) = z + 1
    assert int_poly_divexact((-1, 0, 1), (-1, 1)) == (1, 1)
    assert int_poly_mul((1, 1), (-1, 1)) == (-1, 0, 1)
    with pytest.raises(ArithmeticError):
        int_poly_divexact((1, 0, 1), (-1, 1))
