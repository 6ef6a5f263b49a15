import itertools
import random
from fractions import Fraction

import pytest

from mckay.poly import (
    IntPolynomial,
    PowerSeries,
    RationalFunction,
    poly_gcd,
    rational_eq,
    series_expand,
)

P = IntPolynomial


def test_normal_form():
    assert P((1, 2, 0, 0)).coeffs == (1, 2)
    assert P(()).is_zero()
    assert P((0, 0)).degree == -1
    assert P((3, 0, 1)).degree == 2


def test_arithmetic():
    a = P((1, 1))           # 1 + t
    b = P((1, -1))          # 1 - t
    assert a * b == P((1, 0, -1))
    assert a + b == P((2,))
    assert a - a == P.zero()
    assert a**3 == P((1, 3, 3, 1))
    assert (a * 0).is_zero()
    assert P.one_minus_power(4) == P((1, 0, 0, 0, -1))
    assert P.geometric(3) == P((1, 1, 1))
    assert P.geometric(0).is_zero()


def test_divexact():
    num = P.one_minus_power(6)
    assert num.divexact(P((1, -1))) == P.geometric(6)
    with pytest.raises(ArithmeticError):
        P((1, 1)).divexact(P((1, -1)))


def test_substitute_power_and_eval():
    p = P((1, -2, 1))
    assert p.substitute_power(3) == P((1, 0, 0, -2, 0, 0, 1))
    assert p(3) == 4
    assert p(-1) == 4


def test_poly_gcd():
    a = P.one_minus_power(6)
    b = P.one_minus_power(4)
    assert poly_gcd(a, b) == P((1, 0, -1)) or poly_gcd(a, b) == P((-1, 0, 1))
    g = poly_gcd(a, b)
    assert g.leading() > 0
    assert poly_gcd(P.zero(), a) == a or poly_gcd(P.zero(), a) == -a


def test_rational_function_reduction():
    f = RationalFunction(P((1, 0, -1)), P((1, -1)))  # (1-t^2)/(1-t)
    assert f.is_polynomial()
    assert f.as_polynomial() == P((1, 1))
    g = RationalFunction(P((2, 2)), P((4,)))
    assert g.num == P((1, 1)) and g.den == P((2,))
    # Denominator sign is normalized positive-leading.
    h = RationalFunction(P((1,)), P((-1, -1)))
    assert h.den.leading() > 0


def test_rational_eq_examples():
    one_minus_t2 = RationalFunction(P((1, 0, -1)), P((1, -1)))
    one_plus_t = RationalFunction(P((1, 1)))
    assert rational_eq(one_minus_t2, one_plus_t)
    assert not rational_eq(
        RationalFunction(P((1, -1))), RationalFunction(P((1, 1)))
    )


def test_rational_function_field_ops():
    t = RationalFunction(P((0, 1)))
    f = 1 / (1 - t)
    g = (1 + t) / (1 - t)
    assert f + f * t == f * (1 + t)
    assert g - f == t / (1 - t)
    assert (f * (1 - t)) == RationalFunction.one()
    assert f.substitute_power(2) == 1 / (1 - t * t)


def test_series_geometric():
    f = RationalFunction(P((1,)), P((1, -1)))
    assert series_expand(f, 4).coeffs == (1, 1, 1, 1, 1)


def _weighted_monomial_count(weights, k):
    """Brute-force count of monomials with total weighted degree k."""
    count = 0
    bounds = [range(0, k // w + 1) for w in weights]
    for combo in itertools.product(*bounds):
        if sum(w * e for w, e in zip(weights, combo)) == k:
            count += 1
    return count


def test_series_invariant_degrees():
    # (1 - t^12) / ((1-t^2)(1-t^3)(1-t^4)(1-t^6)) counts weighted monomials
    # in degrees 2,3,4,6 below the degree-12 relation.
    num = P.one_minus_power(12)
    den = P.one()
    for w in (2, 3, 4, 6):
        den = den * P.one_minus_power(w)
    f = RationalFunction(num, den)
    got = series_expand(f, 6)
    oracle = [_weighted_monomial_count((2, 3, 4, 6), k) for k in range(7)]
    assert got.coeffs == tuple(oracle)
    assert got.coeffs == (1, 0, 1, 1, 2, 1, 4)


def test_series_long_division_oracle():
    # (1 - t^4) / ((1-t)(1-t^2)^2), checked against direct long division.
    num = P.one_minus_power(4)
    den = P((1, -1)) * P.one_minus_power(2) * P.one_minus_power(2)
    f = RationalFunction(num, den)
    got = series_expand(f, 4)

    # Long-division oracle on the raw (unreduced) coefficient lists.
    n, d = list(num.coeffs), list(den.coeffs)
    quotient = []
    for k in range(5):
        c = Fraction(n[k] if k < len(n) else 0)
        for i in range(1, min(k, len(d) - 1) + 1):
            c -= d[i] * quotient[k - i]
        quotient.append(c / d[0])
    assert got.coeffs == tuple(quotient)
    assert got.coeffs == (1, 1, 3, 3, 5)


def test_series_zero_constant_term_denominator():
    f = RationalFunction(P((1,)), P((0, 1)))
    with pytest.raises(ZeroDivisionError):
        series_expand(f, 3)


def test_series_cauchy_product_property():
    rng = random.Random(99)
    for _ in range(10):
        fn = P([rng.randrange(-3, 4) for _ in range(4)])
        gn = P([rng.randrange(-3, 4) for _ in range(4)])
        fd = P([1] + [rng.randrange(-3, 4) for _ in range(3)])
        gd = P([1] + [rng.randrange(-3, 4) for _ in range(3)])
        f = RationalFunction(fn if not fn.is_zero() else P.one(), fd)
        g = RationalFunction(gn if not gn.is_zero() else P.one(), gd)
        order = 12
        lhs = series_expand(f * g, order)
        rhs = series_expand(f, order) * series_expand(g, order)
        assert lhs == rhs


def test_power_series_type():
    s = PowerSeries([1, 2, 3])
    assert s.order == 2
    assert s[1] == 2
    assert s.truncate(1).coeffs == (1, 2)
    assert s.is_integral()
    assert s.int_coeffs() == (1, 2, 3)
    with pytest.raises(ValueError):
        PowerSeries([1, 2], order=3)


def test_polynomial_json_and_str():
    p = P((1, 0, -3, 2))
    assert P.from_json(p.to_json()) == p
    assert str(P((1, -1))) == "1 - t"
    assert str(P.zero()) == "0"
