from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from holorec.exactmath.poly import Poly, RatFun
from holorec.parser import parse_ratfun
from holorec.simplify import (SimplifyError, pochfactorsimp, pochhammer_normalize, product_value,
                              ratio_rule)

n = Poly([0, 1])


def poch(x, k):
    acc = F(1)
    for i in range(k):
        acc *= x + i
    return acc


@pytest.mark.parametrize("y,u,corr", [
    (F(5, 2), F(1, 2), RatFun((2 * n + 1) * (2 * n + 3), Poly([3]))),
    (F(1, 3), F(1, 3), RatFun.const(1)),
    (F(-1, 2), F(1, 2), RatFun(Poly([F(-1, 2)]), n - F(1, 2))),
])
def test_pochhammer_normalize(y, u, corr):
    got_u, got_corr = pochhammer_normalize(y)
    assert (got_u, got_corr) == (u, corr)
    for k in range(11):
        assert poch(y, k) == poch(u, k) * corr(k)


@pytest.mark.parametrize("y,x,expected", [
    (F(7, 3), F(1, 3), RatFun((1 + 3 * n) * (4 + 3 * n), Poly([4]))),
    (F(2, 5), F(2, 5), RatFun.const(1)),
    (F(1, 2), F(3, 2), RatFun(Poly([F(1, 2)]), n + F(1, 2))),
])
def test_ratio_rule(y, x, expected):
    r = ratio_rule(y, x)
    assert r == expected
    for k in range(11):
        assert poch(y, k) / poch(x, k) == r(k)


def test_worked_product_examples():
    t = pochfactorsimp(parse_ratfun("-1/(2*(n+1)*(2*n+1))"))
    assert str(t) == "(-1)^n/(2*n)!"
    r = parse_ratfun("(2*n+3)^2/((n+1)*(2*n+1))")
    t = pochfactorsimp(r)
    for k in range(21):
        expected = (1 + 2 * k) * F(2) ** (k - 1) * factorial(2 * (1 + k)) / ((k + 1) * F(4) ** k * factorial(k) ** 2)
        assert t.evaluate(k) == product_value(r, k) == expected
    assert str(pochfactorsimp(RatFun.const(1))) == "1"


@given(st.lists(st.fractions(min_value=F(1, 6), max_value=6, max_denominator=6), min_size=1, max_size=3),
       st.lists(st.fractions(min_value=F(1, 6), max_value=6, max_denominator=6), max_size=3),
       st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(bool),
       st.booleans())
def test_product_matches_direct_multiplication(nums, dens, c, product_rule):
    num, den = Poly([c]), Poly([1])
    for x in nums:
        num = num * (n + x)
    for x in dens:
        den = den * (n + x)
    r = RatFun(num, den)
    t = pochfactorsimp(r, product_rule=product_rule)
    for k in range(8):
        assert t.evaluate(k) == product_value(r, k)


def test_quadratic_atoms():
    r = RatFun((n * n + 1) * (n + F(1, 3)), (n * n + 4 * n + 5))
    t = pochfactorsimp(r)
    for k in range(12):
        assert t.evaluate(k) == product_value(r, k)


def test_product_rule_toggle_same_values():
    r = RatFun((n + F(5, 2)) * (n + 3), (n + F(1, 3)) * (n + F(1, 2)) * (n + 1))
    a, b = pochfactorsimp(r), pochfactorsimp(r, product_rule=False)
    for k in range(12):
        assert a.evaluate(k) == b.evaluate(k) == product_value(r, k)


def test_precondition():
    with pytest.raises(SimplifyError):
        pochfactorsimp(RatFun(n, Poly([1])))
    with pytest.raises(SimplifyError):
        pochhammer_normalize(F(-2))
