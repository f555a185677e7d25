from fractions import Fraction as F

import pytest

from holorec.exactmath.field import Quad
from holorec.exactmath.poly import Poly, RatFun
from holorec.genrec import sum_hyper_re
from holorec.parser import parse_recurrence, parse_term
from holorec.recurrence import annihilates

n = Poly([0, 1])


def test_two_term_example_from_ratios():
    rec = sum_hyper_re([(1, RatFun(n + 1, n + 3)),
                        (-1, RatFun((2 * n + 5) * (n + 1), (2 * n + 3) * (n + 3)))])
    assert rec == parse_recurrence("-(n+4)*a(n+2) - a(n+1) + (n+1)*a(n) = 0")


def test_two_term_example_from_terms():
    terms = [parse_term("1/((n+1)*(n+2))"), parse_term("(-1)^n*(2*n+3)/((n+1)*(n+2))")]
    assert sum_hyper_re(terms) == parse_recurrence("-(n+4)*a(n+2) - a(n+1) + (n+1)*a(n) = 0")


def test_fibonacci():
    s5 = Quad(0, 1, 5)
    rec = sum_hyper_re([RatFun.const((1 + s5) / 2), RatFun.const((1 - s5) / 2)])
    assert rec == parse_recurrence("-a(n+2) + a(n+1) + a(n) = 0")


def test_single_ratio():
    assert sum_hyper_re([RatFun.const(2)]) == parse_recurrence("a(n+1) - 2*a(n) = 0")


def test_main_example_coefficients():
    rs = [RatFun(n + 4, n + 1), RatFun(Poly([1]), n + 1), RatFun(-n, n + 1),
          RatFun(Poly([-1]), (n + F(1, 2)) ** 2)]
    rec = sum_hyper_re(rs)
    assert rec.order == 4
    for r in rs:
        assert annihilates(rec, r)
    lead_factors = (n + 2) * (n + 3) * (n + 4) * (2 * n + 7) ** 2
    assert rec.leading % lead_factors == Poly()
    assert rec.trailing % (4 * n * (n + 4)) == Poly()


def test_dependent_ratios_rejected():
    with pytest.raises(ValueError):
        sum_hyper_re([RatFun.const(2), RatFun.const(2)])
