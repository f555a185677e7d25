from fractions import Fraction as F

import pytest

from holorec.errors import ParseError
from holorec.exactmath.field import Quad
from holorec.exactmath.poly import Poly, RatFun
from holorec.hypterm import Factorial, Pochhammer
from holorec.parser import parse_constant, parse_ratfun, parse_recurrence, parse_term
from holorec.recurrence import Recurrence

n = Poly([0, 1])


def test_recurrence_examples():
    assert parse_recurrence("(n+1)*a(n+1) - n*a(n) = 0").coeffs == (-n, n + 1)
    rec = parse_recurrence("-(n+4)*a(n+2) - a(n+1) + (n+1)*a(n) = 0")
    assert rec == Recurrence((n + 1, -Poly([1]), -(n + 4))) or rec.order == 2
    assert parse_recurrence("a(n+1) = a(n) + a(n-1)") == parse_recurrence("a(n+2) - a(n+1) - a(n) = 0")


def test_unknown_symbol_position():
    with pytest.raises(ParseError) as exc:
        parse_recurrence("a(n+2) - a(n) * x = 0")
    assert "x" in str(exc.value) and exc.value.column == 17


@pytest.mark.parametrize("src", [
    "a(n+1) - 2*a(n = 0", "a(n)*a(n+1) = 0", "a(2*n) = 0", "n^2 = 0", "a(n+1) - 2 = 0",
    "pochhammer(-2,n)", "(n-1)!*n + 1", "3^n + 2^n", "a(n) = 0 = 0", "a(n+1) - a(n) $",
])
def test_errors(src):
    with pytest.raises(ParseError):
        (parse_recurrence if "a(" in src or "=" in src else parse_term)(src)


def test_multiline_error_position():
    with pytest.raises(ParseError) as exc:
        parse_recurrence("a(n+1)\n  - 2*a(n) ? 0")
    assert (exc.value.line, exc.value.column) == (2, 12)


def test_term_examples():
    assert parse_term("binomial(n+3,n)").full_ratio() == RatFun(n + 4, n + 1)
    t = parse_term("(-1)^n/pochhammer(1/2,n)^2")
    assert t.base == -1 and t.atoms == ((Pochhammer(F(1, 2)), -2),)
    assert parse_term("1/n!").atoms == ((Factorial(1, 0), -1),)


def test_lowering():
    for src, k0 in [("(n-2)!", 2), ("GAMMA(n+3)", 0), ("pochhammer(7/3,n)", 0),
                    ("binomial(2*n,n)", 0), ("2^(3*n-1)", 0)]:
        t = parse_term(src)
        from math import factorial, comb
        ref = {"(n-2)!": lambda k: factorial(k - 2), "GAMMA(n+3)": lambda k: factorial(k + 2),
               "pochhammer(7/3,n)": lambda k: _poch(F(7, 3), k), "binomial(2*n,n)": lambda k: comb(2 * k, k),
               "2^(3*n-1)": lambda k: F(2) ** (3 * k - 1)}[src]
        for k in range(k0, 10):
            assert t.evaluate(k) == ref(k)


def _poch(x, k):
    acc = F(1)
    for i in range(k):
        acc *= x + i
    return acc


def test_constants_and_ratfuns():
    assert parse_constant("1/2+3/2*sqrt(5)") == Quad(F(1, 2), F(3, 2), 5)
    assert parse_constant("sqrt(12)") == Quad(0, 2, 3)
    assert parse_constant("sqrt(9)") == 3
    assert parse_ratfun("-1/(2*(n+1)*(2*n+1))") == RatFun(Poly([-1]), 2 * (n + 1) * (2 * n + 1))
    assert parse_ratfun("n**2") == RatFun.from_poly(n * n)


def test_json_input():
    rec = parse_recurrence("(n+1)*a(n+1) - n*a(n) = 0")
    import json
    assert parse_recurrence(json.dumps(rec.to_json())) == rec
