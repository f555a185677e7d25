from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from holorec.errors import MixedFieldError
from holorec.exactmath.field import (FieldSpec, QQ, Quad, congruent_mod_z, format_scalar,
                                     parse_scalar, quad, real_part_floor_shift, scalar_arith,
                                     sqrt_in_field, squarefree_decompose)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=12)
Ds = st.sampled_from([-3, -1, 2, 3, 5, 7, 13])


def test_scalar_examples():
    assert scalar_arith("add", F(1, 2), F(1, 3)) == F(5, 6)
    assert Quad(1, 1, 7) * Quad(1, -1, 7) == -6
    assert isinstance(Quad(1, 1, 7) * Quad(1, -1, 7), F)
    assert Quad(2, 1, 3).inverse() == Quad(2, -1, 3)


def test_mixed_fields_raise():
    with pytest.raises(MixedFieldError):
        Quad(0, 1, 2) + Quad(0, 1, 3)
    with pytest.raises(MixedFieldError):
        FieldSpec(2).join(FieldSpec(3))
    assert FieldSpec(5).join(QQ) == FieldSpec(5)


@pytest.mark.parametrize("x,target,expected", [
    (F(5, 2), "poch_strip", (F(1, 2), 2)),
    (F(1), "roots_strip", (F(-1), 2)),
    (F(-7, 2), "roots_strip", (F(-1, 2), -3)),
    (F(1), "poch_strip", (F(1), 0)),
    (F(-1), "roots_strip", (F(-1), 0)),
])
def test_strip_examples(x, target, expected):
    assert real_part_floor_shift(x, target) == expected


@given(fracs, fracs, Ds)
def test_strips_land_in_interval(a, b, D):
    x = quad(a, b, D)
    rep, s = real_part_floor_shift(x, "roots_strip")
    assert rep + s == x and isinstance(s, int)
    re = rep.a if isinstance(rep, Quad) and D < 0 else float(rep) if not isinstance(rep, Quad) else rep.a + float(rep.b) * D ** 0.5
    assert -1 - 1e-9 <= float(re) < 1e-9
    rep2, s2 = real_part_floor_shift(x, "poch_strip")
    assert rep2 + s2 == x
    assert congruent_mod_z(rep, rep2)


@given(fracs, fracs, fracs, fracs, Ds)
def test_quad_field_axioms(a, b, c, d, D):
    x, y = quad(a, b, D), quad(c, d, D)
    assert (x + y) - y == x
    assert x * y == y * x
    if y:
        assert (x / y) * y == x


@given(st.integers(-10**6, 10**6).filter(bool))
def test_squarefree_decompose(n):
    s, t = squarefree_decompose(n)
    assert s * t * t == n
    for p in range(2, 60):
        assert s % (p * p) != 0


def test_sqrt_in_field():
    assert sqrt_in_field(F(9, 4)) == F(3, 2)
    assert sqrt_in_field(F(28)) is None
    assert sqrt_in_field(F(28), 7) == Quad(0, 2, 7)
    r = sqrt_in_field(Quad(8, 2, 7))  # (1+sqrt(7))^2
    assert r * r == Quad(8, 2, 7)


@given(fracs, fracs, Ds)
def test_format_parse_round_trip(a, b, D):
    x = quad(a, b, D)
    assert parse_scalar(format_scalar(x)) == x
