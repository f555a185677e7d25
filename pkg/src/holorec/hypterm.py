"""Hypergeometric terms in the normal form ``C^n * R(n) * prod(atom**e)``.

Atom heads:

* ``Factorial(a, b)`` is ``(a*n + b)!`` with ``a >= 1`` and ``b >= 0``;
* ``Pochhammer(x)`` is ``(x)_n`` with the real part of ``x`` in (0, 1];
  ``(1)_n`` is stored as ``Factorial(1, 0)``;
* ``QuadPochhammer(q)`` is ``prod_{k<n} q(k)`` for a monic quadratic ``q``
  irreducible over the working field, shifted so the mean of its roots has
  real part in [-1, 0).

``(-1)^n`` and every other geometric factor live in the base ``C``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import HolorecError, PoleError
from .exactmath.factor import factorize
from .exactmath.field import (Quad, field_D, floor_real, format_scalar, is_rational,
                              parts, real_part_floor_shift, scalar_key, to_scalar)
from .exactmath.poly import ONE, Poly, RatFun


class TermError(HolorecError, ValueError):
    """Malformed hypergeometric term."""


@dataclass(frozen=True)
class Factorial:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0:
            raise TermError(f"({self.a}*n+{self.b})! is not defined at n = 0")

    def sort_key(self):
        return (0, self.a, self.b)

    def ratio(self):
        """``(const, monic RatFun)`` of ``head(n+1)/head(n)``."""
        num = Poly.from_roots([Fraction(-(self.b + t), self.a) for t in range(1, self.a + 1)])
        return Fraction(self.a) ** self.a, RatFun.from_poly(num)

    def value(self, n0):
        return Fraction(factorial(self.a * n0 + self.b))

    def text(self):
        if self.a == 1 and self.b == 0:
            return "n!"
        return f"({_linear_text(self.a, self.b)})!"

    def latex(self):
        if self.a == 1 and self.b == 0:
            return "n!"
        return f"({_linear_text(self.a, self.b, latex=True)})!"

    def to_json(self):
        return {"head": "factorial", "a": self.a, "b": self.b}


@dataclass(frozen=True)
class Pochhammer:
    x: object

    def __post_init__(self):
        x = to_scalar(self.x)
        object.__setattr__(self, "x", x)
        rep, shift = real_part_floor_shift(x, "poch_strip")
        if shift != 0:
            raise TermError(f"Pochhammer argument {format_scalar(x)} is outside the (0, 1] strip")
        if x == 1:
            raise TermError("(1)_n must be stored as n!")

    def sort_key(self):
        return (1,) + scalar_key(self.x)

    def ratio(self):
        return Fraction(1), RatFun.from_poly(Poly.linear(-self.x))

    def value(self, n0):
        acc = Fraction(1)
        for k in range(n0):
            acc = acc * (self.x + k)
        return acc

    def text(self):
        return f"pochhammer({format_scalar(self.x)},n)"

    def latex(self):
        return f"\\left({_latex_scalar(self.x)}\\right)_{{n}}"

    def to_json(self):
        return {"head": "pochhammer", "x": format_scalar(self.x)}


@dataclass(frozen=True)
class QuadPochhammer:
    q: Poly

    def __post_init__(self):
        if self.q.degree != 2 or self.q.lc != 1:
            raise TermError("quadratic Pochhammer needs a monic quadratic")

    def sort_key(self):
        return (2,) + tuple(scalar_key(x) for x in self.q.c)

    def ratio(self):
        return Fraction(1), RatFun.from_poly(self.q)

    def value(self, n0):
        acc = Fraction(1)
        for k in range(n0):
            acc = acc * self.q(k)
        return acc

    def text(self):
        return f"quadpoch({self.q.to_text()},n)"

    def latex(self):
        return f"\\prod_{{k=0}}^{{n-1}}\\left({self.q.to_text('k')}\\right)"

    def to_json(self):
        return {"head": "quadpoch", "q": [format_scalar(x) for x in self.q.c]}


def canonical_quadratic(q):
    """Shift a monic quadratic so its mean root has real part in [-1, 0).

    Returns ``(q(n + s), s)``; every root moves by ``-s``.
    """
    mean = -q.coeff(1) / 2
    _, s = real_part_floor_shift(mean, "roots_strip")
    return q.shift(s), s


def pochhammer_atom(x):
    """Head for ``(x)_n`` with ``x`` already in the (0, 1] strip."""
    x = to_scalar(x)
    if x == 1:
        return Factorial(1, 0)
    return Pochhammer(x)


def _linear_text(a, b, latex=False):
    an = "n" if a == 1 else (f"{a}n" if latex else f"{a}*n")
    if b == 0:
        return an
    return f"{an}+{b}" if b > 0 else f"{an}{b}"


def _latex_scalar(x):
    if isinstance(x, Quad):
        a, b = x.a, x.b
        surd = f"\\sqrt{{{x.D}}}"
        bs = "" if abs(b) == 1 else _latex_scalar(abs(b))
        body = f"{bs}{surd}"
        if a == 0:
            return ("-" if b < 0 else "") + body
        return f"{_latex_scalar(a)}{'-' if b < 0 else '+'}{body}"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _merge_atoms(pairs):
    acc = {}
    for head, e in pairs:
        if e:
            acc[head] = acc.get(head, 0) + e
    return tuple(sorted(((h, e) for h, e in acc.items() if e),
                        key=lambda he: he[0].sort_key()))


@dataclass(frozen=True)
class HypTerm:
    base: object = Fraction(1)
    rat: RatFun = RatFun.const(1)
    atoms: tuple = ()

    def __post_init__(self):
        base = to_scalar(self.base)
        if not base:
            raise TermError("base must be nonzero")
        object.__setattr__(self, "base", base)
        rat = self.rat if isinstance(self.rat, RatFun) else RatFun._lift(self.rat)
        if not rat:
            raise TermError("rational part must be nonzero")
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "atoms", _merge_atoms(self.atoms))

    # -- algebra used by the parser --------------------------------------

    @classmethod
    def scalar(cls, x):
        return cls(Fraction(1), RatFun.const(x), ())

    def is_rational(self):
        """True when the term is a plain rational function of n."""
        return self.base == 1 and not self.atoms

    def __mul__(self, other):
        if not isinstance(other, HypTerm):
            other = HypTerm(Fraction(1), RatFun._lift(other), ())
        return HypTerm(self.base * other.base, self.rat * other.rat, self.atoms + other.atoms)

    __rmul__ = __mul__

    def inverse(self):
        return HypTerm(1 / self.base, self.rat.inverse(), tuple((h, -e) for h, e in self.atoms))

    def __truediv__(self, other):
        if not isinstance(other, HypTerm):
            other = HypTerm(Fraction(1), RatFun._lift(other), ())
        return self * other.inverse()

    def __rtruediv__(self, other):
        return HypTerm(Fraction(1), RatFun._lift(other), ()) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return HypTerm(self.base ** k, self.rat ** k, tuple((h, e * k) for h, e in self.atoms))

    def field_D(self):
        D = field_D(self.base) or self.rat.field_D()
        for h, _ in self.atoms:
            D = D or (field_D(h.x) if isinstance(h, Pochhammer) else None)
        return D

    # -- semantics -------------------------------------------------------

    def ratio(self):
        """``(C', rho)`` with ``t(n+1)/t(n) == C' * rho`` and ``rho`` monic over monic."""
        const = self.base
        rho = self.rat.shift(1) / self.rat
        for head, e in self.atoms:
            c, r = head.ratio()
            const = const * c ** e
            rho = rho * r ** e
        lc, rho = rho.monic_parts()
        return const * lc, rho

    def full_ratio(self):
        c, rho = self.ratio()
        return rho * c

    def evaluate(self, n0):
        if n0 < 0:
            raise ValueError("evaluation point must be nonnegative")
        try:
            value = self.rat(n0)
        except PoleError:
            raise PoleError(
                f"rational part {self.rat} has a pole at n = {n0}", factor=self.rat.den) from None
        value = value * self.base ** n0
        for head, e in self.atoms:
            v = head.value(n0)
            if e < 0 and not v:
                raise PoleError(f"{head.text()} vanishes at n = {n0}", factor=head)
            value = value * v ** e
        return value

    # -- rendering -------------------------------------------------------

    def render(self, fmt="text"):
        if fmt == "json":
            import json
            return json.dumps(self.to_json(), sort_keys=True)
        if fmt == "latex":
            return _render_latex(self)
        return _render_text(self)

    def __str__(self):
        return _render_text(self)

    def to_json(self):
        return {
            "base": format_scalar(self.base),
            "rat": {
                "num": [format_scalar(x) for x in self.rat.num.c],
                "den": [format_scalar(x) for x in self.rat.den.c],
            },
            "atoms": [dict(h.to_json(), exp=e) for h, e in self.atoms],
            "text": _render_text(self),
        }

    @classmethod
    def from_json(cls, obj):
        from .exactmath.field import parse_scalar
        num = Poly([parse_scalar(x) for x in obj["rat"]["num"]])
        den = Poly([parse_scalar(x) for x in obj["rat"]["den"]])
        atoms = []
        for a in obj.get("atoms", []):
            if a["head"] == "factorial":
                h = Factorial(int(a["a"]), int(a["b"]))
            elif a["head"] == "pochhammer":
                h = pochhammer_atom(parse_scalar(a["x"]))
            else:
                h = QuadPochhammer(Poly([parse_scalar(x) for x in a["q"]]))
            atoms.append((h, int(a["exp"])))
        return cls(parse_scalar(obj["base"]), RatFun(num, den), tuple(atoms))


def ratio_equivalent(s, t):
    """True when two terms differ by a nonzero constant factor."""
    return s.ratio() == t.ratio()


def term_ratio(t):
    return t.ratio()


def term_eval(t, n0):
    return t.evaluate(n0)


def render(t, fmt="text"):
    return t.render(fmt)


# -- text rendering ----------------------------------------------------------

def _poly_factors_text(p, field_D_=None):
    """Constant and factor strings of a polynomial, integer-primitive where rational."""
    if p.degree < 1:
        return p.lc, []
    fl = factorize(p)
    const = fl.unit
    out = []
    linear = sorted(fl.factors, key=lambda fm: scalar_key(fm[0].coeff(0)))
    for f, m in linear + list(fl.unsplit):
        if f.is_rational():
            ints, scale = f.integerize()
            g = Poly(ints)
            const = const * scale ** m
        else:
            g = f
        body = g.to_text()
        wrapped = body if (g.degree == 1 and g.is_monomial() and g.lc == 1) else f"({body})"
        out.append(wrapped if m == 1 else f"{wrapped}^{m}")
    return const, out


def _geom_parts(base):
    num, den = [], []
    if base == 1:
        return num, den
    if isinstance(base, Quad):
        num.append(f"({format_scalar(base)})^n")
        return num, den
    p, q = base.numerator, base.denominator
    if p == -1:
        num.append("(-1)^n")
    elif p < 0:
        num.append(f"({p})^n")
    elif p != 1:
        num.append(f"{p}^n")
    if q != 1:
        den.append(f"{q}^n")
    return num, den


def _atom_text(head, e, latex=False):
    body = head.latex() if latex else head.text()
    return body if e == 1 else f"{body}^{e}"


def _collect(t, latex=False):
    num, den = _geom_parts(t.base)
    cn, fn = _poly_factors_text(t.rat.num)
    cd, fd = _poly_factors_text(t.rat.den)
    const = cn / cd
    if isinstance(const, Quad):
        cnum = [f"({format_scalar(const)})"]
        cden = []
    else:
        cnum = [str(abs(const.numerator))] if abs(const.numerator) != 1 else []
        cden = [str(const.denominator)] if const.denominator != 1 else []
    sign = "-" if (is_rational(const) and const < 0) else ""
    num = cnum + num + fn
    den = cden + den + fd
    for head, e in t.atoms:
        (num if e > 0 else den).append(_atom_text(head, abs(e), latex))
    return sign, num, den


def _render_text(t):
    sign, num, den = _collect(t)
    top = "*".join(num) if num else "1"
    if not den:
        return sign + top
    bottom = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
    return f"{sign}{top}/{bottom}"


def _render_latex(t):
    sign, num, den = _collect(t, latex=True)

    def tex(s):
        return re.sub(r"sqrt\((-?\d+)\)", r"\\sqrt{\1}", s.replace("*", " \\cdot "))

    top = " ".join(tex(x) for x in num) if num else "1"
    if not den:
        return sign + top
    return f"{sign}\\frac{{{top}}}{{{' '.join(tex(x) for x in den)}}}"


def display_constant(t):
    """Scalar factor that rendering would print in front of ``t``."""
    cn, _ = _poly_factors_text(t.rat.num)
    cd, _ = _poly_factors_text(t.rat.den)
    return cn / cd


def strip_constant(t):
    """``t`` divided by its printed constant; solutions are only defined up to one."""
    c = display_constant(t)
    if c == 1:
        return t
    return HypTerm(t.base, t.rat * (1 / c), t.atoms)
