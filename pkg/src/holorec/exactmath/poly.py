"""Dense univariate polynomials and reduced rational functions over Q or Q(sqrt(D)).

``Poly`` stores a tuple of exact coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  ``RatFun`` is always
kept with coprime numerator and denominator and a monic denominator, so
structural equality is mathematical equality.
"""

from fractions import Fraction
from functools import reduce
from math import gcd as igcd

from .. import kernels as K
from .field import Quad, field_D, format_scalar, is_rational, to_scalar
from ..errors import MixedFieldError, PoleError


def _coerce_coeffs(coeffs):
    out = [to_scalar(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _integer_form(c):
    """``(ints, den)`` with ``c == ints/den`` when every coefficient is rational."""
    den = 1
    for x in c:
        if type(x) is not Fraction:
            return None
        d = x.denominator
        if d != 1 and den % d:
            den = den * d // igcd(den, d)
    return [x.numerator * (den // x.denominator) for x in c], den


class Poly:
    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _coerce_coeffs(coeffs)

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.c = tuple(coeffs)
        return p

    @classmethod
    def const(cls, x):
        return cls((x,))

    @classmethod
    def x(cls):
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def linear(cls, root):
        """Monic ``n - root``."""
        return cls._raw((-to_scalar(root), Fraction(1)))

    @classmethod
    def from_roots(cls, roots):
        return reduce(lambda acc, r: acc * cls.linear(r), roots, cls.const(1))

    # -- basic properties -------------------------------------------------

    @property
    def degree(self):
        return len(self.c) - 1

    def __len__(self):
        return len(self.c)

    def __bool__(self):
        return bool(self.c)

    def is_zero(self):
        return not self.c

    def is_constant(self):
        return len(self.c) <= 1

    @property
    def lc(self):
        return self.c[-1] if self.c else Fraction(0)

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def field_D(self):
        D = None
        for x in self.c:
            d = field_D(x)
            if d is not None:
                if D is not None and d != D:
                    raise MixedFieldError("polynomial mixes quadratic fields")
                D = d
        return D

    def is_rational(self):
        return all(is_rational(x) for x in self.c)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Quad)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly._raw(K.add(self.c, o.c))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly._raw(K.sub(self.c, o.c))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly._raw(K.sub(o.c, self.c))

    def __neg__(self):
        return Poly._raw([-x for x in self.c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Quad)):
            return Poly._raw(K.scale(self.c, to_scalar(other)))
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.c) > 4 and len(other.c) > 4:
            a, b = _integer_form(self.c), _integer_form(other.c)
            if a is not None and b is not None:
                # multiply over Z, divide once per coefficient
                den = a[1] * b[1]
                return Poly._raw([Fraction(x, den) for x in K.mul(a[0], b[0])])
        return Poly._raw(K.mul(self.c, other.c))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        q, r = K.divmod_(self.c, o.c)
        return Poly._raw(q), Poly._raw(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Division by a scalar, or exact division by a polynomial."""
        if isinstance(other, (int, Fraction, Quad)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / to_scalar(other))
        if isinstance(other, Poly):
            q, r = divmod(self, other)
            if r:
                raise ValueError("inexact polynomial division")
            return q
        return NotImplemented

    def exquo(self, other):
        return self / other

    def divides(self, other):
        """True when ``self`` divides ``other``."""
        return not (other % self)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __call__(self, x):
        return K.horner(self.c, x)

    def shift(self, k):
        """``p(n + k)``."""
        if not k:
            return self
        return Poly._raw(K.taylor_shift(self.c, to_scalar(k)))

    def scale_var(self, s):
        """``p(s*n)``."""
        s = to_scalar(s)
        out, pw = [], Fraction(1)
        for x in self.c:
            out.append(x * pw)
            pw = pw * s
        return Poly(out)

    def derivative(self):
        return Poly._raw(K.trim([i * x for i, x in enumerate(self.c)][1:]))

    def monic(self):
        if not self.c:
            return self
        lc = self.c[-1]
        if lc == 1:
            return self
        inv = 1 / lc
        return Poly._raw([x * inv for x in self.c[:-1]] + [Fraction(1)])

    def conjugate(self):
        return Poly._raw([x.conjugate() if isinstance(x, Quad) else x for x in self.c])

    def map_coeffs(self, fn):
        return Poly([fn(x) for x in self.c])

    # -- content / integer views ------------------------------------------

    def integerize(self):
        """``(ints, scale)`` with ``ints`` primitive integers and ``self == scale * Poly(ints)``.

        Only for rational polynomials.  The sign is chosen so the leading
        integer coefficient is positive.
        """
        if not self.c:
            return [], Fraction(0)
        den = 1
        for x in self.c:
            d = x.denominator
            den = den * d // igcd(den, d)
        ints = [int(x * den) for x in self.c]
        g = reduce(igcd, ints)
        if ints[-1] < 0:
            g = -g
        ints = [v // g for v in ints]
        return ints, Fraction(g, den)

    # -- presentation -----------------------------------------------------

    def __repr__(self):
        return f"Poly({[str(x) for x in self.c]})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var="n"):
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            x = self.c[k]
            if not x:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            s = format_scalar(x)
            if mono:
                if isinstance(x, Quad) and x.a != 0:
                    s = f"({s})*{mono}"
                elif x == 1:
                    s = mono
                elif x == -1:
                    s = f"-{mono}"
                else:
                    s = f"{s}*{mono}"
            terms.append(s)
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def is_monomial(self):
        return sum(1 for x in self.c if x) <= 1


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.x()


def poly_gcd(p, q):
    """Monic greatest common divisor (zero if both are zero)."""
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    if p.is_rational() and q.is_rational():
        return _int_gcd(p, q)
    a, b = p.monic(), q.monic()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def _prem_int(a, b):
    """Integer pseudo-remainder of coefficient lists (``b`` nonzero)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def _primitive(a):
    g = reduce(igcd, a)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def _int_gcd(p, q):
    a, _ = p.integerize()
    b, _ = q.integerize()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem_int(a, b)
        a, b = b, (_primitive(r) if r else [])
    return Poly(a).monic()


def poly_lcm(p, q):
    if not p or not q:
        return ZERO
    return (p * q // poly_gcd(p, q)).monic()


def squarefree_factorization(p):
    """Yun's algorithm: list of ``(g_i, i)`` with ``monic(p) == prod g_i**i``."""
    p = p.monic()
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p / a
    c = dp / a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b / a
        c = d / a
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
        d = c - b.derivative()
    return out


class RatFun:
    """Reduced quotient ``num/den`` with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = num if isinstance(num, Poly) else Poly.const(num)
        if den is None:
            den = ONE
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = ONE
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num / g, den / g
            lc = den.lc
            if lc != 1:
                inv = 1 / lc
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p):
        return cls(p, ONE, _reduced=True)

    @classmethod
    def const(cls, x):
        return cls(Poly.const(x), ONE, _reduced=True)

    @staticmethod
    def _lift(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun.from_poly(other)
        if isinstance(other, (int, Fraction, Quad)):
            return RatFun.const(other)
        return None

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.coeff(0)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)
        sd, od = self.den / g, o.den / g
        return RatFun(self.num * od + o.num * sd, sd * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            c = o.num.coeff(0)
            if not c:
                return RatFun.const(0)
            return RatFun(self.num * c, self.den, _reduced=True)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = (self.num / g1, o.den / g1) if g1.degree > 0 else (self.num, o.den)
        n2, d1 = (o.num / g2, self.den / g2) if g2.degree > 0 else (o.num, self.den)
        return RatFun(n1 * n2, d1 * d2, _reduced=True)._fix_lc()

    __rmul__ = __mul__

    def _fix_lc(self):
        lc = self.den.lc
        if lc != 1:
            inv = 1 / lc
            return RatFun(self.num * inv, self.den * inv, _reduced=True)
        return self

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num, _reduced=True)._fix_lc()

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun(self.num ** k, self.den ** k, _reduced=True)

    def shift(self, k):
        if not k:
            return self
        return RatFun(self.num.shift(k), self.den.shift(k), _reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole of {self} at {x}", factor=self.den)
        return self.num(x) / d

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def field_D(self):
        a, b = self.num.field_D(), self.den.field_D()
        if a is not None and b is not None and a != b:
            raise MixedFieldError("rational function mixes quadratic fields")
        return a if a is not None else b

    def monic_parts(self):
        """``(C, rho)`` with ``self == C * rho`` and ``rho`` having monic numerator."""
        if not self.num:
            return Fraction(0), self
        lc = self.num.lc
        return lc, RatFun(self.num.monic(), self.den, _reduced=True)

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_poly():
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"


def interpolate(xs, ys):
    """Polynomial of degree < len(xs) through the points, by Newton's divided differences."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    acc = Poly.const(coef[-1]) if n else ZERO
    for i in range(n - 2, -1, -1):
        acc = acc * Poly.linear(xs[i]) + coef[i]
    return acc
