"""Exact scalars: the rationals and single quadratic extensions Q(sqrt(D)).

Rationals are plain :class:`fractions.Fraction` objects.  Elements of a
quadratic field with a nonzero irrational part are :class:`Quad` instances;
every operation that produces a vanishing irrational part collapses back to a
``Fraction``, so ``Quad(1, 1, 7) * Quad(1, -1, 7) == -6`` returns a Fraction.

For ``D > 0`` the real embedding with ``sqrt(D) > 0`` is used whenever a real
part or an ordering is needed.  For ``D < 0`` the "real part" is the rational
coordinate ``a``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ..errors import MixedFieldError


def squarefree_decompose(n):
    """Return ``(s, t)`` with ``n == s * t**2`` and ``s`` square-free (sign kept in ``s``).

    Trial division up to 10**6; a leftover cofactor is assumed square-free
    unless it is a perfect square.
    """
    if n == 0:
        raise ValueError("zero has no square-free part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, t = 1, 1
    p = 2
    while p * p <= n and p <= 10**6:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            t *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    if n > 1:
        r = isqrt(n)
        if r * r == n:
            t *= r
        else:
            s *= n
    return sign * s, t


def squarefree_part(q):
    """Square-free integer ``s`` with ``q`` a rational square times ``s``."""
    q = Fraction(q)
    s, _ = squarefree_decompose(q.numerator * q.denominator)
    return s


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``D is None``) or Q(sqrt(D)) for square-free ``D``."""

    D: int = None

    def __post_init__(self):
        if self.D is not None:
            if self.D in (0, 1) or squarefree_decompose(self.D)[1] != 1:
                raise ValueError(f"D must be square-free and not 0 or 1, got {self.D}")

    @property
    def kind(self):
        return "rationals" if self.D is None else "quadratic"

    @property
    def is_rational(self):
        return self.D is None

    def contains(self, x):
        d = field_D(x)
        return d is None or d == self.D

    def join(self, other):
        """Smallest supported field containing both, or raise MixedFieldError."""
        if self.D is None:
            return other
        if other.D is None or other.D == self.D:
            return self
        raise MixedFieldError(f"Q(sqrt({self.D})) and Q(sqrt({other.D})) cannot be combined")

    def to_json(self):
        if self.D is None:
            return {"kind": "rationals"}
        return {"kind": "quadratic", "D": self.D}

    @classmethod
    def from_json(cls, obj):
        if obj is None or obj.get("kind", "rationals") == "rationals":
            return cls()
        return cls(int(obj["D"]))

    def __str__(self):
        return "Q" if self.D is None else f"Q(sqrt({self.D}))"


QQ = FieldSpec()


class Quad:
    """``a + b*sqrt(D)`` with ``b != 0``; build through :func:`quad`."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b, D):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.D = D

    def _split(self, other):
        if isinstance(other, Quad):
            if other.D != self.D:
                raise MixedFieldError(
                    f"mixed-field operands sqrt({self.D}) and sqrt({other.D})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), 0
        return None, None

    def __add__(self, other):
        a, b = self._split(other)
        if a is None:
            return NotImplemented
        return quad(self.a + a, self.b + b, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._split(other)
        if a is None:
            return NotImplemented
        return quad(self.a - a, self.b - b, self.D)

    def __rsub__(self, other):
        a, b = self._split(other)
        if a is None:
            return NotImplemented
        return quad(a - self.a, b - self.b, self.D)

    def __mul__(self, other):
        a, b = self._split(other)
        if a is None:
            return NotImplemented
        return quad(self.a * a + self.D * self.b * b, self.a * b + self.b * a, self.D)

    __rmul__ = __mul__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def conjugate(self):
        return Quad(self.a, -self.b, self.D)

    def norm(self):
        return self.a * self.a - self.D * self.b * self.b

    def inverse(self):
        nm = self.norm()
        # b != 0 and D square-free guarantee nm != 0
        return Quad(self.a / nm, -self.b / nm, self.D)

    def __truediv__(self, other):
        if isinstance(other, Quad):
            if other.D != self.D:
                raise MixedFieldError(
                    f"mixed-field operands sqrt({self.D}) and sqrt({other.D})")
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Quad(self.a / other, self.b / other, self.D)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Fraction(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.D == other.D and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Quad({self.a}, {self.b}, {self.D})"

    def __str__(self):
        return format_scalar(self)


def quad(a, b, D):
    """Element ``a + b*sqrt(D)``, collapsing to a Fraction when ``b == 0``."""
    if b == 0 or D is None:
        return Fraction(a)
    return Quad(a, b, D)


def to_scalar(x):
    if isinstance(x, (Fraction, Quad)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def field_D(x):
    """Radicand of the field an element needs (None for rationals)."""
    return x.D if isinstance(x, Quad) else None


def is_rational(x):
    return not isinstance(x, Quad)


def parts(x):
    """Rational coordinates ``(a, b)`` of ``a + b*sqrt(D)``."""
    if isinstance(x, Quad):
        return x.a, x.b
    return Fraction(x), Fraction(0)


def conj(x):
    return x.conjugate() if isinstance(x, Quad) else x


def norm(x):
    return x.norm() if isinstance(x, Quad) else Fraction(x) * x


def scalar_key(x):
    """Deterministic total order: lexicographic on ``(a, b)``."""
    a, b = parts(x)
    return (a, b)


def _rational_sign(q):
    return (q > 0) - (q < 0)


def real_sign(x):
    """Sign of the real embedding (D > 0) or of the real part (D < 0)."""
    if not isinstance(x, Quad):
        return _rational_sign(x)
    if x.D < 0:
        return _rational_sign(x.a)
    return _surd_sign(x.a, x.b, x.D)


def _surd_sign(p, q, D):
    sp, sq = _rational_sign(p), _rational_sign(q)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: compare p**2 with q**2 * D
    diff = p * p - q * q * D
    return sp * _rational_sign(diff)


def floor_real(x):
    """Exact floor of the real part (real embedding when D > 0)."""
    if not isinstance(x, Quad):
        x = Fraction(x)
        return x.numerator // x.denominator
    if x.D < 0:
        return x.a.numerator // x.a.denominator
    t = x.b * x.b * x.D
    root_floor = isqrt(t.numerator // t.denominator)
    est = x.a.numerator // x.a.denominator + (root_floor if x.b > 0 else -root_floor - 1)
    while _surd_sign(x.a - est, x.b, x.D) < 0:
        est -= 1
    while _surd_sign(x.a - est - 1, x.b, x.D) >= 0:
        est += 1
    return est


def real_part_floor_shift(x, target):
    """Shift ``x`` by an integer into a unit strip.

    ``target="roots_strip"`` puts the real part in [-1, 0);
    ``target="poch_strip"`` puts it in (0, 1].  Returns ``(rep, shift)`` with
    ``rep + shift == x``.
    """
    x = to_scalar(x)
    f = floor_real(x)
    if target == "roots_strip":
        shift = f + 1
    elif target == "poch_strip":
        # ceil(Re x) - 1, where ceil = floor unless Re x is an integer
        is_int = is_rational(x) and x.denominator == 1
        if isinstance(x, Quad) and x.D < 0:
            is_int = x.a.denominator == 1
        shift = f - 1 if is_int else f
    else:
        raise ValueError(f"unknown strip {target!r}")
    return x - shift, shift


def congruent_mod_z(x, y):
    """True when ``x - y`` is a rational integer."""
    d = to_scalar(x) - to_scalar(y)
    return is_rational(d) and d.denominator == 1


def rational_sqrt(q):
    """Exact square root of a nonnegative rational square, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def sqrt_in_field(x, D=None):
    """A square root of ``x`` inside Q (D None) or Q(sqrt(D)), or None.

    For quadratic ``x = a + b*sqrt(D)`` this solves ``u**2 + D*v**2 = a`` and
    ``2*u*v = b`` over Q via the norm ``a**2 - D*b**2``.
    """
    x = to_scalar(x)
    if isinstance(x, Quad):
        if D is not None and D != x.D:
            raise MixedFieldError(f"element of Q(sqrt({x.D})) in Q(sqrt({D}))")
        D = x.D
        a, b = x.a, x.b
        nr = rational_sqrt(a * a - D * b * b)
        if nr is None:
            return None
        for u2 in ((a + nr) / 2, (a - nr) / 2):
            u = rational_sqrt(u2)
            if u:
                v = b / (2 * u)
                cand = quad(u, v, D)
                if cand * cand == x:
                    return cand
        return None
    r = rational_sqrt(x)
    if r is not None:
        return r
    if D is not None:
        v = rational_sqrt(x / D)
        if v is not None:
            return Quad(0, v, D)
    return None


def format_scalar(x):
    """Text form ``p/q`` or ``p/q+r/s*sqrt(D)``."""
    if not isinstance(x, Quad):
        return str(Fraction(x))
    a, b, D = x.a, x.b, x.D
    if b == 1:
        surd = f"sqrt({D})"
    elif b == -1:
        surd = f"-sqrt({D})"
    else:
        surd = f"{b}*sqrt({D})"
    if a == 0:
        return surd
    return f"{a}{'' if surd.startswith('-') else '+'}{surd}"


def parse_scalar(text):
    """Inverse of :func:`format_scalar` (accepts any constant expression)."""
    from ..parser import parse_constant
    return parse_constant(text)


def scalar_arith(op, x, y=None):
    """Dispatch helper mirroring the operation table of the field layer."""
    x = to_scalar(x)
    if y is not None:
        y = to_scalar(y)
        if field_D(x) and field_D(y) and field_D(x) != field_D(y):
            raise MixedFieldError("mixed-field operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise ZeroDivisionError("division by zero")
        return x / y
    if op == "neg":
        return -x
    if op == "inv":
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x
    if op == "conj":
        return conj(x)
    raise ValueError(f"unknown op {op!r}")
