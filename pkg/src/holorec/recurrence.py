"""Holonomic recurrences ``sum_i P_i(n) a(n+i) = 0`` in a canonical form."""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as igcd

from .errors import HolorecError
from .exactmath.field import FieldSpec, Quad, format_scalar, parts, to_scalar
from .exactmath.poly import ONE, Poly, RatFun, poly_gcd, poly_lcm


class RecurrenceError(HolorecError, ValueError):
    """The coefficient list does not describe a recurrence of order >= 1."""


@dataclass(frozen=True)
class Recurrence:
    """Canonical recurrence; build it with :func:`normalize`.

    ``shift`` records how many zero coefficients were dropped at the low end:
    the stored equation is the input equation with ``n`` replaced by ``n - shift``.
    """

    coeffs: tuple
    var: str = "n"
    shift: int = 0

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def trailing(self):
        return self.coeffs[0]

    @property
    def leading(self):
        return self.coeffs[-1]

    def field(self):
        D = None
        for p in self.coeffs:
            d = p.field_D()
            if d is not None:
                D = d
        return FieldSpec(D)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Recurrence):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_text(self):
        terms = []
        for i in range(self.order, -1, -1):
            p = self.coeffs[i]
            if not p:
                continue
            neg = not isinstance(p.lc, Quad) and p.lc < 0
            if neg:
                p = -p
            shift = f"a({self.var}+{i})" if i else f"a({self.var})"
            body = p.to_text(self.var)
            if body == "1":
                term = shift
            elif p.is_monomial() and not isinstance(p.lc, Quad):
                term = f"{body}*{shift}"
            else:
                term = f"({body})*{shift}"
            terms.append(("-" if neg else "+", term))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out + " = 0"

    def __str__(self):
        return self.to_text()

    def to_json(self):
        return {
            "var": self.var,
            "coeffs": [[format_scalar(x) for x in p.c] for p in self.coeffs],
            "field": self.field().to_json(),
        }

    @classmethod
    def from_json(cls, obj):
        from .exactmath.field import parse_scalar
        coeffs = [Poly([parse_scalar(str(x)) for x in row]) for row in obj["coeffs"]]
        return normalize(coeffs, var=obj.get("var", "n"))


def _as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun.from_poly(x)
    return RatFun.const(to_scalar(x))


def _canonical_scale(polys):
    """Scalar that makes the coefficient list primitive with a positive leading term."""
    lead = polys[-1].lc
    if isinstance(lead, Quad) or any(not p.is_rational() for p in polys):
        polys = [p * (1 / lead) for p in polys]
        den = 1
        for p in polys:
            for x in p.c:
                for q in parts(x):
                    den = den * q.denominator // igcd(den, q.denominator)
        ints = [int(q * den) for p in polys for x in p.c for q in parts(x)]
        g = reduce(igcd, ints, 0) or 1
        return Fraction(den, g) / lead
    den, num_g = 1, 0
    for p in polys:
        for x in p.c:
            den = den * x.denominator // igcd(den, x.denominator)
    for p in polys:
        for x in p.c:
            num_g = igcd(num_g, int(x * den))
    scale = Fraction(den, num_g or 1)
    return -scale if lead < 0 else scale


def normalize(raw_coeffs, var="n"):
    """Canonical :class:`Recurrence` from rational-function coefficients ``[P_0, ..., P_d]``."""
    rats = [_as_ratfun(x) for x in raw_coeffs]
    if not any(rats):
        raise RecurrenceError("all coefficients are zero")
    den = reduce(poly_lcm, (r.den for r in rats), ONE)
    polys = [r.num * (den // r.den) for r in rats]
    while not polys[-1]:
        polys.pop()
    shift = 0
    while not polys[0]:
        polys.pop(0)
        shift += 1
    if len(polys) < 2:
        raise RecurrenceError("recurrence has order 0 after removing zero coefficients")
    if shift:
        polys = [p.shift(-shift) for p in polys]
    g = reduce(poly_gcd, polys)
    if g.degree > 0:
        polys = [p // g for p in polys]
    s = _canonical_scale(polys)
    polys = tuple(p * s for p in polys)
    return Recurrence(polys, var, shift)


def _cleared(rec, r):
    r = _as_ratfun(r)
    if not r:
        raise ValueError("ratio must be nonzero")
    d = rec.order
    nums = [r.num.shift(j) for j in range(d)]
    dens = [r.den.shift(j) for j in range(d)]
    total = Poly()
    for i, P in enumerate(rec.coeffs):
        if not P:
            continue
        term = P
        for j in range(i):
            term = term * nums[j]
        for j in range(i, d):
            term = term * dens[j]
        total = total + term
    return total, dens


def apply_to_ratio(rec, r):
    """``sum_i P_i(n) prod_{j<i} r(n+j)`` as a reduced rational function."""
    total, dens = _cleared(rec, r)
    if not total:
        return RatFun.const(0)
    return RatFun(total, reduce(lambda a, b: a * b, dens, ONE))


def annihilates(rec, r):
    """True when every term with ratio ``r`` solves ``rec``."""
    return not _cleared(rec, r)[0]
