"""Closed forms for ``prod_{k=0}^{n-1} r(k)`` in factorials and Pochhammer symbols.

A linear factor ``n - alpha`` of ``r`` contributes ``(-alpha)_n``.  The
arguments are then rewritten, in order, by

* the Ratio Rule: ``(y)_n/(x)_n`` with ``x - y`` integral becomes rational;
* the Product Rule: ``(x)_n (x+1/2)_n = (2x)_{2n}/4^n`` when ``2x`` is a
  positive integer, i.e. a single factorial;
* the Isolated Rule: positive integers and half-integers become factorials;
  anything else is moved into the (0, 1] strip.

Irreducible quadratic factors become :class:`QuadPochhammer` atoms.
"""

from fractions import Fraction
from math import factorial

from .errors import HolorecError
from .exactmath.factor import factorize
from .exactmath.field import (FieldSpec, QQ, congruent_mod_z, is_rational,
                              real_part_floor_shift, scalar_key, to_scalar)
from .exactmath.poly import ONE, Poly, RatFun
from .hypterm import Factorial, HypTerm, QuadPochhammer, canonical_quadratic, pochhammer_atom


class SimplifyError(HolorecError, ValueError):
    """Input violates the no-nonnegative-integer-root precondition."""


def _is_nonpositive_int(x):
    return is_rational(x) and x.denominator == 1 and x <= 0


def pochhammer_normalize(y):
    """``(u, corr)`` with ``(y)_n == (u)_n * corr(n)`` and Re(u) in (0, 1]."""
    y = to_scalar(y)
    if _is_nonpositive_int(y):
        raise SimplifyError(f"Pochhammer argument {y} is a nonpositive integer")
    u, m = real_part_floor_shift(y, "poch_strip")
    num, den = ONE, ONE
    const = Fraction(1)
    if m >= 0:
        for k in range(m):
            num = num * Poly.linear(-(u + k))
            const = const / (u + k)
    else:
        for k in range(1, -m + 1):
            den = den * Poly.linear(-(u - k))
            const = const * (u - k)
    return u, RatFun(num * const, den)


def ratio_rule(y, x):
    """``(y)_n / (x)_n`` as a rational function; needs ``x - y`` integral."""
    y, x = to_scalar(y), to_scalar(x)
    j = x - y
    if not (is_rational(j) and j.denominator == 1):
        raise SimplifyError(f"{x} - {y} is not an integer")
    j = int(j)
    num, den = Poly.const(1), Poly.const(1)
    if j > 0:
        # (y)_j / (y+n)_j
        for k in range(j):
            num = num * (y + k)
            den = den * Poly.linear(-(y + k))
    elif j < 0:
        # (x+n)_{-j} / (x)_{-j}
        for k in range(-j):
            num = num * Poly.linear(-(x + k))
            den = den * (x + k)
    return RatFun(num, den)


def _half_integer_t(x):
    """``t`` with ``x == (2t+1)/2`` for a positive half-integer, else None."""
    if is_rational(x) and x.denominator == 2 and x > 0:
        return int(x - Fraction(1, 2))
    return None


def _isolated(x, e):
    """``(base, RatFun, atoms)`` for ``((x)_n)**e`` after strip normalization."""
    if is_rational(x) and x.denominator == 1 and x > 0:
        k = int(x)
        # (k)_n = (n+k-1)!/(k-1)!
        return Fraction(1), RatFun.const(Fraction(1, factorial(k - 1)) ** e), [(Factorial(1, k - 1), e)]
    t = _half_integer_t(x)
    if t is not None:
        # ((2t+1)/2)_n = (2n+2t)! t! / ((2t)! 4^n (n+t)!)
        const = Fraction(factorial(t), factorial(2 * t))
        return (Fraction(1, 4) ** e, RatFun.const(const ** e),
                [(Factorial(2, 2 * t), e), (Factorial(1, t), -e)])
    u, corr = pochhammer_normalize(x)
    if u == 1 or _half_integer_t(u) is not None:
        b, r, atoms = _isolated(u, e)
        return b, r * corr ** e, atoms
    return Fraction(1), corr ** e, [(pochhammer_atom(u), e)]


def _expand(args):
    """Multiset list of arguments, ascending."""
    out = []
    for x, e in sorted(args.items(), key=lambda xe: scalar_key(xe[0])):
        out.extend([x] * abs(e))
    return out


def _apply_ratio_rule(num_args, den_args):
    """Pair numerator and denominator arguments that differ by integers."""
    rat = RatFun.const(1)
    nums, dens = _expand(num_args), _expand(den_args)
    used = [False] * len(dens)
    left_num = []
    for y in nums:
        hit = None
        for i, x in enumerate(dens):
            if not used[i] and congruent_mod_z(x, y):
                hit = i
                break
        if hit is None:
            left_num.append(y)
            continue
        used[hit] = True
        rat = rat * ratio_rule(y, dens[hit])
    left_den = [x for i, x in enumerate(dens) if not used[i]]
    return rat, left_num, left_den


def _apply_product_rule(args):
    """Greedy same-side pairing ``x, x+1/2`` with ``2x`` a positive integer."""
    pool = sorted(args, key=scalar_key)
    pairs, rest = [], []
    while pool:
        x = pool.pop(0)
        partner = x + Fraction(1, 2)
        if is_rational(x) and (2 * x).denominator == 1 and 2 * x > 0 and partner in pool:
            pool.remove(partner)
            pairs.append(x)
        else:
            rest.append(x)
    return pairs, rest


def pochfactorsimp(r, product_rule=True, field=None):
    """HypTerm equal to ``prod_{k=0}^{n-1} r(k)`` for every ``n >= 0``."""
    r = RatFun._lift(r)
    if not r:
        raise SimplifyError("cannot simplify the product of zero")
    D = r.field_D()
    fs = field if field is not None else (FieldSpec(D) if D is not None else QQ)
    fnum = factorize(r.num, fs)
    fden = factorize(r.den, fs)
    base = fnum.unit / fden.unit
    num_args, den_args = {}, {}
    for f, m in fnum.factors:
        x = f.coeff(0)
        num_args[x] = num_args.get(x, 0) + m
    for f, m in fden.factors:
        x = f.coeff(0)
        den_args[x] = den_args.get(x, 0) + m
    for x in list(num_args) + list(den_args):
        if _is_nonpositive_int(x):
            raise SimplifyError(f"r has a nonnegative integer zero or pole at {-x}")

    rat, left_num, left_den = _apply_ratio_rule(num_args, den_args)
    atoms = []

    for side, args in ((1, left_num), (-1, left_den)):
        if product_rule:
            pairs, args = _apply_product_rule(args)
            for x in pairs:
                k = int(2 * x)
                # (x)_n (x+1/2)_n = (2n+k-1)! / ((k-1)! 4^n)
                atoms.append((Factorial(2, k - 1), side))
                rat = rat * RatFun.const(Fraction(1, factorial(k - 1)) ** side)
                base = base * Fraction(1, 4) ** side
        for x in args:
            b, corr, at = _isolated(x, side)
            base = base * b
            rat = rat * corr
            atoms.extend(at)

    for side, fl in ((1, fnum), (-1, fden)):
        for q, m in fl.unsplit:
            if q.degree != 2:
                raise SimplifyError(f"irreducible factor {q} of degree {q.degree} has no closed form here")
            qc, s = canonical_quadratic(q)
            corr = _quadratic_correction(qc, s)
            rat = rat * corr ** (side * m)
            atoms.append((QuadPochhammer(qc), side * m))

    return HypTerm(base, rat, tuple(atoms))


def _quadratic_correction(qc, s):
    """``prod_{k<n} qc(k - s) / prod_{k<n} qc(k)`` as a rational function."""
    num, den = ONE, ONE
    if s > 0:
        for j in range(1, s + 1):
            num = num * qc(-j)
            den = den * qc.shift(-j)
    elif s < 0:
        for j in range(-s):
            num = num * qc.shift(j)
            den = den * qc(j)
    return RatFun(num, den)


def product_value(r, n0):
    """Reference value of ``prod_{k=0}^{n0-1} r(k)`` by direct multiplication."""
    r = RatFun._lift(r)
    acc = Fraction(1)
    for k in range(n0):
        acc = acc * r(k)
    return acc
