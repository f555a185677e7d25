"""Factorization over Q and Q(sqrt(D)) into linear factors plus leftovers.

Rational roots are found with a small-prime modular method: roots modulo a
good prime are Newton-lifted past a coefficient bound and reconstructed, then
confirmed by exact evaluation.  Quadratic factors of higher-degree rational
residues are located numerically and accepted only after exact division.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .. import kernels as K
from .field import (FieldSpec, QQ, Quad, is_rational, parts, quad, scalar_key,
                    sqrt_in_field, squarefree_part)
from .poly import Poly, poly_gcd, squarefree_factorization

_SMALL_PRIMES = [p for p in range(3, 4000) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


@dataclass(frozen=True)
class FactorList:
    """``unit * prod(f**m for f, m in factors) * prod(g**m for g, m in unsplit)``.

    ``factors`` holds monic linear factors over the active field; ``unsplit``
    holds monic parts irreducible there (quadratics and anything larger that
    was not broken up).
    """

    unit: object
    factors: tuple = ()
    unsplit: tuple = ()
    field: FieldSpec = QQ

    def roots(self):
        """``[(root, multiplicity)]`` of the linear factors."""
        return [(-f.coeff(0), m) for f, m in self.factors]

    def quadratics(self):
        return [(g, m) for g, m in self.unsplit if g.degree == 2]

    def suggested_extensions(self):
        """Square-free radicands that would split the unsplit rational quadratics."""
        out = []
        for g, _ in self.unsplit:
            if g.degree == 2 and g.is_rational():
                D = squarefree_part(discriminant(g))
                if D not in out:
                    out.append(D)
        return out

    def expand(self):
        acc = Poly.const(self.unit)
        for f, m in list(self.factors) + list(self.unsplit):
            acc = acc * f ** m
        return acc


def discriminant(q):
    """Discriminant of a quadratic ``c2 n^2 + c1 n + c0``."""
    c0, c1, c2 = q.coeff(0), q.coeff(1), q.coeff(2)
    return c1 * c1 - 4 * c2 * c0


# -- modular helpers on integer coefficient lists ---------------------------

def _trim_mod(a, p):
    a = [x % p for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _gcd_mod(a, b, p):
    a, b = _trim_mod(a, p), _trim_mod(b, p)
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b):
            c = r[-1] * inv % p
            s = len(r) - len(b)
            for j, y in enumerate(b):
                r[s + j] = (r[s + j] - c * y) % p
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    return a


def _eval_int(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _rational_roots_squarefree(ints):
    """Rational roots of a square-free primitive integer polynomial."""
    if len(ints) <= 1:
        return []
    if len(ints) == 2:
        return [Fraction(-ints[0], ints[1])]
    L = abs(ints[-1])
    deriv = [i * c for i, c in enumerate(ints)][1:]
    prime = None
    for p in _SMALL_PRIMES:
        if L % p == 0:
            continue
        if len(_gcd_mod(ints, deriv, p)) == 1:
            prime = p
            break
    if prime is None:
        return _rational_roots_bruteforce(ints)
    cauchy = 1 + max(abs(Fraction(c, L)) for c in ints[:-1])
    bound = 2 * L * cauchy + 1
    found = []
    for r0 in K.roots_mod_p(ints, prime):
        r, M = r0, prime
        while M < bound:
            M = M * M
            d = _eval_int(deriv, r) % M
            r = (r - _eval_int(ints, r) * pow(d, -1, M)) % M
        m = (L * r) % M
        if m > M // 2:
            m -= M
        cand = Fraction(m, L)
        if _eval_int(ints, cand) == 0:
            found.append(cand)
    return found


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _rational_roots_bruteforce(ints):
    # only reached when every small prime is bad, i.e. never at desk scale
    if ints[0] == 0:
        return [Fraction(0)] + _rational_roots_bruteforce(ints[1:])
    out = []
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for s in (1, -1):
                c = Fraction(s * a, b)
                if c not in out and _eval_int(ints, c) == 0:
                    out.append(c)
    return out


def rational_roots(p):
    """Distinct rational roots of a rational polynomial, ascending."""
    if p.degree < 1:
        return []
    if not p.is_rational():
        return sorted(r for r in roots_in_field(p) if is_rational(r))
    roots = []
    for g, _ in squarefree_factorization(p):
        ints, _ = g.integerize()
        roots.extend(_rational_roots_squarefree(ints))
    return sorted(set(roots))


def integer_roots(p):
    """Set of integer roots; works over Q(sqrt(D)) via the rational and surd parts."""
    if not p:
        raise ValueError("integer_roots of the zero polynomial")
    if p.degree < 1:
        return set()
    if not p.is_rational():
        A = Poly([parts(x)[0] for x in p.c])
        B = Poly([parts(x)[1] for x in p.c])
        g = poly_gcd(A, B)
        if g.degree < 1:
            return set()
        p = g
    return {int(r) for r in rational_roots(p) if r.denominator == 1}


# -- splitting ---------------------------------------------------------------

def _split_quadratic(q, D):
    """Roots of a monic quadratic in Q or Q(sqrt(D)), or None."""
    disc = discriminant(q)
    s = sqrt_in_field(disc, D)
    if s is None:
        return None
    b = q.coeff(1)
    return [(-b - s) / 2, (-b + s) / 2]


_PRIME = 2305843009213693951  # 2**61 - 1


def _mod_coeffs(ints):
    return [x % _PRIME for x in ints]


def _quad_divides_mod(c0, c1, hmod):
    """Necessary condition for ``n^2 + c1 n + c0`` to divide ``h``: remainder zero mod a prime."""
    try:
        a0 = c0.numerator * pow(c0.denominator, -1, _PRIME) % _PRIME
        a1 = c1.numerator * pow(c1.denominator, -1, _PRIME) % _PRIME
    except ValueError:
        return True
    r = list(hmod)
    for k in range(len(r) - 1, 1, -1):
        t = r[k]
        if t:
            r[k - 1] = (r[k - 1] - t * a1) % _PRIME
            r[k - 2] = (r[k - 2] - t * a0) % _PRIME
    return r[0] == 0 and r[1] == 0


def _numeric_quadratic_factors(h):
    """Split a rational residue with no rational roots into rational quadratics where possible."""
    import numpy as np

    out = []
    while h.degree >= 4:
        ints, _ = h.integerize()
        L = ints[-1]
        try:
            rts = np.roots([float(c) for c in reversed(ints)])
        except (OverflowError, np.linalg.LinAlgError):
            break
        if not np.all(np.isfinite(rts)):
            break
        hmod = _mod_coeffs(ints)
        hit = None
        for i, j in combinations(range(len(rts)), 2):
            s, pr = rts[i] + rts[j], rts[i] * rts[j]
            if abs(s.imag) > 1e-6 * (1 + abs(s)) or abs(pr.imag) > 1e-6 * (1 + abs(pr)):
                continue
            for approx in (
                lambda v: Fraction(round(v * L), L),
                lambda v: Fraction(v).limit_denominator(10 ** 6),
            ):
                try:
                    c0, c1 = approx(pr.real), approx(-s.real)
                except (OverflowError, ValueError):
                    continue
                if not _quad_divides_mod(c0, c1, hmod):
                    continue
                cand = Poly([c0, c1, Fraction(1)])
                if cand.divides(h):
                    hit = cand
                    break
            if hit is not None:
                break
        if hit is None:
            break
        out.append(hit)
        h = h / hit
    return out, h


def _split_rational_squarefree(g, field):
    """Return (linear roots, irreducible leftovers) for a monic square-free rational poly."""
    ints, _ = g.integerize()
    roots = _rational_roots_squarefree(ints)
    rest = g
    for r in roots:
        rest = rest / Poly.linear(r)
    leftovers = []
    if rest.degree >= 4:
        quads, rest = _numeric_quadratic_factors(rest)
        leftovers.extend(quads)
    if rest.degree >= 1:
        leftovers.append(rest)
    if field.D is not None:
        kept = []
        for q in leftovers:
            split = _split_quadratic(q, field.D) if q.degree == 2 else None
            if split is None:
                kept.append(q)
            else:
                roots.extend(split)
        leftovers = kept
    return roots, leftovers


def _split_quadratic_field_squarefree(g, D):
    """Roots in Q(sqrt(D)) of a square-free poly with surd coefficients."""
    normp = g * g.conjugate()
    nroots, nleft = _split_rational_squarefree_any(normp, FieldSpec(D))
    roots = []
    rest = g
    for r in nroots:
        if r in roots:
            continue
        lin = Poly.linear(r)
        if lin.divides(rest):
            rest = rest / lin
            roots.append(r)
    leftovers = []
    if rest.degree == 2:
        split = _split_quadratic(rest.monic(), D)
        if split is not None:
            roots.extend(split)
            rest = Poly.const(1)
    if rest.degree >= 1:
        leftovers.append(rest.monic())
    return roots, leftovers


def _split_rational_squarefree_any(p, field):
    # the norm polynomial may carry repeated factors; split each square-free part
    roots, left = [], []
    for g, _ in squarefree_factorization(p):
        r, l = _split_rational_squarefree(g, field)
        roots.extend(r)
        left.extend(l)
    return roots, left


def _quad_key(q):
    return tuple(scalar_key(x) for x in reversed(q.c))


def factorize(p, field=QQ):
    """Factor ``p`` into linear factors over ``field`` plus irreducible leftovers.

    The active field is ``field`` joined with the field of the coefficients.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    return _factorize(p, field)


# the solver factors the same coefficients once per candidate and field
@lru_cache(maxsize=1024)
def _factorize(p, field):
    D = p.field_D()
    active = field.join(FieldSpec(D)) if D is not None else field
    unit = p.lc
    if p.degree < 1:
        return FactorList(unit, (), (), active)
    lin, left = {}, []
    for g, m in squarefree_factorization(p):
        if g.is_rational():
            roots, rest = _split_rational_squarefree(g, active)
        else:
            roots, rest = _split_quadratic_field_squarefree(g, active.D)
        for r in roots:
            lin[r] = lin.get(r, 0) + m
        left.extend((q, m) for q in rest)
    factors = tuple(sorted(((Poly.linear(r), m) for r, m in lin.items()),
                           key=lambda fm: scalar_key(-fm[0].coeff(0))))
    unsplit = tuple(sorted(left, key=lambda qm: (qm[0].degree, _quad_key(qm[0]))))
    return FactorList(unit, factors, unsplit, active)


def roots_in_field(p, D=None):
    """Distinct roots of ``p`` lying in Q (D None) or Q(sqrt(D))."""
    return [r for r, _ in factorize(p, FieldSpec(D) if D is not None else QQ).roots()]


def roots_with_multiplicity(p, D=None):
    return factorize(p, FieldSpec(D) if D is not None else QQ).roots()


__all__ = [
    "FactorList", "discriminant", "factorize", "integer_roots", "rational_roots",
    "roots_in_field", "roots_with_multiplicity", "Quad", "quad",
]
