"""Rational solutions: dispersion, Abramov's universal denominator, polynomial ansatz."""

from functools import reduce

from .exactmath import linalg
from .exactmath.factor import factorize
from .exactmath.field import FieldSpec, QQ, is_rational
from .exactmath.poly import ONE, Poly, RatFun, poly_gcd


def _common_field(*polys):
    D = None
    for p in polys:
        D = D or p.field_D()
    return FieldSpec(D) if D is not None else QQ


def dispersion_set(A, B):
    """``{h >= 0 : deg gcd(A(n), B(n+h)) > 0}`` from full factorizations of A and B."""
    if not A or not B:
        raise ValueError("dispersion of the zero polynomial")
    fs = _common_field(A, B)
    fa, fb = factorize(A, fs), factorize(B, fs)
    out = set()
    for f, _ in fa.factors:
        alpha = -f.coeff(0)
        for g, _ in fb.factors:
            h = -g.coeff(0) - alpha
            if is_rational(h) and h.denominator == 1 and h >= 0:
                out.add(int(h))
    for f, _ in fa.unsplit:
        k = f.degree
        for g, _ in fb.unsplit:
            if g.degree != k:
                continue
            h = (f.coeff(k - 1) - g.coeff(k - 1)) / k
            if is_rational(h) and h.denominator == 1 and h >= 0 and g.shift(int(h)) == f:
                out.add(int(h))
    return out


def universal_denominator(rec):
    """Abramov's universal denominator of the rational solutions of ``rec``.

    With ``A = P_0(n)`` and ``B = P_d(n-d)``, the largest pole ``w`` of a
    solution in a shift class is a root of ``A`` and the smallest ``z`` a root
    of ``B``; so the relevant shifts are ``h = w - z``, i.e. the dispersion of
    ``(B, A)``.
    """
    d = rec.order
    A = rec.coeffs[0]
    B = rec.coeffs[-1].shift(-d)
    H = dispersion_set(B, A)
    U = ONE
    for h in sorted(H, reverse=True):
        g = poly_gcd(A, B.shift(-h))
        if g.degree < 1:
            continue
        A = A // g
        B = B // g.shift(h)
        for i in range(h + 1):
            U = U * g.shift(i)
    return U.monic()


def polynomial_solutions(rec, degree_bound):
    """Basis of polynomial solutions of degree <= ``degree_bound``.

    ``rec`` may be a Recurrence or a plain list of coefficient polynomials.
    """
    coeffs = list(rec.coeffs if hasattr(rec, "coeffs") else rec)
    if degree_bound < 0:
        return []
    cols = []
    for k in range(degree_bound + 1):
        mono = Poly([0] * k + [1])
        acc = Poly()
        for i, P in enumerate(coeffs):
            if P:
                acc = acc + P * mono.shift(i)
        cols.append(acc)
    height = max((c.degree for c in cols), default=-1) + 1
    if height <= 0:
        return [Poly([0] * k + [1]) for k in range(degree_bound + 1)]
    rows = [[c.coeff(m) for c in cols] for m in range(height)]
    rows = [r for r in rows if any(r)]
    basis = linalg.nullspace(rows, degree_bound + 1)
    return [Poly(v) for v in basis]


def rational_solutions(rec, delta):
    """Basis of rational solutions ``N/U`` with ``deg N - deg U <= delta``."""
    coeffs = list(rec.coeffs if hasattr(rec, "coeffs") else rec)
    U = universal_denominator(rec if hasattr(rec, "coeffs") else _Bare(coeffs))
    d = len(coeffs) - 1
    shifted = [U.shift(j) for j in range(d + 1)]
    cleared = []
    for i, P in enumerate(coeffs):
        acc = P
        if P:
            for j in range(d + 1):
                if j != i:
                    acc = acc * shifted[j]
        cleared.append(acc)
    bound = U.degree + delta
    return [RatFun(N, U) for N in polynomial_solutions(cleared, bound)]


class _Bare:
    """Minimal recurrence view over a raw coefficient list."""

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1
