"""Local types ``(nu, c, b)`` at infinity of hypergeometric solutions.

A solution ratio behaves like ``c * n**nu * (1 + b/n + ...)``.  ``nu`` comes
from the degree pattern of the coefficients, ``c`` from the edge equation
formed by the dominant leading coefficients, and ``b`` from the first
coefficient (in descending powers of ``n``) of

    S(n, b) = sum_i P_i(n) c^i prod_{j<i} (n+j)^(nu-1) (n+j+b)

that does not vanish identically in ``b``.  That polynomial in ``b`` has degree
at most ``d``, so it is recovered exactly by evaluating at ``b = 0..d`` and
interpolating.
"""

from dataclasses import dataclass

from .diagnostics import AUTO, Diagnostic, FieldPolicy, UNSUPPORTED_EXTENSION
from .exactmath.factor import discriminant, factorize
from .exactmath.field import (FieldSpec, QQ, field_D, format_scalar, is_rational,
                              real_part_floor_shift, scalar_key, squarefree_part)
from .exactmath.poly import ONE, Poly, interpolate


@dataclass(frozen=True)
class LocalType:
    nu: int
    c: object
    b: object
    b_rep: object
    field: FieldSpec = QQ

    def triple(self):
        return (self.nu, self.c, self.b)

    def rep_triple(self):
        return (self.nu, self.c, self.b_rep)

    def to_json(self):
        return {"nu": self.nu, "c": format_scalar(self.c), "b": format_scalar(self.b),
                "b_rep": format_scalar(self.b_rep), "field": self.field.to_json()}

    def __str__(self):
        return (f"(nu={self.nu}, c={format_scalar(self.c)}, b={format_scalar(self.b)}, "
                f"b_rep={format_scalar(self.b_rep)})")


def nu_candidates(rec):
    """Integers ``(deg P_j - deg P_i)/(i - j)`` over pairs of nonzero coefficients."""
    idx = [i for i, p in enumerate(rec.coeffs) if p]
    out = set()
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            num = rec.coeffs[j].degree - rec.coeffs[i].degree
            if num % (i - j) == 0:
                out.add(num // (i - j))
    return out


def working_field(rec, policy):
    """Field the recurrence lives in, joined with the policy's fixed field."""
    return rec.field().join(policy.base_field)


def _roots_under_policy(poly, base, policy, what, diags, var="n"):
    """``[(root, FieldSpec)]`` of ``poly`` allowed by the policy; records what is missed."""
    fl = factorize(poly, base)
    out = [(r, FieldSpec(field_D(r)) if not is_rational(r) else QQ) for r, _ in fl.roots()]
    for g, _ in fl.unsplit:
        rational_quad = g.degree == 2 and g.is_rational()
        if rational_quad and base.is_rational and policy.may_extend:
            D = squarefree_part(discriminant(g))
            ext = FieldSpec(D)
            out.extend((r, ext) for r, _ in factorize(g, ext).roots())
            continue
        D = squarefree_part(discriminant(g)) if rational_quad else None
        if diags is not None:
            if D is not None:
                msg = f"{what}: factor {g.to_text(var)} needs Q(sqrt({D})), not allowed by policy {policy}"
            else:
                msg = f"{what}: factor {g.to_text(var)} of degree {g.degree} is irreducible over {base}"
            diags.append(Diagnostic(UNSUPPORTED_EXTENSION, msg,
                                    {"factor": g.to_text(var), "degree": g.degree,
                                     "suggested_D": D}))
    return out


def c_candidates(rec, nu, policy=AUTO, diags=None):
    """Nonzero roots ``c`` of the edge equation for slope ``nu``."""
    heights = {i: i * nu + p.degree for i, p in enumerate(rec.coeffs) if p}
    M = max(heights.values())
    I = [i for i, h in heights.items() if h == M]
    if len(I) < 2:
        return []
    eq = Poly([rec.coeffs[i].lc if i in I else 0 for i in range(max(I) + 1)])
    low = min(I)
    if low:
        eq = Poly(eq.c[low:])  # drop the zero root c = 0
    base = working_field(rec, policy)
    roots = _roots_under_policy(eq, base, policy, f"c-equation for nu={nu}", diags, "c")
    return sorted(roots, key=lambda rf: scalar_key(rf[0]))


def _s_poly(rec, nu, c, b):
    """``S(n, b)`` at a fixed numeric ``b``, denominators cleared."""
    d = rec.order
    lin = [Poly.linear(-j) for j in range(d)]  # n + j
    total = Poly()
    cp = 1
    for i, P in enumerate(rec.coeffs):
        if P:
            term = P * cp
            for j in range(i):
                term = term * Poly.linear(-(j + b))
                if nu > 1:
                    term = term * lin[j] ** (nu - 1)
            if nu < 1:
                for j in range(i, d):
                    term = term * lin[j] ** (1 - nu)
            total = total + term
        cp = cp * c
    return total


def leading_parametric_coefficient(make_poly, d):
    """First coefficient, in descending powers of n, of a family ``make_poly(t)``
    that is polynomial of degree <= d in ``t``, returned as a polynomial in ``t``."""
    pts = list(range(d + 1))
    polys = [make_poly(t) for t in pts]
    top = max((p.degree for p in polys), default=-1)
    for k in range(top, -1, -1):
        vals = [p.coeff(k) for p in polys]
        if any(vals):
            return interpolate(pts, vals)
    return Poly()


def b_polynomial(rec, nu, c):
    """The polynomial ``T(b)`` whose roots are the admissible ``b``."""
    return leading_parametric_coefficient(lambda t: _s_poly(rec, nu, c, t), rec.order)


def b_candidates(rec, nu, c, policy=AUTO, diags=None):
    """Roots of ``T(b)`` in the field of ``c`` (or a quadratic extension under ``auto``)."""
    T = b_polynomial(rec, nu, c)
    if T.degree < 1:
        return []
    base = working_field(rec, policy).join(FieldSpec(field_D(c)))
    # b may only extend the field when c itself is rational
    pol = policy if base.is_rational else FieldPolicy("qsqrt", base.D)
    roots = _roots_under_policy(T, base, pol, f"b-equation for nu={nu}, c={format_scalar(c)}",
                                diags, "b")
    return sorted(roots, key=lambda rf: scalar_key(rf[0]))


def local_types(rec, policy=AUTO, diags=None):
    """All local types, sorted by ``nu``, then ``c``, then ``b``."""
    out = []
    for nu in sorted(nu_candidates(rec)):
        for c, cfield in c_candidates(rec, nu, policy, diags):
            for b, bfield in b_candidates(rec, nu, c, policy, diags):
                fs = cfield if not cfield.is_rational else bfield
                b_rep, _ = real_part_floor_shift(b, "roots_strip")
                out.append(LocalType(nu, c, b, b_rep, fs))
    out.sort(key=lambda t: (t.nu, scalar_key(t.c), scalar_key(t.b)))
    return out
