"""Hypergeometric solutions of a holonomic recurrence (van Hoeij style).

Pipeline: local types at infinity; Pochhammer-ratio candidates built from the
monic factors, taken modulo Z, of the trailing and leading coefficients;
filtering by ``(nu, b mod Z)``; a degree bound ``delta`` for the rational
part; rational solutions of the twisted recurrence; closed forms via
:func:`holorec.simplify.pochfactorsimp`.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .diagnostics import (AUTO, DISCARDED_CANDIDATE, SKIPPED_FACTOR, UNSUPPORTED_EXTENSION,
                          Diagnostic, FieldPolicy)
from .errors import HolorecError, MixedFieldError
from .exactmath.factor import factorize, integer_roots
from .exactmath.field import (FieldSpec, QQ, congruent_mod_z, format_scalar, is_rational,
                              real_part_floor_shift, scalar_key)
from .exactmath.poly import ONE, Poly, RatFun
from .hypterm import HypTerm, canonical_quadratic, strip_constant
from .localtypes import leading_parametric_coefficient, local_types
from .ratsol import rational_solutions
from .recurrence import annihilates, normalize
from .simplify import pochfactorsimp


@dataclass(frozen=True)
class RatioCandidate:
    """Pochhammer-part ratio ``prod atom**e``; positive exponents come from P_0."""

    atoms: tuple
    nu_r: int
    b_r: object
    c: object = None
    field: FieldSpec = QQ

    def p(self):
        acc = ONE
        for a, e in self.atoms:
            if e > 0:
                acc = acc * a ** e
        return acc

    def q(self):
        acc = ONE
        for a, e in self.atoms:
            if e < 0:
                acc = acc * a ** (-e)
        return acc

    def ratio(self):
        return RatFun(self.p(), self.q())

    def with_c(self, c):
        return RatioCandidate(self.atoms, self.nu_r, self.b_r, c, self.field)

    def is_rational(self):
        return all(a.is_rational() for a, _ in self.atoms) and (self.c is None or is_rational(self.c))

    def __str__(self):
        r = self.ratio()
        if self.c is None:
            return f"ratio {r}"
        return f"c={format_scalar(self.c)}, ratio {r}"


@dataclass(frozen=True)
class DeltaBound:
    candidate: RatioCandidate
    deltas: frozenset
    delta_max: int
    E_f: object


@dataclass
class SolveReport:
    basis: list
    diagnostics: list = field(default_factory=list)
    local_types: list = field(default_factory=list)
    fields: list = field(default_factory=list)

    def to_json(self):
        return {
            "basis": [t.to_json() for t in self.basis],
            "diagnostics": [d.to_json() for d in self.diagnostics],
        }

    @property
    def only_unsupported(self):
        return not self.basis and any(d.kind == UNSUPPORTED_EXTENSION for d in self.diagnostics)


# -- candidates -----------------------------------------------------------------

def _atom_of_linear(f):
    rep, _ = real_part_floor_shift(-f.coeff(0), "roots_strip")
    return Poly.linear(rep)


def _atom_key(a):
    return (a.degree,) + tuple(scalar_key(x) for x in reversed(a.c))


def _factor_classes(p, fs, diags=None):
    """``{atom: [multiplicities]}`` of the monic factors of ``p`` grouped modulo Z."""
    fl = factorize(p, fs)
    out = {}
    for f, m in fl.factors:
        out.setdefault(_atom_of_linear(f), []).append(m)
    for g, m in fl.unsplit:
        if g.degree == 2:
            out.setdefault(canonical_quadratic(g)[0], []).append(m)
        elif diags is not None:
            diags.append(Diagnostic(
                SKIPPED_FACTOR,
                f"irreducible factor of degree {g.degree} over {fs} cannot be a Pochhammer atom",
                {"degree": g.degree}))
    return out


def monic_factors_mod_z(p, fs, diags=None):
    """``{atom: merged multiplicity}`` of the monic factors of ``p`` modulo integer shifts."""
    return {a: sum(ms) for a, ms in _factor_classes(p, fs, diags).items()}


def _nu_b(atoms):
    nu, b = 0, 0
    for a, e in atoms:
        nu += e * a.degree
        b += e * a.coeff(a.degree - 1)
    return nu, b


def _exponents(trail, lead, narrow):
    lo, hi = -sum(lead), sum(trail)
    if not narrow:
        return range(lo, hi + 1)
    # heuristic: a nonzero exponent must reach the smallest multiplicity in its class
    need_t, need_l = min(trail, default=0), min(lead, default=0)
    return [e for e in range(lo, hi + 1) if e == 0 or (e > 0 and e >= need_t) or (e < 0 and -e >= need_l)]


def candidate_ratios(rec, fs=QQ, diags=None, narrow=False):
    """All Pochhammer-ratio candidates over ``fs``, the trivial ratio first.

    Each atom gets a net exponent between ``-mu_lead`` and ``mu_trail``.
    ``narrow=True`` enables an unproven pruning heuristic (off by default).
    """
    trail = _factor_classes(rec.trailing, fs, diags)
    lead = _factor_classes(rec.leading, fs, diags)
    atoms = sorted(set(trail) | set(lead), key=_atom_key)
    ranges = [_exponents(trail.get(a, []), lead.get(a, []), narrow) for a in atoms]
    out = []
    for exps in product(*ranges):
        chosen = tuple((a, e) for a, e in zip(atoms, exps) if e)
        nu, b = _nu_b(chosen)
        out.append(RatioCandidate(chosen, nu, b, None, fs))
    out.sort(key=lambda c: (len(c.atoms) > 0, sum(abs(e) for _, e in c.atoms)))
    return out


def filter_by_local_types(cands, types):
    """``(candidate with c)`` pairs consistent with some local type."""
    out, seen = [], set()
    for cand in cands:
        for t in types:
            if t.nu != cand.nu_r:
                continue
            try:
                ok = congruent_mod_z(t.b, cand.b_r)
            except MixedFieldError:
                ok = False
            if not ok:
                continue
            key = (cand.atoms, t.c)
            if key not in seen:
                seen.add(key)
                out.append(cand.with_c(t.c))
    return out


# -- delta bound and rational part ------------------------------------------------

def _twisted_coeffs(rec, c, p, q):
    d = rec.order
    ps = [p.shift(j) for j in range(d)]
    qs = [q.shift(j) for j in range(d)]
    out = []
    cp = 1
    for i, P in enumerate(rec.coeffs):
        term = P * cp
        for j in range(i):
            term = term * ps[j]
        for j in range(i, d):
            term = term * qs[j]
        out.append(term)
        cp = cp * c
    return out


def delta_polynomial(rec, cand):
    """The polynomial in ``delta`` whose integer roots bound ``deg N - deg U``, with the twisted coefficients."""
    d = rec.order
    E = _twisted_coeffs(rec, cand.c, cand.p(), cand.q())
    lin = [Poly.linear(-j) for j in range(d)]

    def D(delta):
        total = Poly()
        for i, Ei in enumerate(E):
            term = Ei
            for j in range(i):
                term = term * Poly.linear(-(j + delta))
            for j in range(i, d):
                term = term * lin[j]
            total = total + term
        return total

    return leading_parametric_coefficient(D, d), E


def delta_bound(rec, cand):
    """Integer roots of the leading delta-polynomial, or None when there are none."""
    Q, E = delta_polynomial(rec, cand)
    if Q.degree < 1:
        return None
    S = integer_roots(Q)
    if not S:
        return None
    return DeltaBound(cand, frozenset(S), max(S), normalize(E, var=rec.var))


def _solve_candidate(rec, cand, product_rule):
    db = delta_bound(rec, cand)
    if db is None:
        return [], Diagnostic(DISCARDED_CANDIDATE, f"{cand}: no integer delta",
                              {"candidate": str(cand)})
    sols = rational_solutions(db.E_f, db.delta_max)
    if not sols:
        return [], Diagnostic(DISCARDED_CANDIDATE,
                              f"{cand}: no rational part with delta <= {db.delta_max}",
                              {"candidate": str(cand), "delta_max": db.delta_max})
    h = pochfactorsimp(cand.ratio(), product_rule=product_rule, field=cand.field)
    terms = []
    for R in sols:
        t = HypTerm(cand.c, R, ()) * h
        terms.append(strip_constant(t))
    return terms, None


def _threads():
    try:
        return max(1, int(os.environ.get("HOLOREC_THREADS", "1")))
    except ValueError:
        return 1


# -- field bookkeeping ------------------------------------------------------------

def _fields_to_try(rec, policy, types, diags):
    rf = rec.field()
    if not rf.is_rational:
        if policy.kind == "q":
            diags.append(Diagnostic(
                UNSUPPORTED_EXTENSION,
                f"recurrence coefficients lie in {rf}, but the policy allows only Q",
                {"suggested_D": rf.D, "degree": 2}))
            return None
        if policy.kind == "qsqrt" and policy.D != rf.D:
            diags.append(Diagnostic(
                UNSUPPORTED_EXTENSION,
                f"recurrence coefficients lie in {rf}, policy fixes Q(sqrt({policy.D}))",
                {"suggested_D": rf.D, "degree": 4}))
            return None
        return [rf]
    if policy.kind == "q":
        return [QQ]
    if policy.kind == "qsqrt":
        return [FieldSpec(policy.D)]
    fields = [QQ]
    for t in types:
        if not t.field.is_rational and t.field not in fields:
            fields.append(t.field)
    for p in (rec.trailing, rec.leading):
        for D in factorize(p).suggested_extensions():
            fs = FieldSpec(D)
            if fs not in fields:
                fields.append(fs)
    return fields


def hypergeometric_solutions(rec, policy=AUTO, product_rule=True, narrow=False, _enumerate=None):
    """Basis of all hypergeometric solutions reachable under ``policy``."""
    if isinstance(policy, str):
        policy = FieldPolicy.parse(policy)
    diags = []
    fields_probe = rec.field()
    if not fields_probe.is_rational and policy.kind == "q":
        _fields_to_try(rec, policy, [], diags)
        return SolveReport([], diags, [], [])
    try:
        types = local_types(rec, policy, diags)
    except MixedFieldError as exc:
        diags.append(Diagnostic(UNSUPPORTED_EXTENSION, str(exc), {}))
        return SolveReport([], diags, [], [])
    if not types:
        return SolveReport([], diags, types, [])
    fields = _fields_to_try(rec, policy, types, diags)
    if fields is None:
        return SolveReport([], diags, types, [])
    def enumerate_(rec, fs, diags):
        if _enumerate is not None:
            return _enumerate(rec, fs, diags)
        return candidate_ratios(rec, fs, diags, narrow)

    work = []
    for fs in fields:
        ftypes = [t for t in types if t.field.is_rational or t.field == fs]
        if not ftypes:
            continue
        cands = enumerate_(rec, fs, diags)
        for cand in filter_by_local_types(cands, ftypes):
            if fs != QQ and QQ in fields and cand.is_rational():
                continue
            work.append(cand)

    n_threads = _threads()
    if n_threads > 1 and len(work) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            results = list(pool.map(lambda c: _solve_candidate(rec, c, product_rule), work))
    else:
        results = [_solve_candidate(rec, c, product_rule) for c in work]

    basis, seen = [], set()
    for terms, diag in results:
        if diag is not None:
            diags.append(diag)
        for t in terms:
            key = t.full_ratio()
            if key in seen:
                continue
            if not annihilates(rec, key):
                raise HolorecError(f"internal error: {t} does not solve the recurrence")
            seen.add(key)
            basis.append(t)
    if len(basis) > rec.order:
        raise HolorecError(f"basis of size {len(basis)} exceeds the order {rec.order}")
    return SolveReport(basis, _dedupe(diags), types, fields)


def _dedupe(diags):
    out, seen = [], set()
    for d in diags:
        key = (d.kind, d.message)
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out


def solve(rec, policy=AUTO, product_rule=True):
    """Shortcut returning just the basis."""
    return hypergeometric_solutions(rec, policy, product_rule).basis
