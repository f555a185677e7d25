"""Acceptance criteria 1-10.

Each test carries ``@pytest.mark.criterion(k, title)``; ``conftest.py`` folds
the outcomes into one PASS/FAIL line per criterion at the end of the run.
Expected values are transcribed from the worked examples; where a check
needs an independent oracle (direct products, brute-force scans) it is
written out here rather than borrowed from the package.
"""

import io
import os
import random
import time
from fractions import Fraction as F

import pytest

from holorec.cli import CliConfig, run
from holorec.diagnostics import UNSUPPORTED_EXTENSION
from holorec.exactmath.field import Quad, real_part_floor_shift
from holorec.exactmath.poly import Poly, RatFun, poly_gcd
from holorec.genrec import sum_hyper_re
from holorec.hypterm import ratio_equivalent
from holorec.localtypes import c_candidates, local_types, nu_candidates
from holorec.parser import parse_ratfun, parse_recurrence, parse_term
from holorec.ratsol import dispersion_set, universal_denominator
from holorec.recurrence import Recurrence, apply_to_ratio
from holorec.simplify import pochfactorsimp, ratio_rule
from holorec.solver import (candidate_ratios, delta_polynomial, filter_by_local_types,
                            hypergeometric_solutions)

DATA = os.path.join(os.path.dirname(__file__), "data")
n = Poly([0, 1])
one = Poly([1])
half = F(1, 2)

RE_RATIOS = ["(n+4)/(n+1)", "1/(n+1)", "-n/(n+1)", "-1/(n+1/2)^2"]
RE_SOLUTIONS = ["1/n!", "(-1)^n/n", "(n+3)*(n+2)*(n+1)", "(-1)^n*n!^2*16^n/(2*n)!^2"]
ORDER2_BASIS = ["n!^3/(pochhammer(1/3,n)^4*(n-1)^3*n^6)",
       "n*(2*n)!^5/((n-2)*(n-1)*4^(5*n)*n!^4)"]
RE1 = ("(6*sqrt(7)-84*n-210)*a(n) + 4*(n+2)*(-7*n+4*sqrt(7)-14)*a(n+1)"
       " - (n+2)*(n+3)*(sqrt(7)-14*n-21)*a(n+2) = 0")
RE1_SOLUTIONS = ["(1-sqrt(7))^n/n!", "(1+sqrt(7))^n/((n+1)*n!)"]

criterion = pytest.mark.criterion


def cli(*argv, inputs=(), **kw):
    out, err = io.StringIO(), io.StringIO()
    cfg = CliConfig(command=argv[0], inputs=list(inputs), **kw)
    code = run(cfg, out, err)
    return code, out.getvalue(), err.getvalue()


def matches_exactly_once(basis, expected):
    return all(sum(ratio_equivalent(b, e) for b in basis) == 1 for e in expected)


@pytest.fixture(scope="module")
def RE():
    code, out, _ = cli("generate", inputs=RE_RATIOS, ratios=True)
    assert code == 0
    return parse_recurrence(out)


# -- 1 ---------------------------------------------------------------------------

@criterion(1, "large order-2 example solves to its two-term basis within 10 s")
def test_order2_large_example():
    t0 = time.perf_counter()
    code, out, _ = cli("solve", field="q", input_file=os.path.join(DATA, "order2_large.txt"))
    elapsed = time.perf_counter() - t0
    basis = [parse_term(line) for line in out.splitlines()]
    assert code == 0 and len(basis) == 2
    assert matches_exactly_once(basis, [parse_term(s) for s in ORDER2_BASIS])
    assert elapsed <= 10, f"{elapsed:.2f}s"


# -- 2 ---------------------------------------------------------------------------

@criterion(2, "(RE) round trip through generate and solve within 5 s")
def test_re_round_trip(RE):
    t0 = time.perf_counter()
    assert RE.order == 4
    assert RE.leading % ((n + 2) * (n + 3) * (n + 4) * (2 * n + 7) ** 2) == Poly()
    assert RE.trailing % (4 * n * (n + 4)) == Poly()
    basis = hypergeometric_solutions(RE).basis
    assert len(basis) == 4
    assert matches_exactly_once(basis, [parse_term(s) for s in RE_SOLUTIONS])
    assert time.perf_counter() - t0 <= 5


# -- 3 ---------------------------------------------------------------------------

@criterion(3, "local types of (RE)")
def test_re_local_types(RE):
    got = {t.rep_triple() for t in local_types(RE)}
    assert got == {(-2, -1, -1), (-1, 1, -1), (0, -1, -1), (0, 1, -1)}


# -- 4 ---------------------------------------------------------------------------

def _published_candidates():
    a, b = n + 1, n + half
    return {RatFun.const(1), RatFun(one, a), RatFun(one, a ** 2), RatFun(one, a ** 3),
            RatFun(one, b), RatFun(one, b ** 2), RatFun.from_poly(a),
            RatFun(a, b), RatFun(a, b ** 2), RatFun(a ** 2, b), RatFun(a ** 2, b ** 2)}


@criterion(4, "candidate set equals the published eleven-ratio list")
def test_re_candidates_equal_published_candidates(RE):
    got = {c.ratio() for c in candidate_ratios(RE)}
    expected = _published_candidates()
    assert len(expected) == 11
    # known gap: the enumeration is a superset; see notes/decisions.md
    assert got == expected, (f"{len(got)} candidates; extra: "
                             f"{sorted(map(str, got - expected))}, missing: {sorted(map(str, expected - got))}")


@criterion(4, "filtered survivors drop (n+1/2)^1 and keep nu in {-2,-1,0}")
def test_re_filtered_candidates(RE):
    cands = candidate_ratios(RE)
    assert _published_candidates() <= {c.ratio() for c in cands}
    kept = filter_by_local_types(cands, local_types(RE))
    assert kept
    for c in kept:
        assert c.nu_r in (-2, -1, 0)
        assert dict(c.atoms).get(n + half) != -1


# -- 5 ---------------------------------------------------------------------------

@criterion(5, "genrec golden outputs")
def test_genrec_golden():
    terms = [parse_term("1/((n+1)*(n+2))"), parse_term("(-1)^n*(2*n+3)/((n+1)*(n+2))")]
    assert sum_hyper_re(terms) == parse_recurrence("-(n+4)*a(n+2) - a(n+1) + (n+1)*a(n) = 0")
    s5 = Quad(0, 1, 5)
    golden = [RatFun.const((1 - s5) / 2), RatFun.const((1 + s5) / 2)]
    assert sum_hyper_re(golden) == parse_recurrence("-a(n+2) + a(n+1) + a(n) = 0")


# -- 6 ---------------------------------------------------------------------------

def direct_product(r, m):
    acc = F(1)
    for k in range(m):
        acc *= r(k)
    return acc


def poch(x, m):
    acc = F(1)
    for i in range(m):
        acc *= x + i
    return acc


@criterion(6, "pochfactorsimp golden examples")
@pytest.mark.parametrize("src", ["-1/(2*(n+1)*(2*n+1))", "(2*n+3)^2/((n+1)*(2*n+1))"])
def test_simplify_golden(src):
    r = parse_ratfun(src)
    for product_rule in (True, False):
        t = pochfactorsimp(r, product_rule=product_rule)
        for k in range(21):
            assert t.evaluate(k) == direct_product(r, k)


@criterion(6, "ratio rule (7/3)_n/(1/3)_n")
def test_ratio_rule_golden():
    r = ratio_rule(F(7, 3), F(1, 3))
    assert r == RatFun((1 + 3 * n) * (4 + 3 * n), Poly([4]))
    for k in range(21):
        assert r(k) == poch(F(7, 3), k) / poch(F(1, 3), k)


# -- 7 ---------------------------------------------------------------------------

@criterion(7, "RE1 over Q(sqrt 7) under auto, empty with a diagnostic under q")
def test_extension_field():
    rec = parse_recurrence(RE1)
    basis = hypergeometric_solutions(rec, "auto").basis
    assert len(basis) == 2
    assert matches_exactly_once(basis, [parse_term(s) for s in RE1_SOLUTIONS])
    rep = hypergeometric_solutions(rec, "q")
    assert rep.basis == []
    assert any(d.kind == UNSUPPORTED_EXTENSION for d in rep.diagnostics)
    code, out, err = cli("solve", inputs=[RE1], field="q")
    assert code == 2 and out == "" and UNSUPPORTED_EXTENSION in err


# -- 8 ---------------------------------------------------------------------------

def _rq(rng, h=10):
    return F(rng.randint(-h, h), rng.randint(1, h))


def _random_ratio(rng):
    c = _rq(rng)
    while not c:
        c = _rq(rng)
    num, den, sig = Poly([c]), one, {}
    for side in (1, -1):
        for _ in range(rng.choice([0, 1, 1, 2])):
            a = _rq(rng)
            if side == 1:
                num = num * (n + a)
            else:
                den = den * (n + a)
            k = real_part_floor_shift(-a, "roots_strip")[0]
            sig[k] = sig.get(k, 0) + side
    # terms sharing c and net exponents per shift class would be similar
    return RatFun(num, den), (c, frozenset((k, e) for k, e in sig.items() if e))


def _random_case(rng):
    want = rng.randint(1, 4)
    ratios, sigs = [], set()
    while len(ratios) < want:
        r, s = _random_ratio(rng)
        if s not in sigs:
            sigs.add(s)
            ratios.append(r)
    return ratios


@criterion(8, "soundness and recovery on 200 random recurrences within 120 s")
def test_random_round_trips():
    rng = random.Random(2024)
    failures = []
    t0 = time.perf_counter()
    for i in range(200):
        ratios = _random_case(rng)
        rec = sum_hyper_re(ratios)
        assert rec.order <= 4
        got = set()
        for t in hypergeometric_solutions(rec).basis:
            r = t.full_ratio()
            if apply_to_ratio(rec, r):
                failures.append((i, "unsound", str(t)))
            got.add(r)
        failures.extend((i, "missed", str(r)) for r in ratios if r not in got)
    elapsed = time.perf_counter() - t0
    assert not failures, failures[:5]
    assert elapsed <= 120, f"{elapsed:.1f}s"


# -- 9 ---------------------------------------------------------------------------

def brute_dispersion(A, B, hmax=60):
    return {h for h in range(hmax + 1) if poly_gcd(A, B.shift(h)).degree > 0}


def _oracle_poly(rng, deg):
    p = Poly([rng.randint(1, 5)])
    while p.degree < deg:
        if deg - p.degree >= 2 and rng.random() < 0.3:
            b, c = rng.randint(-6, 6), rng.randint(1, 6)
            p = p * (n * n + b * n + c * c + b * b)
        else:
            p = p * (n - F(rng.randint(-12, 12), rng.choice([1, 1, 2, 3])))
    return p


@criterion(9, "dispersion_set against the gcd-scan oracle")
def test_dispersion_oracle():
    rng = random.Random(99)
    for _ in range(100):
        A, B = _oracle_poly(rng, rng.randint(1, 6)), _oracle_poly(rng, rng.randint(1, 6))
        assert dispersion_set(A, B) == brute_dispersion(A, B)


@criterion(9, "universal denominator divides constructed solutions")
def test_universal_denominator_oracle():
    rng = random.Random(50)
    checked = 0
    while checked < 50:
        den = one
        for _ in range(rng.randint(1, 3)):
            den = den * (n + rng.randint(-8, 8))
        num = Poly([rng.randint(-5, 5) for _ in range(rng.randint(1, 3))] + [1])
        R = RatFun(num, den)
        other = RatFun(n + rng.randint(1, 9), n + rng.randint(1, 9)) * rng.choice([-2, 3, F(1, 2)])
        ratio = R.shift(1) / R
        if ratio == other:
            continue
        U = universal_denominator(sum_hyper_re([ratio, other]))
        assert U % R.den == Poly()
        checked += 1


@criterion(9, "hand-derived delta and b micro-cases")
def test_micro_cases():
    rec = Recurrence((-n, n + 1))
    cand = candidate_ratios(rec)[0].with_c(1)
    Q, _ = delta_polynomial(rec, cand)
    assert Q.monic() == n + 1  # delta + 1
    rec = Recurrence((n + 1, -one, -(n + 4)))
    assert {t.b for t in local_types(rec)} == {-2, -1}


# -- 10 --------------------------------------------------------------------------

@criterion(10, "empty local types give an empty basis without enumeration")
def test_negative_control():
    rec = parse_recurrence("a(n+2) - n*a(n) = 0")
    # derived check through the nu and c stages themselves
    assert all(not c_candidates(rec, nu) for nu in nu_candidates(rec))

    def enumeration_must_not_run(*args):
        raise AssertionError("candidate enumeration ran")

    rep = hypergeometric_solutions(rec, _enumerate=enumeration_must_not_run)
    assert rep.basis == [] and rep.local_types == []


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
