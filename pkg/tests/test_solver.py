import os
import random
from fractions import Fraction as F

import pytest

from holorec.diagnostics import UNSUPPORTED_EXTENSION
from holorec.exactmath.poly import Poly, RatFun
from holorec.genrec import sum_hyper_re
from holorec.hypterm import ratio_equivalent
from holorec.localtypes import local_types
from holorec.parser import parse_recurrence, parse_term
from holorec.recurrence import Recurrence, annihilates, normalize
from holorec.solver import (candidate_ratios, delta_bound, filter_by_local_types,
                            hypergeometric_solutions, monic_factors_mod_z)

n = Poly([0, 1])
one = Poly([1])
half = F(1, 2)
RE_RATIOS = [RatFun(n + 4, n + 1), RatFun(one, n + 1), RatFun(-n, n + 1),
             RatFun(-one, (n + half) ** 2)]


@pytest.fixture(scope="module")
def RE():
    return sum_hyper_re(RE_RATIOS)


def test_candidates_small():
    got = {c.ratio() for c in candidate_ratios(Recurrence((-n, n + 1)))}
    assert got == {RatFun.const(1), RatFun.from_poly(n + 1), RatFun(one, n + 1)}
    assert [c.ratio() for c in candidate_ratios(Recurrence((-2 * one, one)))] == [RatFun.const(1)]


def test_atoms_of_main_example(RE):
    assert monic_factors_mod_z(RE.trailing, RE.field()) == {n + 1: 2}
    assert monic_factors_mod_z(RE.leading, RE.field()) == {n + 1: 3, n + half: 2}


def test_filter_main_example(RE):
    kept = filter_by_local_types(candidate_ratios(RE), local_types(RE))
    pairs = {(c.ratio(), c.c) for c in kept}
    assert (RatFun.const(1), 1) in pairs and (RatFun.const(1), -1) in pairs
    assert (RatFun(one, n + 1), 1) in pairs
    assert (RatFun(one, (n + half) ** 2), -1) in pairs
    for c in kept:
        assert c.nu_r in (-2, -1, 0)
        assert dict(c.atoms).get(n + half) != -1


def test_filter_geometric():
    kept = filter_by_local_types(candidate_ratios(Recurrence((-2 * one, one))),
                                 local_types(Recurrence((-2 * one, one))))
    assert [(c.ratio(), c.c) for c in kept] == [(RatFun.const(1), 2)]


def test_delta_examples(RE):
    rec = Recurrence((-n, n + 1))
    cand = candidate_ratios(rec)[0].with_c(1)
    db = delta_bound(rec, cand)
    assert db.deltas == {-1} and db.delta_max == -1
    geo = Recurrence((-2 * one, one))
    db = delta_bound(geo, candidate_ratios(geo)[0].with_c(2))
    assert db.deltas == {0}
    db = delta_bound(RE, candidate_ratios(RE)[0].with_c(1))
    assert 3 in db.deltas


def test_main_example_solutions(RE):
    basis = hypergeometric_solutions(RE).basis
    expected = [parse_term(s) for s in ["(n+1)*(n+2)*(n+3)", "(-1)^n/n", "1/n!",
                                        "(-1)^n*16^n*n!^2/(2*n)!^2"]]
    assert len(basis) == 4
    for e in expected:
        assert sum(ratio_equivalent(b, e) for b in basis) == 1


def test_narrowing_heuristic_keeps_solutions(RE):
    assert len(candidate_ratios(RE, narrow=True)) < len(candidate_ratios(RE))
    assert len(hypergeometric_solutions(RE, narrow=True).basis) == 4


def test_geometric():
    assert [str(t) for t in hypergeometric_solutions(Recurrence((-2 * one, one))).basis] == ["2^n"]


def test_policy_q_reports_extension():
    rep = hypergeometric_solutions(parse_recurrence("a(n+2) = a(n+1) + a(n)"), "q")
    assert rep.basis == [] and rep.only_unsupported
    rep = hypergeometric_solutions(parse_recurrence("a(n+2) = a(n+1) + a(n)"), "auto")
    assert len(rep.basis) == 2


def test_quadratic_atom_solution():
    t = parse_term("quadpoch(n^2+1,n)/n!")
    other = parse_term("2^n")
    rec = sum_hyper_re([t, other])
    basis = hypergeometric_solutions(rec).basis
    assert any(ratio_equivalent(b, t) for b in basis)
    assert any(ratio_equivalent(b, other) for b in basis)


def test_scaling_invariance(RE):
    scaled = normalize([p * (n * n + 3) for p in RE.coeffs])
    a = {t.full_ratio() for t in hypergeometric_solutions(RE).basis}
    b = {t.full_ratio() for t in hypergeometric_solutions(scaled).basis}
    assert a == b


def test_threads_give_identical_output(RE, monkeypatch):
    serial = [str(t) for t in hypergeometric_solutions(RE).basis]
    monkeypatch.setenv("HOLOREC_THREADS", "4")
    assert [str(t) for t in hypergeometric_solutions(RE).basis] == serial


def test_empty_local_types_skip_enumeration():
    def boom(*args):
        raise AssertionError("candidate enumeration must not run")
    rec = parse_recurrence("a(n+2) - n*a(n) = 0")
    rep = hypergeometric_solutions(rec, _enumerate=boom)
    assert rep.basis == [] and rep.local_types == []


def test_soundness_and_exponent_bounds_random():
    rng = random.Random(3)
    for _ in range(15):
        ratios = set()
        while len(ratios) < 2:
            num = (n + rng.randint(-3, 4)) if rng.random() < 0.7 else one
            den = (n + rng.randint(1, 4)) if rng.random() < 0.7 else one
            ratios.add(RatFun(num, den) * rng.choice([1, -1, 2, F(1, 3)]))
        rec = sum_hyper_re(sorted(ratios, key=str))
        basis = hypergeometric_solutions(rec).basis
        got = {t.full_ratio() for t in basis}
        for t in basis:
            assert annihilates(rec, t.full_ratio())
        for r in ratios:
            assert r in got
