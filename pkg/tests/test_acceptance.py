"""Acceptance gate: every criterion at its stated tolerance (exact, zero
tolerance) with its stated time budget. One pass/fail line per criterion is
printed; run with `pytest tests/test_acceptance.py -s` to see them inline.
"""

import itertools
import json
import random
import subprocess
import sys
import time

import pytest

from skewrel.actions import (PartialAction, build_relation, check_free,
                             validate_partial_action)
from skewrel.fields import FieldSpec, PRIME_FIELD, RATIONALS
from skewrel.fixtures import e1_action, e2_action, fixture_bundle, trivial_action
from skewrel.funalg import (InducedAlgebraAction, bijection_from_isomorphism,
                            classify_linear_functional, psi_from_bijection,
                            recover_set_action)
from skewrel.groups import GroupSpec
from skewrel.relalg import (RelElement, brute_force_ideal_span, count_ideals, gamma,
                            gamma_inv, ideal_closure_of, ideal_from_invariant,
                            span_of_ideal)
from skewrel.selftest import random_rel, random_scalar, random_skew

Q = FieldSpec(RATIONALS)
F5 = FieldSpec(PRIME_FIELD, 5)
FIELDS = [Q, F5]
FIXTURES = [e1_action, e2_action]


def report(number, ok, text):
    print("\n[%s] criterion %d: %s" % ("PASS" if ok else "FAIL", number, text))
    assert ok, "criterion %d failed: %s" % (number, text)


def test_criterion_1_axiom_validation():
    start = time.perf_counter()
    ok = validate_partial_action(e1_action()).ok
    ok = ok and validate_partial_action(e2_action()).ok
    z = GroupSpec.integers()
    mutant = PartialAction(z, ["1", "2", "3"], {z.element(1): {"1": "2", "2": "3"}})
    rep = validate_partial_action(mutant)
    hit = next((v for v in rep.violations
                if v.axiom == "2" and str(v.t) == "1" and str(v.s) == "1"), None)
    ok = ok and not rep.ok and hit is not None
    ok = ok and "{3}" in hit.render() and "{}" in hit.render()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 0.1
    report(1, ok, "axiom validation (E1, E2 ok; h_2-deleted E2 rejected at "
           "(t,s)=(1,1)) in %.3fs" % elapsed)


def test_criterion_2_freeness():
    ok = check_free(e1_action()).free
    ok = ok and check_free(e2_action()).free
    ok = ok and check_free(trivial_action()).free
    z2 = GroupSpec.cyclic(2)
    mutant = PartialAction(z2, ["a", "b", "c"],
                           {z2.element(1): {"a": "b", "b": "a", "c": "c"}})
    rep = check_free(mutant)
    ok = ok and not rep.free and rep.counterexample is not None
    t, x = rep.counterexample
    ok = ok and str(t) == "1" and x == "c"
    report(2, ok, "freeness (fixtures free; c-fixing mutant caught at (g, c))")


def test_criterion_3_gamma_isomorphism():
    rng = random.Random(20240601)
    start = time.perf_counter()
    ok = True
    for field, make in itertools.product(FIELDS, FIXTURES):
        _, rel, alpha = fixture_bundle(field, make())
        for _ in range(1000):
            u, v = random_skew(rng, alpha), random_skew(rng, alpha)
            ok = ok and gamma(rel, u * v) == gamma(rel, u) * gamma(rel, v)
        for _ in range(1000):
            u = random_skew(rng, alpha)
            f = random_rel(rng, field, rel)
            ok = ok and gamma_inv(alpha, gamma(rel, u)) == u
            ok = ok and gamma(rel, gamma_inv(alpha, f)) == f
        if not ok:
            break
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5.0
    report(3, ok, "Gamma multiplicative + mutually inverse, 1000 trials per "
           "fixture x field, exact, in %.2fs" % elapsed)


def test_criterion_4_associativity():
    rng = random.Random(20240602)
    start = time.perf_counter()
    ok = True
    for field, make in itertools.product(FIELDS, FIXTURES):
        _, rel, alpha = fixture_bundle(field, make())
        for _ in range(500):
            u, v, w = (random_skew(rng, alpha) for _ in range(3))
            ok = ok and (u * v) * w == u * (v * w)
            f, g, l = (random_rel(rng, field, rel) for _ in range(3))
            ok = ok and (f * g) * l == f * (g * l)
        if not ok:
            break
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5.0
    report(4, ok, "associativity, 500 random triples per algebra per fixture, "
           "exact, in %.2fs" % elapsed)


def test_criterion_5_ideal_classification():
    rng = random.Random(20240603)
    start = time.perf_counter()
    ok = count_ideals(build_relation(e1_action())) == 4
    ok = ok and count_ideals(build_relation(e2_action())) == 2
    for make in FIXTURES:
        _, rel, _ = fixture_bundle(Q, make())
        done = 0
        while done < 200:
            f = random_rel(rng, Q, rel)
            if f.is_zero():
                continue
            done += 1
            oracle = brute_force_ideal_span(Q, rel, [f])
            closed = span_of_ideal(
                Q, ideal_from_invariant(rel, ideal_closure_of(f)))
            ok = ok and oracle == closed
        if not ok:
            break
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30.0
    report(5, ok, "ideal counts 4 (E1) / 2 (E2) and 200 random span oracles per "
           "fixture, exact, in %.2fs" % elapsed)


def test_criterion_6_matrix_units():
    _, rel, _ = fixture_bundle(Q, e2_action())
    points = rel.carrier
    ok = True
    for x, y, y2, z in itertools.product(points, repeat=4):
        prod = RelElement.delta(Q, rel, x, y) * RelElement.delta(Q, rel, y2, z)
        expected = (RelElement.delta(Q, rel, x, z) if y == y2
                    else RelElement.zero(Q, rel))
        ok = ok and prod == expected
    report(6, ok, "81-entry convolution table of E2 matches the matrix-unit law")


def test_criterion_7_correspondence_round_trips():
    ok = True
    for make in FIXTURES:
        pa = make()
        alpha = InducedAlgebraAction(Q, pa, validate=False)
        family = {t: (pa.sort_labels(pa.subset(t)), alpha.as_linear_map(t))
                  for t in pa.listed()}
        ok = ok and recover_set_action(Q, pa.group, pa.carrier, family) == pa
    carrier = ("a", "b", "c")
    for perm in itertools.permutations(carrier):
        h = dict(zip(carrier, perm))
        psi = psi_from_bijection(Q, h, carrier, carrier)
        ok = ok and bijection_from_isomorphism(psi) == h
    for x in carrier:
        values = {y: (Q.one() if y == x else Q.zero()) for y in carrier}
        cls = classify_linear_functional(Q, carrier, values)
        ok = ok and cls.verdict == "evaluation" and cls.point == x
    zero = {y: Q.zero() for y in carrier}
    ok = ok and classify_linear_functional(Q, carrier, zero).verdict == "zero"
    rng = random.Random(20240604)
    produced = 0
    while produced < 50:
        values = {x: (random_scalar(rng, Q) if rng.random() < 0.7 else Q.zero())
                  for x in carrier}
        cls = classify_linear_functional(Q, carrier, values)
        if cls.verdict != "not-multiplicative":
            continue
        produced += 1
        if cls.pair_witness is not None:
            x, y = cls.pair_witness
            ok = ok and not (values[x] * values[y]).is_zero()
        else:
            v = values[cls.idem_witness]
            ok = ok and v * v != v
    report(7, ok, "theta/alpha, psi/bijection and evaluation-classification "
           "round trips all exact")


def test_criterion_8_selftest_determinism():
    cmd = [sys.executable, "-m", "skewrel.cli", "selftest",
           "--seed", "42", "--trials", "500"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == 0 and second.returncode == 0
    ok = ok and first.stdout == second.stdout and len(first.stdout) > 0
    ok = ok and json.loads(first.stdout)["ok"]
    report(8, ok, "selftest --seed 42 --trials 500 is byte-identical across runs")
