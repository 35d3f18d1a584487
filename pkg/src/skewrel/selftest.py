"""Seeded property-test battery tying every module together.

All randomness flows from one random.Random(seed) instance and every
iteration order is defined, so a fixed (seed, trials, inputs) triple yields
a byte-identical report. Coefficients are small by design: numerators in
{-3..3} minus 0 with denominators in {1, 2, 3} over the rationals, uniform
nonzero residues over a prime field.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from . import skew as skew_mod
from .actions import (PartialAction, build_relation, check_free, equivalence_classes,
                      validate_partial_action, verify_equivalence)
from .errors import PreconditionError
from .fields import FieldSpec
from .fixtures import GF5, RATIONALS_FIELD, e1_action, e2_action, fixture_bundle
from .funalg import (FunAlgElement, InducedAlgebraAction, bijection_from_isomorphism,
                     classify_linear_functional, psi_from_bijection, recover_set_action)
from .groups import GroupSpec
from .relalg import (RelElement, brute_force_ideal_span, count_ideals, gamma,
                     gamma_inv, ideal_closure_of, ideal_from_invariant, span_of_ideal)
from .skew import SkewElement


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = dc_field(default_factory=list)

    def check(self, ok: bool, detail: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(detail)

    def as_doc(self) -> dict:
        doc = {"name": self.name, "passed": self.passed, "failed": self.failed}
        if self.failures:
            doc["failures"] = self.failures
        return doc


def random_scalar(rng: random.Random, field: FieldSpec):
    """Nonzero coefficient from the stated test distribution."""
    if field.kind == "prime-field":
        return field.from_int(rng.randrange(1, field.modulus))
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.choice([1, 2, 3])
    return field.from_fraction(num, den)


def random_funalg(rng, field, carrier, allowed=None) -> FunAlgElement:
    pool = list(carrier if allowed is None else allowed)
    size = rng.randint(0, len(pool))
    support = rng.sample(pool, size)
    return FunAlgElement(field, carrier,
                         {x: random_scalar(rng, field) for x in support})


def random_skew(rng, alpha: InducedAlgebraAction) -> SkewElement:
    action = alpha.action
    ts = [action.identity] + action.listed()
    count = rng.randint(0, len(ts))
    terms = {}
    for t in rng.sample(ts, count):
        allowed = action.sort_labels(action.subset(t))
        terms[t] = random_funalg(rng, alpha.field, alpha.carrier, allowed)
    return SkewElement(alpha, terms)


def random_rel(rng, field, rel) -> RelElement:
    pairs = rel.sorted_pairs()
    size = rng.randint(0, len(pairs))
    chosen = rng.sample(pairs, size)
    return RelElement(field, rel, {p: random_scalar(rng, field) for p in chosen})


def _e2_without_h2() -> PartialAction:
    group = GroupSpec.integers()
    return PartialAction(group, ["1", "2", "3"],
                         {group.element(1): {"1": "2", "2": "3"}})


def _e1_fixing_c() -> PartialAction:
    group = GroupSpec.cyclic(2)
    return PartialAction(group, ["a", "b", "c"],
                         {group.element(1): {"a": "b", "b": "a", "c": "c"}})


def suite_axioms() -> SuiteResult:
    suite = SuiteResult("axiom-validation")
    for name, action in [("E1", e1_action()), ("E2", e2_action())]:
        report = validate_partial_action(action)
        suite.check(report.ok, "%s failed validation: %s" % (name, report.render()))
    report = validate_partial_action(_e2_without_h2())
    hits = [v for v in report.violations
            if v.axiom == "2" and str(v.t) == "1" and str(v.s) == "1"]
    suite.check(bool(hits) and not report.ok,
                "E2 without h_2 should fail axiom 2 at (t,s)=(1,1), got %s"
                % report.render())
    return suite


def suite_freeness() -> SuiteResult:
    suite = SuiteResult("freeness")
    for name, action in [("E1", e1_action()), ("E2", e2_action()),
                         ("trivial", PartialAction(GroupSpec.cyclic(1), ["a", "b"], {}))]:
        rep = check_free(action)
        suite.check(rep.free, "%s should be free, witness %s" % (name, rep.counterexample))
    rep = check_free(_e1_fixing_c())
    ok = (not rep.free and rep.counterexample is not None
          and str(rep.counterexample[0]) == "1" and rep.counterexample[1] == "c")
    suite.check(ok, "c-fixing E1 mutant should report witness (g, c), got %s"
                % (rep.counterexample,))
    return suite


def _bundles(custom=None):
    if custom is not None:
        field, action = custom
        return [("custom", field, action)]
    out = []
    for fname, fld in [("Q", RATIONALS_FIELD), ("GF5", GF5)]:
        for aname, action in [("E1", e1_action()), ("E2", e2_action())]:
            out.append(("%s/%s" % (aname, fname), fld, action))
    return out


def suite_gamma(rng, trials, bundles) -> SuiteResult:
    suite = SuiteResult("gamma-isomorphism")
    for name, fld, action in bundles:
        if not check_free(action).free:
            continue
        _, rel, alpha = fixture_bundle(fld, action)
        for i in range(trials):
            u = random_skew(rng, alpha)
            v = random_skew(rng, alpha)
            ok = gamma(rel, u * v) == gamma(rel, u) * gamma(rel, v)
            suite.check(ok, "%s trial %d: Gamma not multiplicative on u=%r v=%r"
                        % (name, i, u, v))
        for i in range(trials):
            u = random_skew(rng, alpha)
            f = random_rel(rng, fld, rel)
            suite.check(gamma_inv(alpha, gamma(rel, u)) == u,
                        "%s trial %d: inverse(gamma(u)) != u for u=%r" % (name, i, u))
            suite.check(gamma(rel, gamma_inv(alpha, f)) == f,
                        "%s trial %d: gamma(inverse(f)) != f for f=%r" % (name, i, f))
    return suite


def suite_associativity(rng, trials, bundles) -> SuiteResult:
    suite = SuiteResult("associativity")
    for name, fld, action in bundles:
        _, rel, alpha = fixture_bundle(fld, action)
        free = check_free(action).free
        for i in range(trials):
            u, v, w = (random_skew(rng, alpha) for _ in range(3))
            suite.check((u * v) * w == u * (v * w),
                        "%s trial %d: skew associativity fails on %r, %r, %r"
                        % (name, i, u, v, w))
            if free:
                f, g, l = (random_rel(rng, fld, rel) for _ in range(3))
                suite.check((f * g) * l == f * (g * l),
                            "%s trial %d: convolution associativity fails on %r, %r, %r"
                            % (name, i, f, g, l))
    return suite


def suite_ideals(rng, trials, bundles) -> SuiteResult:
    suite = SuiteResult("ideal-classification")
    for name, fld, action in bundles:
        if not check_free(action).free:
            continue
        _, rel, _alpha = fixture_bundle(fld, action)
        expected = 1 << len(equivalence_classes(rel))
        suite.check(count_ideals(rel) == expected,
                    "%s: ideal count mismatch" % name)
        for i in range(trials):
            f = random_rel(rng, fld, rel)
            if f.is_zero():
                continue
            oracle = brute_force_ideal_span(fld, rel, [f])
            closed = span_of_ideal(fld, ideal_from_invariant(rel, ideal_closure_of(f)))
            suite.check(oracle == closed,
                        "%s trial %d: ideal span mismatch for f=%r" % (name, i, f))
    return suite


def suite_round_trips(bundles) -> SuiteResult:
    suite = SuiteResult("round-trips")
    for name, fld, action in bundles:
        alpha = InducedAlgebraAction(fld, action, validate=False)
        family = {t: (action.sort_labels(action.subset(t)), alpha.as_linear_map(t))
                  for t in action.listed()}
        try:
            back = recover_set_action(fld, action.group, action.carrier, family)
            suite.check(back == action, "%s: recovered action differs" % name)
        except PreconditionError as exc:
            suite.check(False, "%s: recovery failed: %s" % (name, exc))
    carrier = ("p", "q", "r")
    for fld in (RATIONALS_FIELD, GF5):
        for perm in itertools.permutations(carrier):
            h = dict(zip(carrier, perm))
            psi = psi_from_bijection(fld, h, carrier, carrier)
            suite.check(bijection_from_isomorphism(psi) == h,
                        "psi round trip fails for %s" % h)
    return suite


def suite_homomorphisms(rng, bundles) -> SuiteResult:
    suite = SuiteResult("homomorphism-classification")
    for name, fld, action in bundles:
        carrier = action.carrier
        for x in carrier:
            values = {y: (fld.one() if y == x else fld.zero()) for y in carrier}
            cls = classify_linear_functional(fld, carrier, values)
            suite.check(cls.verdict == "evaluation" and cls.point == x,
                        "%s: eps_%s misclassified as %s" % (name, x, cls.verdict))
        zero = {y: fld.zero() for y in carrier}
        suite.check(classify_linear_functional(fld, carrier, zero).verdict == "zero",
                    "%s: zero functional misclassified" % name)
    fld = RATIONALS_FIELD
    carrier = ("a", "b", "c")
    produced = 0
    while produced < 50:
        values = {x: (random_scalar(rng, fld) if rng.random() < 0.7 else fld.zero())
                  for x in carrier}
        cls = classify_linear_functional(fld, carrier, values)
        if cls.verdict != "not-multiplicative":
            continue
        produced += 1
        if cls.pair_witness is not None:
            x, y = cls.pair_witness
            ok = not (values[x] * values[y]).is_zero()
        else:
            v = values[cls.idem_witness]
            ok = v * v != v
        suite.check(ok, "witness does not verify for %s" % (values,))
    return suite


def suite_relation(bundles) -> SuiteResult:
    suite = SuiteResult("relation-structure")
    for name, _fld, action in bundles:
        rel = build_relation(action)
        suite.check(verify_equivalence(rel),
                    "%s: built relation is not an equivalence" % name)
        for t in action.listed():
            inv = {y: x for x, y in action.maps[t].items()}
            suite.check(action.maps[t.inverse()] == inv,
                        "%s: h_{%s^-1} is not the inverse of h_%s" % (name, t, t))
    return suite


def run_selftest(seed: int, trials: int, custom=None, corrupt_skew_mul=False) -> dict:
    """Run every property suite; returns the JSON-ready report."""
    rng = random.Random(seed)
    bundles = _bundles(custom)
    old_hook = skew_mod._corrupt_term_hook
    if corrupt_skew_mul:
        def square_coefficients(term):
            # non-bilinear corruption, guaranteed to surface in the law suites
            return FunAlgElement(term.field, term.carrier,
                                 {x: c * c for x, c in term.coeffs.items()})
        skew_mod._corrupt_term_hook = square_coefficients
    try:
        suites = [
            suite_axioms(),
            suite_freeness(),
            suite_relation(bundles),
            suite_gamma(rng, trials, bundles),
            suite_associativity(rng, trials, bundles),
            suite_ideals(rng, min(trials, 200), bundles),
            suite_round_trips(bundles),
            suite_homomorphisms(rng, bundles),
        ]
    finally:
        skew_mod._corrupt_term_hook = old_hook
    ok = all(s.failed == 0 for s in suites)
    return {
        "command": "selftest",
        "seed": seed,
        "trials": trials,
        "suites": [s.as_doc() for s in suites],
        "ok": ok,
    }
