import random

import pytest

from skewrel.errors import PreconditionError
from skewrel.fields import FieldSpec, PRIME_FIELD, RATIONALS
from skewrel.fixtures import e1_action, e2_action, fixture_bundle
from skewrel.funalg import FunAlgElement, InducedAlgebraAction
from skewrel.selftest import random_skew
from skewrel.skew import SkewElement

Q = FieldSpec(RATIONALS)
F5 = FieldSpec(PRIME_FIELD, 5)


def e1_alpha(field=Q):
    return fixture_bundle(field, e1_action())[2]


def e2_alpha(field=Q):
    return fixture_bundle(field, e2_action())[2]


class TestAddition:
    def test_zero_is_neutral(self):
        alpha = e1_alpha()
        u = SkewElement.monomial(alpha, "a", alpha.action.group.element(1))
        assert u + SkewElement.zero(alpha) == u

    def test_cancellation(self):
        alpha = e1_alpha()
        u = SkewElement.monomial(alpha, "a", alpha.action.group.element(1))
        assert (u + u.scale(Q.from_int(-1))).is_zero()

    def test_distinct_terms_stack(self):
        alpha = e1_alpha()
        g = alpha.action.group.element(1)
        u = SkewElement.monomial(alpha, "a", g)
        v = SkewElement.monomial(alpha, "c", alpha.action.identity)
        assert len((u + v).terms) == 2

    def test_action_mismatch(self):
        with pytest.raises(PreconditionError):
            u = SkewElement.monomial(e1_alpha(), "a", e1_action().group.element(1))
            v = SkewElement.monomial(e2_alpha(), "1", e2_action().group.element(1))
            u + v


class TestMultiplication:
    def test_e1_cross_term(self):
        alpha = e1_alpha()
        g = alpha.action.group.element(1)
        dag = SkewElement.monomial(alpha, "a", g)
        dbg = SkewElement.monomial(alpha, "b", g)
        expected = SkewElement.monomial(alpha, "a", alpha.action.identity)
        assert dag * dbg == expected

    def test_e1_self_product_vanishes(self):
        alpha = e1_alpha()
        g = alpha.action.group.element(1)
        dag = SkewElement.monomial(alpha, "a", g)
        assert (dag * dag).is_zero()

    def test_e2_cross_term(self):
        alpha = e2_alpha()
        z = alpha.action.group
        u = SkewElement.monomial(alpha, "2", z.element(1))
        v = SkewElement.monomial(alpha, "1", z.element(-2))
        assert u * v == SkewElement.monomial(alpha, "2", z.element(-1))

    def test_two_sided_identity(self):
        for alpha in (e1_alpha(), e2_alpha(F5)):
            one = SkewElement.one(alpha)
            rng = random.Random(3)
            for _ in range(20):
                u = random_skew(rng, alpha)
                assert u * one == u
                assert one * u == u

    def test_closure_under_product(self):
        rng = random.Random(5)
        for alpha in (e1_alpha(), e2_alpha(), e2_alpha(F5)):
            for _ in range(50):
                u, v = random_skew(rng, alpha), random_skew(rng, alpha)
                assert (u * v).validate()

    def test_associativity_random(self):
        rng = random.Random(9)
        for alpha in (e1_alpha(), e2_alpha(F5)):
            for _ in range(100):
                u, v, w = (random_skew(rng, alpha) for _ in range(3))
                assert (u * v) * w == u * (v * w)

    def test_bilinearity_random(self):
        rng = random.Random(13)
        alpha = e1_alpha()
        for _ in range(50):
            u, v, w = (random_skew(rng, alpha) for _ in range(3))
            assert u * (v + w) == u * v + u * w
            assert (u + v) * w == u * w + v * w


class TestValidation:
    def test_supported_term_is_valid(self):
        alpha = e1_alpha()
        g = alpha.action.group.element(1)
        assert SkewElement.monomial(alpha, "a", g).validate()

    def test_unsupported_term_detected(self):
        alpha = e1_alpha()
        g = alpha.action.group.element(1)
        bad = SkewElement(
            alpha, {g: FunAlgElement.delta(Q, alpha.carrier, "c")},
            check_support=False)
        assert not bad.validate()
        with pytest.raises(PreconditionError):
            SkewElement(alpha, {g: FunAlgElement.delta(Q, alpha.carrier, "c")})

    def test_e2_support(self):
        alpha = e2_alpha()
        two = alpha.action.group.element(2)
        assert SkewElement.monomial(alpha, "3", two).validate()
