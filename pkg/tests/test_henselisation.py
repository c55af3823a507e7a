import random
from fractions import Fraction

import pytest

from henselkit import (
    INF,
    PAdicField,
    Poly,
    Verdict,
    element_valuation,
    eval_poly_at,
    evaluate_in_algebra,
    in_valuation_ring,
    invert_refine,
    is_zero,
    make_element,
    make_special,
    new_step,
    special_root,
    step_equal,
    step_invert,
    valuation_of,
    zero_test_report,
)
from henselkit.errors import NotAUnit, NotHenselCode, UncertifiedModulus

from helpers import (
    BOTH_KINDS,
    oracle_step_rings,
    rand_ring_elem,
    rand_ring_poly,
    rand_unit,
    rand_with_valuation,
)

F5 = PAdicField(5)


def P(*coeffs):
    return Poly.from_coeffs(coeffs, F5)


@pytest.fixture(scope="module")
def ring_special():
    data = make_special(P(5, 1, 1), F5)
    return new_step(data.hensel_poly, F5, special=data)


@pytest.fixture(scope="module")
def ring_factored():
    return new_step(P(5, -6, 1), F5, roots=[Fraction(5), Fraction(1)])


def test_new_step_examples(ring_special, ring_factored):
    assert ring_special.root_valuation == 1
    assert ring_factored.root_valuation == 1
    with pytest.raises(NotHenselCode):
        new_step(P(-6, 0, 1), F5, certified=True)


def test_new_step_provenance_required():
    with pytest.raises(UncertifiedModulus):
        new_step(P(5, 1, 1), F5)
    with pytest.raises(UncertifiedModulus):
        new_step(P(5, -6, 1), F5, roots=[Fraction(5), Fraction(2)])
    data = make_special(P(5, 1, 1), F5)
    with pytest.raises(UncertifiedModulus):
        new_step(P(10, 1, 1), F5, special=data)


def test_zero_test_examples(ring_special, ring_factored):
    report = zero_test_report(P(0, 1), ring_special)
    assert report.verdict is Verdict.NONZERO
    assert report.q == ring_special.hensel_poly

    report = zero_test_report(P(-5, 1), ring_factored)
    assert report.verdict is Verdict.ZERO
    assert report.q == P(0, 4, 1) and report.r == P(0, 4, 1)
    assert report.valuation is INF and report.moved is None

    report = zero_test_report(P(-1, 1), ring_factored)
    assert report.verdict is Verdict.NONZERO
    assert report.q == P(0, -4, 1) and report.r == P(0, -20, 1)
    assert report.moved == (0, 1)

    assert is_zero(Poly(()), ring_factored).verdict is Verdict.ZERO


def test_valuation_of_examples(ring_factored):
    assert valuation_of(P(0, 1), ring_factored) == 1
    assert valuation_of(P(-1, 1), ring_factored) == 0
    assert valuation_of(Poly(()), ring_factored) is INF


def test_step_equal_examples(ring_factored):
    x = make_element(ring_factored, P(0, 1))
    five = make_element(ring_factored, P(5))
    one = make_element(ring_factored, P(1))
    assert step_equal(x, five, ring_factored)
    assert not step_equal(x, one, ring_factored)
    assert step_equal(x, x, ring_factored)
    assert x == five  # dunder goes through the zero test


def test_step_invert_examples(ring_factored):
    inv = step_invert(make_element(ring_factored, P(-1, 1)), ring_factored)
    assert inv.num == P(Fraction(1, 4)) and inv.den == P(1)
    inv = step_invert(make_element(ring_factored, P(2)), ring_factored)
    assert inv.num == P(Fraction(1, 2))
    with pytest.raises(NotAUnit):
        step_invert(make_element(ring_factored, P(0, 1)), ring_factored)


def test_step_invert_fallback_representation(ring_factored):
    # x - 6 is a unit whose Bezout inverse -x/5 leaves the valuation
    # ring, forcing the swapped num/den representative
    u = make_element(ring_factored, P(-6, 1))
    inv = step_invert(u, ring_factored)
    assert all(F5.valuation(c) >= 0 for c in inv.num.coeffs)
    assert all(F5.valuation(c) >= 0 for c in inv.den.coeffs)
    product = u * inv
    assert step_equal(product, make_element(ring_factored, P(1)), ring_factored)


def test_step_element_validation(ring_factored):
    with pytest.raises(ValueError):
        make_element(ring_factored, P(Fraction(1, 5)))
    with pytest.raises(ValueError):
        make_element(ring_factored, P(1), P(5))  # den(0) = 5 not in 1 + m
    elem = make_element(ring_factored, P(3, 1), P(1, 2, 1))  # reduced mod g1
    assert elem.den.degree < ring_factored.hensel_poly.degree


def test_in_valuation_ring_examples(ring_factored):
    assert in_valuation_ring(P(0, Fraction(1, 5)), ring_factored)
    assert not in_valuation_ring(P(Fraction(1, 5)), ring_factored)
    assert in_valuation_ring(Poly(()), ring_factored)


def test_zero_test_oracle_small_corpus():
    rng = random.Random(601)
    for field in BOTH_KINDS:
        for ring, rho, units in oracle_step_rings(rng, field, 6):
            degree = ring.hensel_poly.degree
            for j in range(6):
                p = rand_ring_poly(rng, field, rng.randint(0, degree))
                if j % 3 == 0:
                    p = p * Poly((-field.coerce(rho), field.one))
                report = zero_test_report(p, ring)
                value = p(rho)
                assert (report.verdict is Verdict.ZERO) == (value == field.zero)
                assert report.valuation == field.valuation(value)


def test_valuation_is_multiplicative_on_step_ring():
    rng = random.Random(602)
    for field in BOTH_KINDS:
        for ring, rho, units in oracle_step_rings(rng, field, 3):
            for _ in range(4):
                p1 = rand_ring_poly(rng, field, 2)
                p2 = rand_ring_poly(rng, field, 2)
                v1, v2 = valuation_of(p1, ring), valuation_of(p2, ring)
                assert valuation_of(p1 * p2, ring) == v1 + v2
                vs = valuation_of(p1 + p2, ring)
                assert vs >= min(v1, v2)


def test_no_zero_divisors_property():
    rng = random.Random(603)
    for field in BOTH_KINDS:
        for ring, rho, units in oracle_step_rings(rng, field, 3):
            for _ in range(4):
                p1 = rand_ring_poly(rng, field, 2)
                p2 = rand_ring_poly(rng, field, 2)
                if is_zero(p1 * p2, ring).verdict is Verdict.ZERO:
                    assert (
                        is_zero(p1, ring).verdict is Verdict.ZERO
                        or is_zero(p2, ring).verdict is Verdict.ZERO
                    )


def test_injectivity_argument_runs():
    # whenever the verdict is ZERO with q = T^m q1(T), q1(0) != 0, the
    # element q1(p(x)) must invert and p^m * q1(p) must reduce to zero
    rng = random.Random(604)
    checked = 0
    for field in BOTH_KINDS:
        for ring, rho, units in oracle_step_rings(rng, field, 4):
            for _ in range(4):
                p = rand_ring_poly(rng, field, 2) * Poly((-field.coerce(rho), field.one))
                report = zero_test_report(p, ring)
                if report.verdict is not Verdict.ZERO:
                    continue
                q = report.q
                m = next(i for i, c in enumerate(q.coeffs) if c != 0)
                assert m > 0
                q1 = Poly(q.coeffs[m:])
                algebra = ring.algebra
                value = evaluate_in_algebra(q1, algebra.elem(p))
                assert is_zero(value.rep, ring).verdict is Verdict.NONZERO
                inv, _ = invert_refine(
                    value,
                    algebra,
                    lambda h: is_zero(h, ring).verdict is Verdict.ZERO,
                )
                power = (algebra.elem(p) ** m) * value
                assert power.rep.is_zero  # Cayley-Hamilton: q(p(x)) = 0
                checked += 1
    assert checked >= 8


def test_special_root_end_to_end():
    rng = random.Random(605)
    for field in BOTH_KINDS:
        for _ in range(6):
            degree = rng.randint(1, 4)
            coeffs = [rand_with_valuation(rng, field, rng.randint(1, 3)), rand_unit(rng, field)]
            for _ in range(degree - 1):
                coeffs.append(rand_ring_elem(rng, field, zero_rate=0.3))
            if coeffs[-1] == field.zero:
                coeffs[-1] = rand_unit(rng, field)
            f = Poly(tuple(coeffs))
            data = make_special(f, field)
            ring = new_step(data.hensel_poly, field, special=data)
            gamma = special_root(data, ring)
            value = eval_poly_at(f, gamma, ring)
            assert is_zero(value.num, ring).verdict is Verdict.ZERO
            assert element_valuation(gamma, ring) == field.valuation(data.a0)


def test_infinite_root_valuation_step_ring():
    # hensel polynomial with g1(0) = 0: the adjoined root is 0 itself
    data = make_special(P(0, 1, 1), F5)
    ring = new_step(data.hensel_poly, F5, special=data)
    assert ring.root_valuation is INF
    assert valuation_of(P(0, 1), ring) is INF
    assert valuation_of(P(25, 1), ring) == 2
    assert is_zero(P(0, 3), ring).verdict is Verdict.ZERO
