import random
from fractions import Fraction

import pytest

from henselkit import (
    PAdicField,
    Poly,
    QuotientAlgebra,
    TAdicField,
    charpoly,
    charpoly_via_resultant,
    evaluate_in_algebra,
    invert_refine,
    reduce_mod,
    trace,
)
from henselkit.errors import BadModulus, ZeroDivisorInversion

from helpers import rand_field_elem, rand_monic, rand_poly

F5 = PAdicField(5)


def P(*coeffs):
    return Poly.from_coeffs(coeffs, F5)


def test_reduce_examples():
    Q = QuotientAlgebra(P(5, 1, 1), F5)
    assert reduce_mod(P(0, 0, 0, 1), Q).rep == P(5, -4)
    small = P(3, 1)
    assert reduce_mod(small, Q).rep == small
    assert reduce_mod(Q.modulus, Q).rep.is_zero


def test_modulus_validation():
    with pytest.raises(BadModulus):
        QuotientAlgebra(P(1, 2), F5)
    with pytest.raises(BadModulus):
        QuotientAlgebra(P(7), F5)


def test_trace_examples():
    Q = QuotientAlgebra(P(-6, 0, 1), F5)
    assert trace(Q.one, Q) == 2
    assert trace(Q.x, Q) == 0
    assert trace(Q.x * Q.x, Q) == 12


def test_charpoly_examples():
    Q = QuotientAlgebra(P(5, 1, 1), F5)
    assert charpoly(Q.x, Q) == Q.modulus
    assert charpoly(Q.elem(3), Q) == P(9, -6, 1)
    assert charpoly(Q.x * Q.x, Q) == P(25, 9, 1)


def test_trace_is_charpoly_subdiagonal():
    rng = random.Random(301)
    for _ in range(60):
        d = rng.randint(1, 5)
        Q = QuotientAlgebra(rand_monic(rng, F5, d), F5)
        b = Q.elem(rand_poly(rng, F5, rng.randint(0, d)))
        q = charpoly(b, Q)
        assert trace(b, Q) == -q.coeff(d - 1)


def test_cayley_hamilton_random():
    rng = random.Random(302)
    fields = [F5, TAdicField()]
    for i in range(300):
        field = fields[i % 2]
        d = rng.randint(1, 6)
        span = 2 if i % 2 == 0 else 1
        Q = QuotientAlgebra(
            rand_monic(rng, field, d, coeff=lambda r, f: rand_field_elem(r, f, span=span)),
            field,
        )
        b = Q.elem(rand_poly(rng, field, rng.randint(0, d), coeff=lambda r, f: rand_field_elem(r, f, span=span)))
        q = charpoly(b, Q)
        assert q.is_monic and q.degree == d
        assert evaluate_in_algebra(q, b).rep.is_zero


def test_charpoly_routes_agree():
    rng = random.Random(303)
    fields = [F5, TAdicField()]
    for i in range(60):
        field = fields[i % 2]
        d = rng.randint(1, 5)
        Q = QuotientAlgebra(
            rand_monic(rng, field, d, coeff=lambda r, f: rand_field_elem(r, f, span=1)),
            field,
        )
        b = Q.elem(rand_poly(rng, field, rng.randint(0, d), coeff=lambda r, f: rand_field_elem(r, f, span=1)))
        assert charpoly(b, Q) == charpoly_via_resultant(b, Q)


def test_invert_refine_examples():
    Q = QuotientAlgebra(P(5, -6, 1), F5)
    at_root = lambda h: h(Fraction(5)) == 0
    inv, e = invert_refine(Q.x, Q, at_root)
    assert e == Q.modulus
    assert inv.rep == P(Fraction(6, 5), Fraction(-1, 5))
    inv, e = invert_refine(Q.elem(P(-1, 1)), Q, at_root)
    assert e == P(-5, 1) and inv.rep == P(Fraction(1, 4))
    inv, e = invert_refine(Q.elem(2), Q, at_root)
    assert e == Q.modulus and inv.rep == P(Fraction(1, 2))


def test_invert_refine_rejects_vanishing():
    Q = QuotientAlgebra(P(5, -6, 1), F5)
    at_root = lambda h: h(Fraction(5)) == 0
    with pytest.raises(ZeroDivisorInversion):
        invert_refine(Q.elem(P(-5, 1)), Q, at_root)
    with pytest.raises(ZeroDivisorInversion):
        invert_refine(Q.zero, Q, at_root)


def test_invert_refine_postconditions_random():
    rng = random.Random(304)
    for _ in range(80):
        root = Fraction(5) * rng.randint(1, 4)
        others = [Fraction(rng.choice([1, 2, 3, 4, 6, 7])) for _ in range(rng.randint(1, 3))]
        modulus = Poly.from_coeffs([1], F5)
        for r in [root] + others:
            modulus = modulus * Poly((-r, Fraction(1)))
        Q = QuotientAlgebra(modulus, F5)
        p = rand_poly(rng, F5, rng.randint(0, modulus.degree - 1))
        if p(root) == 0:
            p = p + Poly((Fraction(1),))
            if p(root) == 0:
                continue
        inv, e = invert_refine(Q.elem(p), Q, lambda h: h(root) == 0)
        assert modulus.quo_rem(e)[1].is_zero
        assert e(root) == 0
        prod = (Q.elem(p).rep * inv.rep).quo_rem(e)[1]
        assert prod == Poly((Fraction(1),))
