"""Deterministic random corpora shared by the unit and acceptance tests."""

from fractions import Fraction

from henselkit import PAdicField, Poly, RatFunc, TAdicField, new_step

PADIC_FIELDS = [PAdicField(2), PAdicField(3), PAdicField(5)]
ORACLE_FIELDS = PADIC_FIELDS + [TAdicField()]
BOTH_KINDS = [PAdicField(5), TAdicField()]


def rand_unit(rng, field):
    if isinstance(field, PAdicField):
        p = field.p
        n = rng.choice([k for k in range(-19, 20) if k and k % p])
        if rng.random() < 0.3:
            d = rng.choice([k for k in range(1, 20) if k % p])
            return Fraction(n, d)
        return Fraction(n)
    c = rng.choice([k for k in range(-9, 10) if k])
    if rng.random() < 0.3:
        return RatFunc((c, rng.randint(-3, 3)))
    return RatFunc((c,))


def rand_with_valuation(rng, field, k):
    return rand_unit(rng, field) * field.uniformizer**k


def rand_ring_elem(rng, field, max_val=3, zero_rate=0.1):
    """Random element of the valuation ring, occasionally zero."""
    if rng.random() < zero_rate:
        return field.zero
    return rand_with_valuation(rng, field, rng.randint(0, max_val))


def rand_field_elem(rng, field, span=3, zero_rate=0.08):
    if rng.random() < zero_rate:
        return field.zero
    return rand_with_valuation(rng, field, rng.randint(-span, span))


def rand_poly(rng, field, degree, coeff=rand_field_elem):
    coeffs = [coeff(rng, field) for _ in range(degree + 1)]
    if coeffs[-1] == field.zero:
        coeffs[-1] = rand_unit(rng, field)
    return Poly(tuple(coeffs))


def rand_ring_poly(rng, field, degree):
    return rand_poly(rng, field, degree, coeff=rand_ring_elem)


def rand_monic(rng, field, degree, coeff=rand_field_elem):
    coeffs = [coeff(rng, field) for _ in range(degree)] + [field.one]
    return Poly(tuple(coeffs))


def poly_from_roots(field, roots):
    f = Poly((field.one,))
    for r in roots:
        f = f * Poly((-field.coerce(r), field.one))
    return f


def oracle_step_rings(rng, field, count):
    """Step rings with known factored moduli: one radical root, the rest units.

    Returns (ring, radical_root, unit_roots) triples; degrees 2 to 5,
    radical root valuation in {1, 2, 3}.
    """
    out = []
    for i in range(count):
        degree = 2 + i % 4
        v_rho = 1 + i % 3
        rho = rand_with_valuation(rng, field, v_rho)
        units = [rand_unit(rng, field) for _ in range(degree - 1)]
        g1 = poly_from_roots(field, [rho] + units)
        ring = new_step(g1, field, roots=[rho] + units)
        out.append((ring, rho, units))
    return out
