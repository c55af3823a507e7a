"""One elementary step ring of the henselisation, with a decidable
zero test and valuation.

The ring adjoins to V the radical root of a Hensel polynomial g1 and
inverts 1 + radical + (root).  Equality and valuation are decided
without factorisation: for a polynomial p, compare the root-valuation
multisets (read off Newton polygons) of the characteristic polynomials
of p(x) and of x*p(x) in K[X]/(g1).  Multiplying by x shifts exactly
one multiset entry up by the valuation of the adjoined root, because
every other root of g1 is a unit; p vanishes at the adjoined root if
and only if nothing moved.

The unit-root side condition is enforced by provenance: a step ring is
built either from the output of the special transform or from a
modulus supplied in factored form, whose root pattern is then checked.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotAUnit, NotHenselCode, UncertifiedModulus
from .hensel import SpecialData, check_hensel_code
from .newton_polygon import NewtonPolygon, build_polygon, root_valuations
from .polynomial import Poly
from .quotient_algebra import QuotientAlgebra, charpoly, invert_refine
from .valued_field import INF


class Verdict(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class HenselStepRing:
    hensel_poly: Poly
    field: object
    root_valuation: object
    algebra: QuotientAlgebra


@dataclass(frozen=True)
class ZeroTestReport:
    verdict: Verdict
    q: Poly
    r: Poly
    q_polygon: NewtonPolygon
    r_polygon: NewtonPolygon
    moved: "tuple | None"
    valuation: object


def new_step(
    g1: Poly, field, *, special: SpecialData = None, roots=None, certified: bool = False
) -> HenselStepRing:
    """Build the step ring over g1.

    The caller must vouch for the unit-root property in one of three
    ways: pass the SpecialData that produced g1, pass the full root
    list (checked: product matches, exactly one non-unit root), or set
    certified=True to take responsibility outright.
    """
    g1 = Poly.from_coeffs(g1.coeffs, field)
    if not check_hensel_code(g1, field.zero, field):
        raise NotHenselCode("(g1, 0) must be a Hensel code over the valuation ring")
    if special is not None:
        if special.hensel_poly != g1:
            raise UncertifiedModulus("supplied transform data does not match g1")
    elif roots is not None:
        product = Poly((field.one,))
        radical_count = 0
        for r in roots:
            r = field.coerce(r)
            product = product * Poly((-r, field.one))
            v = field.valuation(r)
            if v >= 1:
                radical_count += 1
            elif v != 0:
                raise UncertifiedModulus("root outside the valuation ring")
        if product != g1:
            raise UncertifiedModulus("root list does not multiply out to g1")
        if radical_count != 1:
            raise UncertifiedModulus("expected exactly one non-unit root")
    elif not certified:
        raise UncertifiedModulus(
            "step ring needs transform provenance, a root list, or certified=True"
        )
    v_mu = field.valuation(g1(field.zero))
    return HenselStepRing(
        hensel_poly=g1,
        field=field,
        root_valuation=v_mu,
        algebra=QuotientAlgebra(g1, field),
    )


def zero_test_report(p: Poly, ring: HenselStepRing) -> ZeroTestReport:
    """Decide whether p vanishes at the adjoined root, with full evidence."""
    alg = ring.algebra
    pe = alg.elem(p)
    q = charpoly(pe, alg)
    r = charpoly(alg.x * pe, alg)
    q_polygon = build_polygon(q, ring.field)
    r_polygon = build_polygon(r, ring.field)
    removed, added = _multiset_diff(root_valuations(q_polygon), root_valuations(r_polygon))
    if not removed and not added:
        return ZeroTestReport(Verdict.ZERO, q, r, q_polygon, r_polygon, None, INF)
    if len(removed) != 1 or len(added) != 1:
        raise AssertionError("zero test bookkeeping: more than one entry moved")
    w_q, w_r = removed[0], added[0]
    if w_r != w_q + ring.root_valuation:
        raise AssertionError("zero test bookkeeping: moved entry shifted wrongly")
    return ZeroTestReport(Verdict.NONZERO, q, r, q_polygon, r_polygon, (w_q, w_r), w_q)


def _multiset_diff(a: dict, b: dict):
    removed, added = [], []
    for key in set(a) | set(b):
        delta = a.get(key, 0) - b.get(key, 0)
        if delta > 0:
            removed.extend([key] * delta)
        elif delta < 0:
            added.extend([key] * (-delta))
    return removed, added


def is_zero(p: Poly, ring: HenselStepRing) -> ZeroTestReport:
    return zero_test_report(p, ring)


def valuation_of(p: Poly, ring: HenselStepRing):
    """Valuation of p at the adjoined root; INF exactly on zero."""
    return zero_test_report(p, ring).valuation


@dataclass(frozen=True, eq=False)
class StepElement:
    """A fraction num/den of the step ring.

    Numerator and denominator live over the valuation ring, with the
    denominator in 1 + radical + (x), so its value at the adjoined
    root is a unit.
    """

    num: Poly
    den: Poly
    ring: HenselStepRing

    def __mul__(self, other):
        other = _as_element(other, self.ring)
        return make_element(self.ring, self.num * other.num, self.den * other.den)

    def __add__(self, other):
        other = _as_element(other, self.ring)
        return make_element(
            self.ring,
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __sub__(self, other):
        other = _as_element(other, self.ring)
        return make_element(
            self.ring,
            self.num * other.den - other.num * self.den,
            self.den * other.den,
        )

    def __eq__(self, other):
        if isinstance(other, StepElement):
            if other.ring.hensel_poly != self.ring.hensel_poly:
                return NotImplemented
            return step_equal(self, other, self.ring)
        return NotImplemented

    __hash__ = None


def _as_element(x, ring):
    if isinstance(x, StepElement):
        return x
    if isinstance(x, Poly):
        return make_element(ring, x)
    return make_element(ring, Poly((ring.field.coerce(x),)))


def make_element(ring: HenselStepRing, num: Poly, den: Poly = None) -> StepElement:
    if den is None:
        den = Poly((ring.field.one,))
    field = ring.field
    num = num.quo_rem(ring.hensel_poly)[1]
    den = den.quo_rem(ring.hensel_poly)[1]
    for c in num.coeffs:
        if field.valuation(c) < 0:
            raise ValueError("numerator must lie over the valuation ring")
    for c in den.coeffs:
        if field.valuation(c) < 0:
            raise ValueError("denominator must lie over the valuation ring")
    # reduction mod g1 only moves the constant term by a multiple of
    # g1(0), which is radical, so membership in 1 + m + (x) survives it
    if not field.valuation(field.coerce(den.coeff(0)) - field.one) >= 1:
        raise ValueError("denominator constant term must lie in 1 + radical")
    return StepElement(num, den, ring)


def element_valuation(u: StepElement, ring: HenselStepRing):
    vd = valuation_of(u.den, ring)
    if vd != 0:
        raise AssertionError("denominator of a step element must be a unit")
    return valuation_of(u.num, ring)


def step_equal(u: StepElement, w: StepElement, ring: HenselStepRing) -> bool:
    diff = u.num * w.den - w.num * u.den
    return zero_test_report(diff, ring).verdict is Verdict.ZERO


def step_invert(u: StepElement, ring: HenselStepRing) -> StepElement:
    """Inverse of a unit, via gcd refinement of the modulus.

    When the Bezout inverse fails to lie over the valuation ring, fall
    back to swapping numerator and denominator, normalised so the new
    denominator has constant term 1; this always yields an admissible
    representative of the same inverse.
    """
    field = ring.field
    if element_valuation(u, ring) != 0:
        raise NotAUnit("only elements of valuation zero are invertible")
    oracle = lambda h: zero_test_report(h, ring).verdict is Verdict.ZERO
    inv, refined = invert_refine(ring.algebra.elem(u.num), ring.algebra, oracle)
    w = (u.den * inv.rep).quo_rem(refined)[1]
    if all(field.valuation(c) >= 0 for c in w.coeffs):
        return make_element(ring, w)
    c = field.one / field.coerce(u.num.coeff(0))
    return make_element(ring, u.den.scale(c), u.num.scale(c))


def in_valuation_ring(p: Poly, ring: HenselStepRing) -> bool:
    """Whether p evaluated at the adjoined root has valuation >= 0.

    p may have coefficients anywhere in K; denominators are cleared
    with a power of the uniformizer before running the valuation.
    """
    field = ring.field
    if p.is_zero:
        return True
    shift = 0
    for c in p.coeffs:
        v = field.valuation(c)
        if v is not INF and v < 0:
            shift = max(shift, -v)
    cleared = p.scale(field.uniformizer**shift)
    val = valuation_of(cleared, ring)
    if val is INF:
        return True
    return val - shift >= 0


def special_root(special: SpecialData, ring: HenselStepRing) -> StepElement:
    """The explicit root of the source polynomial inside the step ring.

    The root is -a0 / (a1 * delta) with delta = 1 + x; scaling both
    sides by 1/a1 keeps the denominator in 1 + radical + (x).
    """
    if special.hensel_poly != ring.hensel_poly:
        raise ValueError("transform data belongs to a different step ring")
    field = ring.field
    num = Poly((-special.a0 / special.a1,))
    den = Poly((field.one, field.one))
    return make_element(ring, num, den)


def eval_poly_at(f: Poly, u: StepElement, ring: HenselStepRing) -> StepElement:
    """f(u) as a step element, with denominators cleared by den**deg(f)."""
    d = f.degree
    if d < 0:
        return make_element(ring, Poly(()))
    g1 = ring.hensel_poly
    num = Poly(())
    num_pow = Poly((ring.field.one,))
    den_pows = [Poly((ring.field.one,))]
    for _ in range(d):
        den_pows.append((den_pows[-1] * u.den).quo_rem(g1)[1])
    for k in range(d + 1):
        c = f.coeff(k)
        term = num_pow.scale(c) * den_pows[d - k]
        num = (num + term).quo_rem(g1)[1]
        if k < d:
            num_pow = (num_pow * u.num).quo_rem(g1)[1]
    return make_element(ring, num, den_pows[d])
