"""Hensel codes, the special-polynomial transform, and Newton lifting.

A Hensel code (f, a) is a monic f over the valuation ring with f(a) in
the radical and f'(a) a unit; it licenses a unique nearby root.  A
polynomial with a radical constant term and a unit linear coefficient
is converted into a *special* polynomial g = X^n - X^(n-1) + (radical
lower part), whose shift g(X+1) is a Hensel polynomial; the original
polynomial then has an explicit root in the step ring over that shift.
Newton lifting provides an independent in-field approximation oracle,
with precision measured purely by valuation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotHenselCode, NotSpecialShape
from .polynomial import Poly, shift_compose
from .valued_field import INF


@dataclass(frozen=True)
class HenselCode:
    f: Poly
    a: object


@dataclass(frozen=True)
class SpecialData:
    """Output of the special transform.

    special_poly is g, hensel_poly is g(X+1); the root of the source
    polynomial is -a0 / (a1 * delta) with delta the unit root of g,
    i.e. 1 + the radical root of hensel_poly.
    """

    special_poly: Poly
    hensel_poly: Poly
    degree: int
    a0: object
    a1: object


def check_hensel_code(f: Poly, a, field) -> bool:
    """Whether (f, a) is a Hensel code: f monic over V, v(f(a)) >= 1, v(f'(a)) = 0."""
    try:
        a = field.coerce(a)
    except TypeError:
        return False
    if f.is_zero or not f.is_monic:
        return False
    if any(field.valuation(c) < 0 for c in f.coeffs):
        return False
    if field.valuation(a) < 0:
        return False
    if not field.valuation(f(a)) >= 1:
        return False
    return field.valuation(f.derivative()(a)) == 0


def make_special(f: Poly, field) -> SpecialData:
    """The special polynomial attached to f = a0 + a1*X + ... + an*X^n.

    Requires coefficients in V with v(a0) >= 1 and v(a1) = 0; f need
    not be monic.  The construction inverts the variable: a0 * g(X)
    equals X^n * f(-a0 / (a1 X)) identically, which is re-verified by
    expansion before returning.
    """
    if f.degree < 1:
        raise NotSpecialShape("need degree >= 1")
    coeffs = [field.coerce(f.coeff(k)) for k in range(f.degree + 1)]
    if any(field.valuation(c) < 0 for c in coeffs):
        raise NotSpecialShape("coefficients must lie in the valuation ring")
    a0, a1 = coeffs[0], coeffs[1]
    if not field.valuation(a0) >= 1:
        raise NotSpecialShape("constant term must lie in the radical")
    if field.valuation(a1) != 0:
        raise NotSpecialShape("linear coefficient must be a unit")

    n = f.degree
    g_coeffs = [field.zero] * (n + 1)
    g_coeffs[n] = field.one
    g_coeffs[n - 1] = -field.one
    for k in range(2, n + 1):
        term = (a0 ** (k - 1)) * (a1 ** (-k)) * coeffs[k]
        g_coeffs[n - k] = g_coeffs[n - k] + (term if k % 2 == 0 else -term)
    g = Poly(tuple(g_coeffs))

    ratio = -a0 / a1
    rhs = [field.zero] * (n + 1)
    for k in range(n + 1):
        rhs[n - k] = coeffs[k] * ratio**k
    if g.scale(a0) != Poly(tuple(rhs)):
        raise AssertionError("variable-inversion identity failed; arithmetic bug")

    g1 = shift_compose(g, field.one)
    if not check_hensel_code(g1, field.zero, field):
        raise AssertionError("shifted special polynomial is not a Hensel code")
    return SpecialData(special_poly=g, hensel_poly=g1, degree=n, a0=a0, a1=a1)


def newton_lift(code: HenselCode, precision: int, field):
    """Iterate x -> x - f(x)/f'(x) until v(f(x)) >= precision.

    The Hensel data guarantee at least doubling of v(f(x)) per step, so
    the loop runs O(log precision) times on exact elements.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    f = code.f
    a = field.coerce(code.a)
    if not check_hensel_code(f, a, field):
        raise NotHenselCode("newton_lift needs a valid Hensel code")
    df = f.derivative()
    x = a
    v = field.valuation(f(x))
    while v < precision:
        x = x - f(x) / df(x)
        v_next = field.valuation(f(x))
        if not (v_next is INF or v_next >= 2 * v):
            raise AssertionError("Newton step failed to double the valuation")
        v = v_next
    return x
