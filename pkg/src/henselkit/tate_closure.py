"""Trace-form toolkit: Tate's formula, unit/nilpotent splitting,
separable parts, idempotent/factorisation correspondence, and
integral-closure trace certificates.

Everything is gcd-based; no polynomial is ever factored into
irreducibles.  The trace identity f'(x)*b = sum_j tr(g_j(x)*b) * x^j,
with g_j the difference-quotient rows of f, holds unconditionally, so
a failure of the check is reported as an internal arithmetic error
rather than a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadFactorisation, NotIdempotent, NotSeparable
from .polynomial import (
    BezoutCertificate,
    Poly,
    difference_quotient,
    gcd_bezout,
    poly_gcd,
)
from .quotient_algebra import AlgebraElement, QuotientAlgebra, trace


@dataclass(frozen=True)
class Factorisation:
    g: Poly
    h: Poly
    bezout: BezoutCertificate


@dataclass(frozen=True)
class TraceCertificate:
    traces: tuple
    reconstruction: Poly


@dataclass(frozen=True)
class IntegralityReport:
    passed: bool
    certificate: TraceCertificate
    failing_index: "int | None"


def _as_algebra_elem(b, algebra):
    if isinstance(b, AlgebraElement):
        if b.algebra.modulus != algebra.modulus:
            raise ValueError("element belongs to a different quotient algebra")
        return algebra.elem(b.rep)
    return algebra.elem(b)


def _trace_rows(f: Poly, b, algebra: QuotientAlgebra):
    rows = difference_quotient(f)
    b = _as_algebra_elem(b, algebra)
    traces = tuple(trace(algebra.elem(row) * b, algebra) for row in rows)
    return traces, Poly(traces)


def tate_identity_check(f: Poly, b, algebra: QuotientAlgebra) -> TraceCertificate:
    """Verify f'(x)*b = sum_j tr(g_j(x)*b) * x^j and return the traces."""
    if algebra.modulus != f:
        raise ValueError("modulus of the algebra must be f")
    traces, reconstruction = _trace_rows(f, b, algebra)
    b = _as_algebra_elem(b, algebra)
    lhs = algebra.elem(f.derivative()) * b
    if lhs != algebra.elem(reconstruction):
        raise AssertionError("trace identity failed; arithmetic bug")
    return TraceCertificate(traces, reconstruction)


def unit_nilpotent_split(b, f: Poly, field) -> Factorisation:
    """Factor f = g*h with b nilpotent mod g and a unit mod h.

    g = gcd(f, b^deg(f)); raising to deg(f) saturates every shared
    root to its full multiplicity in f, so g and h are then coprime.
    """
    algebra = QuotientAlgebra(f, field)
    be = _as_algebra_elem(b, algebra)
    power = (be ** f.degree).rep
    if power.is_zero:
        g = f.monic()
    else:
        g = poly_gcd(f, power)
    h = f.exact_div(g)
    h = h.monic()
    bez = gcd_bezout(g, h)
    if bez.d.degree != 0:
        raise AssertionError("split factors share a root; arithmetic bug")
    return Factorisation(g, h, bez)


def separable_split(f: Poly, field) -> Factorisation:
    """f = g*h with h separable and g dividing a power of f'.

    Characteristic-zero base fields only, where gcd extraction of the
    separable part is valid.
    """
    return unit_nilpotent_split(f.derivative(), f, field)


def idempotent_to_factorisation(e, f: Poly, field) -> Factorisation:
    algebra = QuotientAlgebra(f, field)
    ee = _as_algebra_elem(e, algebra)
    if ee * ee != ee:
        raise NotIdempotent("e^2 != e in the quotient algebra")
    if ee.rep.is_zero:
        g = f.monic()
    else:
        g = poly_gcd(f, ee.rep)
    h = f.exact_div(g).monic()
    bez = gcd_bezout(g, h)
    if bez.d.degree != 0:
        raise BadFactorisation("factors attached to the idempotent are not coprime")
    return Factorisation(g, h, bez)


def factorisation_to_idempotent(g: Poly, h: Poly, bezout: BezoutCertificate, field):
    """e = g*u mod g*h, the idempotent that is 0 mod g and 1 mod h."""
    if bezout.d.degree != 0 or bezout.u * g + bezout.v * h != bezout.d:
        raise BadFactorisation("Bezout data does not certify coprimality")
    f = g * h
    algebra = QuotientAlgebra(f, field)
    e = algebra.elem(g * bezout.u)
    if e * e != e:
        raise BadFactorisation("g, h do not multiply to a coprime factorisation")
    return e


def integral_trace_certificate(b, h: Poly, field) -> IntegralityReport:
    """Test whether every trace tr(g_j(x)*b) lands in the valuation ring.

    On PASS the reconstruction exhibits h'(x)*b inside V[x], so b lies
    in V[x][1/h'].  FAIL reports the first offending trace index.
    """
    if any(field.valuation(field.coerce(c)) < 0 for c in h.coeffs):
        raise NotSeparable("modulus must lie over the valuation ring")
    if poly_gcd(h, h.derivative()).degree != 0:
        raise NotSeparable("modulus must be separable")
    algebra = QuotientAlgebra(h, field)
    traces, reconstruction = _trace_rows(h, b, algebra)
    be = _as_algebra_elem(b, algebra)
    lhs = algebra.elem(h.derivative()) * be
    if lhs != algebra.elem(reconstruction):
        raise AssertionError("trace identity failed; arithmetic bug")
    certificate = TraceCertificate(traces, reconstruction)
    for j, t in enumerate(traces):
        if field.valuation(t) < 0:
            return IntegralityReport(False, certificate, j)
    return IntegralityReport(True, certificate, None)


def integral_coefficients_check(f: Poly, field):
    """Separable split of a monic f over V, with the factors checked to
    stay over V; returns (ok, factorisation)."""
    fact = separable_split(f, field)
    ok = all(
        field.valuation(field.coerce(c)) >= 0
        for part in (fact.g, fact.h)
        for c in part.coeffs
    )
    return ok, fact
