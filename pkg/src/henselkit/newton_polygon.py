"""Newton polygons with respect to a discrete valuation.

The polygon of a nonzero polynomial is the lower convex hull of the
points (i, v(c_i)) over its nonzero coefficients.  Segment slopes
strictly increase left to right; a segment of slope s and horizontal
length k records k roots of valuation -s, and the order of vanishing
at zero records the roots of valuation INF.  A segment of horizontal
length one is an isolated slope; when it is the leftmost one the
corresponding root is realised explicitly through the special
transform.  Interior isolated slopes are reported but not realised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotLeftmostIsolated, ZeroPolynomial
from .hensel import SpecialData, make_special
from .polynomial import Poly
from .valued_field import INF


@dataclass(frozen=True)
class Segment:
    slope: Fraction
    hlength: int
    start: int


@dataclass(frozen=True)
class NewtonPolygon:
    degree: int
    ord0: int
    vertices: tuple
    segments: tuple


def build_polygon(q: Poly, field) -> NewtonPolygon:
    if q.is_zero:
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")
    points = [
        (i, field.valuation(c)) for i, c in enumerate(q.coeffs) if not (c == 0)
    ]
    hull = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        segments.append(Segment(Fraction(v2 - v1, i2 - i1), i2 - i1, i1))
    return NewtonPolygon(
        degree=q.degree,
        ord0=points[0][0],
        vertices=tuple(hull),
        segments=tuple(segments),
    )


def _cross(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def root_valuations(polygon: NewtonPolygon) -> dict:
    """Multiset {valuation: multiplicity} of the roots, INF included."""
    out = {}
    if polygon.ord0:
        out[INF] = polygon.ord0
    for seg in polygon.segments:
        out[-seg.slope] = seg.hlength
    return out


def isolated_slopes(polygon: NewtonPolygon):
    """(slope, start index) for every segment of horizontal length one."""
    return tuple((seg.slope, seg.start) for seg in polygon.segments if seg.hlength == 1)


def isolate_leftmost_root(f: Poly, field) -> SpecialData:
    """Realise the root attached to a leftmost isolated slope.

    Needs f over the valuation ring with a radical constant term and a
    unit linear coefficient, so that the leftmost polygon segment runs
    from (0, v(a0)) to (1, 0).  The root has valuation v(a0) and lives
    in the step ring over the returned Hensel polynomial.
    """
    if any(field.valuation(field.coerce(c)) < 0 for c in f.coeffs):
        raise NotLeftmostIsolated("coefficients must lie in the valuation ring")
    polygon = build_polygon(f, field)
    va0 = field.valuation(field.coerce(f.coeff(0)))
    va1 = field.valuation(field.coerce(f.coeff(1)))
    if not polygon.segments or polygon.segments[0].hlength != 1:
        raise NotLeftmostIsolated("leftmost polygon segment is not of length one")
    if not (va0 >= 1 and va1 == 0):
        raise NotLeftmostIsolated(
            "need a radical constant term and a unit linear coefficient"
        )
    return make_special(f, field)
