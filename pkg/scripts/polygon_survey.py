#!/usr/bin/env python3
"""Survey Newton polygons of random products with known roots.

Builds polynomials as products of linear factors with chosen root
valuations, then prints the polygon segments next to the planted
multiset, over every built-in field.  Useful for eyeballing the
slope/valuation sign convention.
"""

import random

from henselkit import PAdicField, Poly, TAdicField, build_polygon, pretty


def poly_from_roots(field, roots):
    f = Poly((field.one,))
    for r in roots:
        f = f * Poly((-field.coerce(r), field.one))
    return f


def main():
    rng = random.Random(7)
    for field in (PAdicField(2), PAdicField(5), TAdicField()):
        print(f"== {field.spec} ==")
        for _ in range(3):
            roots = [
                rng.choice([1, 2, 3, 7]) * field.uniformizer ** rng.randint(-1, 2)
                for _ in range(rng.randint(2, 4))
            ]
            f = poly_from_roots(field, roots)
            polygon = build_polygon(f, field)
            planted = sorted(field.valuation(r) for r in roots)
            print(f"  f = {pretty(f)}")
            print(f"    planted valuations: {planted}")
            print(
                "    polygon says:      "
                + ", ".join(
                    f"{-seg.slope} (x{seg.hlength})" for seg in polygon.segments
                )
            )


if __name__ == "__main__":
    main()
