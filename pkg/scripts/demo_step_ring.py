#!/usr/bin/env python3
"""Walk one elementary step of the construction, end to end.

Starting from f = X^2 + X + 5 over the 5-adics: build its Newton
polygon, convert it to a special polynomial, adjoin the radical root of
the shifted modulus, and interrogate the resulting ring with the zero
test.  Run with no arguments, or pass a different field specifier.
"""

import sys

from henselkit import (
    Poly,
    Verdict,
    build_polygon,
    element_valuation,
    eval_poly_at,
    field_from_spec,
    isolate_leftmost_root,
    new_step,
    pretty,
    special_root,
    step_invert,
    valuation_of,
    zero_test_report,
)


def main():
    field = field_from_spec(sys.argv[1] if len(sys.argv) > 1 else "padic:5")
    f = Poly((field.uniformizer, field.one, field.one))
    print(f"field: {field.spec}")
    print(f"f = {pretty(f)}")

    polygon = build_polygon(f, field)
    print("polygon vertices:", polygon.vertices)
    print("segments:", [(str(s.slope), s.hlength) for s in polygon.segments])

    data = isolate_leftmost_root(f, field)
    print(f"special polynomial g = {pretty(data.special_poly)}")
    print(f"shifted modulus g1 = {pretty(data.hensel_poly)}")

    ring = new_step(data.hensel_poly, field, special=data)
    print("valuation of the adjoined root:", ring.root_valuation)

    gamma = special_root(data, ring)
    value = eval_poly_at(f, gamma, ring)
    verdict = zero_test_report(value.num, ring).verdict
    print(f"f(root) vanishes in the step ring: {verdict is Verdict.ZERO}")
    print("valuation of the root:", element_valuation(gamma, ring))

    pi = field.uniformizer
    probes = [
        Poly((field.zero, field.one)),
        Poly((field.one, field.one)),
        Poly((pi, field.one)),
        Poly((pi * pi,)),
    ]
    for p in probes:
        report = zero_test_report(p, ring)
        print(
            f"  p = {pretty(p):<12} verdict={report.verdict.value:<8} "
            f"valuation={report.valuation}"
        )

    unit = Poly.from_coeffs([1, 1], field)
    from henselkit import make_element

    inverse = step_invert(make_element(ring, unit), ring)
    print(f"(1 + x)^-1 has numerator {pretty(inverse.num)} over {pretty(inverse.den)}")
    print("sanity:", valuation_of(unit, ring) == 0)


if __name__ == "__main__":
    main()
