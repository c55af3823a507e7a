"""Batch command-line front end.

Every core operation is exposed as a subcommand with text operands and
either human-readable or JSON output (`--json`).  All numbers in JSON
payloads are exact strings, never floats, and every payload carries
`"schema": 1`.  Exit codes: 0 success, 2 malformed input, 3 violated
precondition.  The default field may be supplied through the HK_FIELD
environment variable; operands given as `-` are read from stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .errors import InputError, PreconditionError
from .henselisation import (
    element_valuation,
    make_element,
    new_step,
    step_invert,
    zero_test_report,
)
from .hensel import HenselCode, newton_lift
from .newton_polygon import build_polygon, isolate_leftmost_root
from .parsing import parse_element, parse_polynomial
from .polynomial import Poly, pretty
from .quotient_algebra import QuotientAlgebra
from .tate_closure import (
    idempotent_to_factorisation,
    integral_coefficients_check,
    integral_trace_certificate,
    separable_split,
    tate_identity_check,
    unit_nilpotent_split,
)
from .valued_field import INF, field_from_spec


def _val_str(v) -> str:
    return "inf" if v is INF else str(v)


def _poly_strs(f: Poly, field):
    return [field.format_elem(field.coerce(c)) for c in f.coeffs]


def _operand(value: str) -> str:
    if value == "-":
        return sys.stdin.read().strip()
    return value


def _get_field(args):
    spec = args.field or os.environ.get("HK_FIELD")
    if not spec:
        raise InputError("no field given: use --field or set HK_FIELD")
    return field_from_spec(spec)


def _step_ring(args, field):
    modulus = parse_polynomial(_operand(args.modulus), field)
    # a bare modulus carries no factorisation data; the Hensel-code
    # check inside new_step validates it, and for such moduli the
    # polygon forces every non-distinguished root to be a unit
    return new_step(modulus, field, certified=True)


def _cmd_polygon(args):
    field = _get_field(args)
    poly = parse_polynomial(_operand(args.poly), field)
    polygon = build_polygon(poly, field)
    payload = {
        "schema": 1,
        "ord0": polygon.ord0,
        "vertices": [[i, _val_str(v)] for i, v in polygon.vertices],
        "segments": [
            {"slope": str(seg.slope), "len": seg.hlength} for seg in polygon.segments
        ],
    }
    human = "ord0={} vertices={} slopes={}".format(
        polygon.ord0,
        " ".join(f"({i},{_val_str(v)})" for i, v in polygon.vertices),
        " ".join(f"{seg.slope}x{seg.hlength}" for seg in polygon.segments) or "none",
    )
    return payload, human


def _cmd_zero_test(args):
    field = _get_field(args)
    ring = _step_ring(args, field)
    elem = parse_polynomial(_operand(args.elem), field)
    report = zero_test_report(elem, ring)
    payload = {
        "schema": 1,
        "verdict": report.verdict.value,
        "valuation": _val_str(report.valuation),
        "q": _poly_strs(report.q, field),
        "r": _poly_strs(report.r, field),
        "moved": None
        if report.moved is None
        else [_val_str(report.moved[0]), _val_str(report.moved[1])],
    }
    human = f"{report.verdict.value} (valuation {_val_str(report.valuation)})"
    return payload, human


def _cmd_valuation(args):
    field = _get_field(args)
    elem = parse_element(_operand(args.elem), field)
    v = field.valuation(elem)
    return {"schema": 1, "valuation": _val_str(v)}, _val_str(v)


def _cmd_lift(args):
    field = _get_field(args)
    poly = parse_polynomial(_operand(args.poly), field)
    start = parse_element(_operand(args.start), field)
    lifted = newton_lift(HenselCode(poly, start), args.precision, field)
    text = field.format_elem(lifted)
    return {"schema": 1, "value": text, "precision": args.precision}, text


def _cmd_special_from(args):
    field = _get_field(args)
    poly = parse_polynomial(_operand(args.poly), field)
    data = isolate_leftmost_root(poly, field)
    payload = {
        "schema": 1,
        "g": _poly_strs(data.special_poly, field),
        "g1": _poly_strs(data.hensel_poly, field),
        "n": data.degree,
        "a0": field.format_elem(data.a0),
        "a1": field.format_elem(data.a1),
        "root_valuation": _val_str(field.valuation(data.a0)),
    }
    human = "g = {}\ng1 = {}\nroot valuation = {}".format(
        pretty(data.special_poly),
        pretty(data.hensel_poly),
        _val_str(field.valuation(data.a0)),
    )
    return payload, human


def _cmd_tate_check(args):
    field = _get_field(args)
    modulus = parse_polynomial(_operand(args.modulus), field)
    elem = parse_polynomial(_operand(args.elem), field)
    algebra = QuotientAlgebra(modulus, field)
    cert = tate_identity_check(modulus, algebra.elem(elem), algebra)
    payload = {
        "schema": 1,
        "traces": [field.format_elem(t) for t in cert.traces],
        "reconstruction": _poly_strs(cert.reconstruction, field),
    }
    human = "traces = {}\nf'(x)*b = {}".format(
        ", ".join(field.format_elem(t) for t in cert.traces),
        pretty(cert.reconstruction),
    )
    return payload, human


def _cmd_split(args):
    field = _get_field(args)
    poly = parse_polynomial(_operand(args.poly), field)
    if args.elem is not None:
        elem = parse_polynomial(_operand(args.elem), field)
        fact = unit_nilpotent_split(elem, poly, field)
        mode = "unit-nilpotent"
    else:
        fact = separable_split(poly, field)
        mode = "separable"
    payload = {
        "schema": 1,
        "mode": mode,
        "g": _poly_strs(fact.g, field),
        "h": _poly_strs(fact.h, field),
    }
    human = f"g = {pretty(fact.g)}\nh = {pretty(fact.h)}"
    return payload, human


def _cmd_idempotent(args):
    field = _get_field(args)
    poly = parse_polynomial(_operand(args.poly), field)
    elem = parse_polynomial(_operand(args.elem), field)
    fact = idempotent_to_factorisation(elem, poly, field)
    payload = {
        "schema": 1,
        "g": _poly_strs(fact.g, field),
        "h": _poly_strs(fact.h, field),
    }
    return payload, f"g = {pretty(fact.g)}\nh = {pretty(fact.h)}"


def _cmd_integrality(args):
    field = _get_field(args)
    if args.elem is not None:
        if args.modulus is None:
            raise InputError("trace mode needs --modulus together with --elem")
        modulus = parse_polynomial(_operand(args.modulus), field)
        elem = parse_polynomial(_operand(args.elem), field)
        report = integral_trace_certificate(elem, modulus, field)
        if report.passed:
            payload = {
                "schema": 1,
                "verdict": "pass",
                "traces": [field.format_elem(t) for t in report.certificate.traces],
                "reconstruction": _poly_strs(report.certificate.reconstruction, field),
            }
            human = f"PASS: h'(x)*b = {pretty(report.certificate.reconstruction)}"
        else:
            payload = {
                "schema": 1,
                "verdict": "fail",
                "failing_index": report.failing_index,
            }
            human = f"FAIL at trace index {report.failing_index}"
        return payload, human
    if args.poly is None:
        raise InputError("give --poly for the coefficient check or --modulus/--elem")
    poly = parse_polynomial(_operand(args.poly), field)
    ok, fact = integral_coefficients_check(poly, field)
    payload = {
        "schema": 1,
        "ok": ok,
        "g": _poly_strs(fact.g, field),
        "h": _poly_strs(fact.h, field),
    }
    human = "{}: g = {}, h = {}".format("ok" if ok else "NOT integral", pretty(fact.g), pretty(fact.h))
    return payload, human


def _cmd_invert(args):
    field = _get_field(args)
    ring = _step_ring(args, field)
    num = parse_polynomial(_operand(args.num), field)
    den = parse_polynomial(_operand(args.den), field) if args.den else None
    try:
        elem = make_element(ring, num, den)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    inverse = step_invert(elem, ring)
    payload = {
        "schema": 1,
        "num": _poly_strs(inverse.num, field),
        "den": _poly_strs(inverse.den, field),
        "valuation": _val_str(element_valuation(inverse, ring)),
    }
    if inverse.den == Poly((field.one,)):
        human = pretty(inverse.num)
    else:
        human = f"({pretty(inverse.num)}) / ({pretty(inverse.den)})"
    return payload, human


# let operand values such as `-5,1` pass as option arguments
_NEGATIVE_OPERAND = re.compile(r"^-\d[\d,./t^*()+-]*$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="henselkit",
        description="exact valued-field kernel: polygons, lifting, step-ring zero tests",
    )
    parser._negative_number_matcher = _NEGATIVE_OPERAND
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **operands):
        p = sub.add_parser(name)
        p._negative_number_matcher = _NEGATIVE_OPERAND
        p.add_argument("--field", help="padic:<p> or tadic (default: $HK_FIELD)")
        p.add_argument("--json", action="store_true", help="emit JSON on stdout")
        for flag, (required, kw) in operands.items():
            p.add_argument(flag, required=required, **kw)
        p.set_defaults(fn=fn)
        return p

    add("polygon", _cmd_polygon, **{"--poly": (True, {})})
    add("zero-test", _cmd_zero_test, **{"--modulus": (True, {}), "--elem": (True, {})})
    add("valuation", _cmd_valuation, **{"--elem": (True, {})})
    add(
        "lift",
        _cmd_lift,
        **{
            "--poly": (True, {}),
            "--start": (True, {}),
            "--precision": (True, {"type": int}),
        },
    )
    add("special-from", _cmd_special_from, **{"--poly": (True, {})})
    add("tate-check", _cmd_tate_check, **{"--modulus": (True, {}), "--elem": (True, {})})
    add("split", _cmd_split, **{"--poly": (True, {}), "--elem": (False, {})})
    add("idempotent", _cmd_idempotent, **{"--poly": (True, {}), "--elem": (True, {})})
    add(
        "integrality",
        _cmd_integrality,
        **{"--poly": (False, {}), "--modulus": (False, {}), "--elem": (False, {})},
    )
    add(
        "invert",
        _cmd_invert,
        **{"--modulus": (True, {}), "--num": (True, {}), "--den": (False, {})},
    )
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, human = args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(human)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
