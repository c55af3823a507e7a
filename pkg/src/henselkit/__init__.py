"""Exact-arithmetic kernel for henselisation of discrete valued fields."""

from .errors import (
    BadFactorisation,
    BadModulus,
    GcdOfZeros,
    InputError,
    KernelError,
    NotAUnit,
    NotHenselCode,
    NotIdempotent,
    NotLeftmostIsolated,
    NotSeparable,
    NotSpecialShape,
    PreconditionError,
    UncertifiedModulus,
    ZeroDivisorInversion,
    ZeroPolynomial,
)
from .hensel import HenselCode, SpecialData, check_hensel_code, make_special, newton_lift
from .henselisation import (
    HenselStepRing,
    StepElement,
    Verdict,
    ZeroTestReport,
    element_valuation,
    eval_poly_at,
    in_valuation_ring,
    is_zero,
    make_element,
    new_step,
    special_root,
    step_equal,
    step_invert,
    valuation_of,
    zero_test_report,
)
from .newton_polygon import (
    NewtonPolygon,
    Segment,
    build_polygon,
    isolate_leftmost_root,
    isolated_slopes,
    root_valuations,
)
from .parsing import parse_element, parse_polynomial
from .polynomial import (
    BezoutCertificate,
    Poly,
    difference_quotient,
    discriminant,
    exact_det,
    gcd_bezout,
    poly_gcd,
    pretty,
    resultant,
    shift_compose,
    x_poly,
)
from .quotient_algebra import (
    AlgebraElement,
    QuotientAlgebra,
    charpoly,
    charpoly_via_resultant,
    evaluate_in_algebra,
    invert_refine,
    mult_matrix,
    reduce_mod,
    trace,
)
from .tate_closure import (
    Factorisation,
    IntegralityReport,
    TraceCertificate,
    factorisation_to_idempotent,
    idempotent_to_factorisation,
    integral_coefficients_check,
    integral_trace_certificate,
    separable_split,
    tate_identity_check,
    unit_nilpotent_split,
)
from .valued_field import (
    INF,
    Classification,
    Infinity,
    PAdicField,
    RatFunc,
    TAdicField,
    classify,
    divides_in_valuation_ring,
    field_from_spec,
    valuation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
