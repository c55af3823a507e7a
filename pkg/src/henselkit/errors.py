"""Exception hierarchy shared by all kernel modules.

InputError marks malformed user-supplied text (CLI exit code 2);
PreconditionError marks a violated operation precondition (CLI exit
code 3).
"""


class KernelError(Exception):
    pass


class InputError(KernelError):
    pass


class PreconditionError(KernelError):
    pass


class GcdOfZeros(PreconditionError):
    pass


class BadModulus(PreconditionError):
    pass


class NotSpecialShape(PreconditionError):
    """Constant term not in the radical or linear coefficient not a unit."""


class NotHenselCode(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NotLeftmostIsolated(PreconditionError):
    pass


class ZeroDivisorInversion(PreconditionError):
    pass


class UncertifiedModulus(PreconditionError):
    pass


class NotAUnit(PreconditionError):
    pass


class NotIdempotent(PreconditionError):
    pass


class BadFactorisation(PreconditionError):
    pass


class NotSeparable(PreconditionError):
    pass
