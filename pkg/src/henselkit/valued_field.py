"""Concrete discrete valued fields with exact arithmetic.

Two instances are provided: the rationals carrying a p-adic valuation
(elements are `fractions.Fraction`) and the rational function field
Q(t) carrying the order-of-vanishing-at-zero valuation (elements are
`RatFunc`).  Valuations are computed by exact divisibility stripping,
never through floating point, so every verdict downstream is exact.

A field is a small immutable descriptor passed around as a runtime
parameter; elements are plain values supporting the usual arithmetic
operators, which keeps the polynomial and quotient-algebra layers
generic over the instance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError


class Infinity:
    """The valuation of zero.  Absorbing for +, larger than any finite value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Infinity):
            raise ArithmeticError("inf - inf is undefined")
        return self

    def __neg__(self):
        raise ArithmeticError("-inf is not a valuation")

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("valuation-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, Infinity)

    def __gt__(self, other):
        return not isinstance(other, Infinity)

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "inf"


INF = Infinity()

#: A valuation value: a finite integer (or exact rational, for Newton
#: polygon root data) or INF.
Val = int | Fraction | Infinity


class Classification(enum.Enum):
    UNIT = "unit"
    RADICAL = "radical"
    OUTSIDE_V = "outside_v"
    ZERO = "zero"


# ---------------------------------------------------------------------------
# integer dense-polynomial helpers backing the rational function field
# ---------------------------------------------------------------------------


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _iadd(a, b):
    n = max(len(a), len(b))
    return _trim(
        tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )
    )


def _imul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def _content(a):
    return gcd(*a) if a else 0


def _primitive(a):
    g = _content(a)
    if g > 1:
        a = tuple(x // g for x in a)
    return a


def _igcd_poly(a, b):
    """Primitive gcd in Z[t], one cross-elimination step at a time with
    immediate content reduction to keep the integers small."""
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return _primitive(a or b)
    # a monomial only shares the root at zero
    for mono, other in ((a, b), (b, a)):
        if not any(c != 0 for c in mono[:-1]):
            k = min(len(mono) - 1, _ord(other))
            return (0,) * k + (1,)
    x, y = _primitive(a), _primitive(b)
    while y:
        if len(x) < len(y):
            x, y = y, x
        lb, la = y[-1], x[-1]
        k = len(x) - len(y)
        r = [lb * c for c in x]
        for i in range(len(y)):
            r[k + i] -= la * y[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        r = _primitive(tuple(r))
        if len(r) >= len(y):
            x = r
        else:
            x, y = y, r
    return x if x[-1] > 0 else tuple(-c for c in x)


def _idiv_exact(a, b):
    """a / b in Z[t], known exact (Gauss: primitive by primitive)."""
    rem = list(a)
    q = [0] * max(0, len(rem) - len(b) + 1)
    while len(rem) >= len(b):
        lead = rem[-1]
        if lead == 0:
            rem.pop()
            continue
        c, s = divmod(lead, b[-1])
        if s:
            raise ArithmeticError("inexact integer polynomial division")
        k = len(rem) - len(b)
        for i in range(len(b) - 1):
            rem[k + i] -= c * b[i]
        rem.pop()
        q[k] = c
    if any(rem):
        raise ArithmeticError("inexact integer polynomial division")
    return tuple(q)


def _ord(a):
    for i, c in enumerate(a):
        if c != 0:
            return i
    return None


class RatFunc:
    """A rational function in t over Q, kept in canonical form.

    Canonical form: integer-coefficient numerator and denominator with
    coprime primitive parts, coprime contents, and a positive leading
    denominator coefficient; the zero element is ()/(1).  Equality is
    therefore a syntactic check on the coefficient tuples.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,)):
        num, den = _ratfunc_normalise(num, den)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def constant(cls, q):
        q = Fraction(q)
        if q == 0:
            return cls._raw((), (1,))
        return cls._raw((q.numerator,), (q.denominator,))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other)
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if len(self.num) <= 1 and len(self.den) == 1:
            return hash(Fraction(self.num[0] if self.num else 0, self.den[0]))
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc._raw(tuple(-c for c in self.num), self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == (1,) and other.den == (1,):
            return RatFunc._raw(_iadd(self.num, other.num), (1,))
        return RatFunc(
            _iadd(_imul(self.num, other.den), _imul(other.num, self.den)),
            _imul(self.den, other.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == (1,) and other.den == (1,):
            return RatFunc._raw(_imul(self.num, other.num), (1,))
        return RatFunc(_imul(self.num, other.num), _imul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(_imul(self.num, other.den), _imul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.num:
                raise ZeroDivisionError("inverse of zero")
            return RatFunc(self.den, self.num) ** (-n)
        result = RatFunc.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"RatFunc({_fmt_qpoly(self.num)!r}/{_fmt_qpoly(self.den)!r})"


def _ratfunc_normalise(num, den):
    num = tuple(Fraction(c) for c in num)
    den = tuple(Fraction(c) for c in den)
    scale = 1
    for c in num + den:
        scale = scale * (c.denominator // gcd(scale, c.denominator))
    inum = _trim(tuple(int(c * scale) for c in num))
    iden = _trim(tuple(int(c * scale) for c in den))
    if not iden:
        raise ZeroDivisionError("rational function with zero denominator")
    if not inum:
        return (), (1,)
    cn, cd = _content(inum), _content(iden)
    pn = tuple(x // cn for x in inum)
    pd = tuple(x // cd for x in iden)
    g = _igcd_poly(pn, pd)
    if len(g) > 1:
        pn = _idiv_exact(pn, g)
        pd = _idiv_exact(pd, g)
    s = Fraction(cn, cd)
    a, b = s.numerator, s.denominator
    num = tuple(a * x for x in pn)
    den = tuple(b * x for x in pd)
    if den[-1] < 0:
        num = tuple(-x for x in num)
        den = tuple(-x for x in den)
    return num, den


def _fmt_qpoly(coeffs, var="t"):
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            term = str(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = f"{c}*{mono}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


def _int_val(n, p):
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PAdicField:
    """The rationals with the p-adic valuation; V is Z localised at p."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p-adic base must be prime, got {self.p}")

    @property
    def spec(self):
        return f"padic:{self.p}"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    @property
    def uniformizer(self):
        return Fraction(self.p)

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.spec}")

    def valuation(self, a):
        a = self.coerce(a)
        if a == 0:
            return INF
        return _int_val(a.numerator, self.p) - _int_val(a.denominator, self.p)

    def format_elem(self, a):
        return str(self.coerce(a))


@dataclass(frozen=True)
class TAdicField:
    """Rational functions in t over Q with the order-at-zero valuation."""

    @property
    def spec(self):
        return "tadic"

    @property
    def zero(self):
        return RatFunc()

    @property
    def one(self):
        return RatFunc.constant(1)

    @property
    def uniformizer(self):
        return RatFunc((0, 1))

    def from_int(self, n):
        return RatFunc.constant(n)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.spec}")

    def valuation(self, a):
        a = self.coerce(a)
        if not a.num:
            return INF
        return _ord(a.num) - _ord(a.den)

    def format_elem(self, a):
        a = self.coerce(a)
        if not a.num:
            return "0"
        num = _fmt_qpoly(a.num)
        if a.den == (1,):
            return num
        return f"({num})/({_fmt_qpoly(a.den)})"


def field_from_spec(spec: str):
    """Build a field from a CLI specifier, `padic:<p>` or `tadic`."""
    spec = spec.strip()
    if spec == "tadic":
        return TAdicField()
    if spec.startswith("padic:"):
        try:
            p = int(spec.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad field specifier {spec!r}: prime expected") from None
        try:
            return PAdicField(p)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    raise InputError(f"unknown field specifier {spec!r} (use padic:<p> or tadic)")


def valuation(a, field):
    """v(a) in the given field; INF exactly for a = 0."""
    return field.valuation(a)


def classify(a, field) -> Classification:
    """Partition K into zero, units of V, the radical of V and K minus V."""
    a = field.coerce(a)
    v = field.valuation(a)
    if v is INF:
        return Classification.ZERO
    if v == 0:
        return Classification.UNIT
    if v > 0:
        return Classification.RADICAL
    return Classification.OUTSIDE_V


def divides_in_valuation_ring(a, b, field) -> bool:
    """Whether a = x*b is solvable with x in the valuation ring."""
    a, b = field.coerce(a), field.coerce(b)
    vb = field.valuation(b)
    if vb is INF:
        return field.valuation(a) is INF
    return field.valuation(a) >= vb


def in_ring(a, field) -> bool:
    return field.valuation(a) >= 0
