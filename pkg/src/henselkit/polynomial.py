"""Dense univariate polynomials over an exact field.

Coefficients are stored in ascending degree order with no trailing
zeros; the zero polynomial is the empty tuple.  Coefficients may be
`Fraction` or `RatFunc`; all arithmetic goes through the coefficient
operators, so one implementation serves both field instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadModulus, GcdOfZeros


@dataclass(frozen=True)
class Poly:
    """f = sum(coeffs[i] * X**i).

    >>> Poly((5, 1, 1)).degree
    2
    """

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_coeffs(cls, coeffs, field=None):
        if field is not None:
            coeffs = tuple(field.coerce(c) for c in coeffs)
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1] == 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return Poly(tuple(c * a for a in self.coeffs))

    def __call__(self, a):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def quo_rem(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        dlen = len(other.coeffs)
        inv_lc = 1 / other.lc if other.lc != 1 else None
        while len(rem) >= dlen:
            lead = rem[-1]
            if lead == 0:
                rem.pop()
                continue
            c = lead if inv_lc is None else lead * inv_lc
            k = len(rem) - dlen
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
            rem.pop()
        return Poly(tuple(q)), Poly(tuple(rem))

    def exact_div(self, other) -> "Poly":
        q, r = self.quo_rem(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalise the zero polynomial")
        if self.is_monic:
            return self
        inv = 1 / self.lc
        return self.scale(inv)


def x_poly(field) -> Poly:
    return Poly((field.zero, field.one))


def shift_compose(f: Poly, c) -> Poly:
    """f(X + c), expanded exactly via Horner in X + c."""
    if f.is_zero:
        return f
    one = f.lc / f.lc
    y = Poly((c * one, one))
    acc = Poly(())
    for a in reversed(f.coeffs):
        acc = acc * y + Poly((a,))
    return acc


@dataclass(frozen=True)
class BezoutCertificate:
    """u*f + v*g = d with d the monic gcd."""

    d: Poly
    u: Poly
    v: Poly


def gcd_bezout(f: Poly, g: Poly) -> BezoutCertificate:
    """Extended Euclid over the coefficient field.

    The cofactors satisfy deg u < deg g - deg d and deg v < deg f - deg d
    whenever both inputs are nonzero and the gcd is proper.
    """
    if f.is_zero and g.is_zero:
        raise GcdOfZeros("gcd of two zero polynomials")
    r0, s0, t0 = f, Poly((1,)), Poly(())
    r1, s1, t1 = g, Poly(()), Poly((1,))
    while not r1.is_zero:
        q, r2 = r0.quo_rem(r1)
        s2, t2 = s0 - q * s1, t0 - q * t1
        if not r2.is_zero and r2.lc != 1:
            # keep remainders monic; reins in coefficient growth over Q(t)
            inv = 1 / r2.lc
            r2, s2, t2 = r2.scale(inv), s2.scale(inv), t2.scale(inv)
        r0, r1 = r1, r2
        s0, s1 = s1, s2
        t0, t1 = t1, t2
    inv = 1 / r0.lc
    return BezoutCertificate(r0.scale(inv), s0.scale(inv), t0.scale(inv))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd without Bezout cofactors.

    Clears denominators and runs a primitive remainder sequence over
    the integers (integer polynomials in t for the rational function
    field), which avoids the coefficient blow-up of the fraction-field
    Euclid on large inputs.
    """
    if f.is_zero and g.is_zero:
        raise GcdOfZeros("gcd of two zero polynomials")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    from .valued_field import RatFunc

    if any(isinstance(c, RatFunc) for c in f.coeffs + g.coeffs):
        return _ratfunc_poly_gcd(f, g)
    return _fraction_poly_gcd(f, g)


def _fraction_poly_gcd(f: Poly, g: Poly) -> Poly:
    from math import gcd as igcd

    def clear(p):
        cs = [Fraction(c) for c in p.coeffs]
        scale = 1
        for c in cs:
            scale = scale * (c.denominator // igcd(scale, c.denominator))
        ints = [int(c * scale) for c in cs]
        cont = igcd(*ints)
        return [x // cont for x in ints] if cont > 1 else ints

    def primitive(v):
        cont = igcd(*v) if v else 0
        return [x // cont for x in v] if cont > 1 else v

    x, y = clear(f), clear(g)
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
        r = primitive(r)
        if len(r) >= len(y):
            x = r
        else:
            x, y = y, r
    return Poly(tuple(Fraction(c, x[-1]) for c in x))


def _ratfunc_poly_gcd(f: Poly, g: Poly) -> Poly:
    """Subresultant PRS over Z[t] after clearing denominators.

    The remainders are divided by the known subresultant factors, so no
    content gcds happen along the way; one content extraction cleans up
    the final value.
    """
    from .valued_field import RatFunc, _iadd, _idiv_exact, _igcd_poly, _imul

    def clear(p):
        # common denominator in Z[t] across the coefficients
        elems = [RatFunc._coerce(c) for c in p.coeffs]
        d = (1,)
        for e in elems:
            shared = _igcd_poly(d, e.den)
            d = _imul(d, _idiv_exact(e.den, shared))
        return [_imul(e.num, _idiv_exact(d, e.den)) for e in elems]

    def trim(rows):
        while rows and not rows[-1]:
            rows.pop()
        return rows

    def tpow(base, n):
        out = (1,)
        for _ in range(n):
            out = _imul(out, base)
        return out

    def xprem(big, small):
        # lc(small)^(deg big - deg small + 1) * big  mod small, over Z[t]
        rows = list(big)
        lead_small = small[-1]
        d_small = len(small) - 1
        extra = len(big) - len(small) + 1
        while rows and len(rows) - 1 >= d_small:
            lead = rows.pop()
            rows = [_imul(lead_small, c) for c in rows]
            k = len(rows) - d_small
            neg = tuple(-c for c in lead)
            for i in range(d_small):
                rows[k + i] = _iadd(rows[k + i], _imul(neg, small[i]))
            rows = trim(rows)
            extra -= 1
        if extra > 0:
            s = tpow(lead_small, extra)
            rows = [_imul(s, c) for c in rows]
        return rows

    def primitive(rows):
        c = ()
        for r in rows:
            c = _igcd_poly(c, r)
            if c == (1,):
                return rows
        return [_idiv_exact(r, c) if r else r for r in rows]

    x, y = trim(clear(f)), trim(clear(g))
    if len(x) < len(y):
        x, y = y, x
    gg, hh = (1,), (1,)
    while True:
        delta = len(x) - len(y)
        rem = xprem(x, y)
        if not rem:
            return _monic_over_ratfunc(primitive(y))
        divisor = _imul(gg, tpow(hh, delta))
        x, y = y, [_idiv_exact(c, divisor) if c else c for c in rem]
        gg = x[-1]
        if delta == 0:
            # h unchanged for equal-degree steps per h = h^(1-d) g^d
            continue
        num = tpow(gg, delta)
        hh = _idiv_exact(num, tpow(hh, delta - 1)) if delta > 1 else num


def _monic_over_ratfunc(rows):
    from .valued_field import RatFunc

    lc = rows[-1]
    return Poly(tuple(RatFunc(c, lc) for c in rows))


def exact_det(rows):
    """Determinant by fraction-free (Bareiss) elimination with pivoting."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            return 0 * m[k][k]
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = 0
        prev = m[k][k]
    return m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]


def resultant(f: Poly, g: Poly):
    """Res(f, g) as the Sylvester determinant."""
    if f.is_zero or g.is_zero:
        return 0
    n, m = f.degree, g.degree
    if n == 0 and m == 0:
        return f.lc / f.lc
    size = n + m
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([0] * i + fc + [0] * (size - i - len(fc)))
    for i in range(n):
        rows.append([0] * i + gc + [0] * (size - i - len(gc)))
    return exact_det(rows)


def discriminant(f: Poly):
    """(-1)^(d(d-1)/2) * Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(f, f.derivative())
    res = res / f.lc
    return -res if (d * (d - 1) // 2) % 2 else res


def difference_quotient(f: Poly):
    """Row polynomials g_j(Y) of (f(X) - f(Y)) / (X - Y).

    For dense coefficients these are exactly the tails of f: the j-th
    row is f.coeffs[j+1:].  The top row is 1 and g(Y, Y) = f'(Y).
    """
    if not f.is_monic or f.degree < 1:
        raise BadModulus("difference quotient needs a monic nonconstant polynomial")
    return tuple(Poly(f.coeffs[j + 1 :]) for j in range(f.degree))


def pretty(f: Poly, var: str = "X") -> str:
    """Human-readable form, e.g. `X^2 + X + 5`; inverse of the parser."""
    if f.is_zero:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if c == 0:
            continue
        negative = _is_negative_constant(c)
        mag = -c if negative else c
        token = _coeff_token(mag)
        if k == 0:
            term = token
        else:
            mono = var if k == 1 else f"{var}^{k}"
            term = mono if mag == 1 else f"{token}*{mono}"
        if not parts:
            parts.append("-" + term if negative else term)
        else:
            parts.append(("- " if negative else "+ ") + term)
    return " ".join(parts)


def _is_negative_constant(c):
    from .valued_field import RatFunc

    if isinstance(c, (int, Fraction)):
        return c < 0
    if isinstance(c, RatFunc):
        return len(c.num) == 1 and len(c.den) == 1 and c.num[0] < 0
    return False


def _coeff_token(c):
    from .valued_field import RatFunc, _fmt_qpoly

    if isinstance(c, RatFunc):
        if c.den == (1,):
            s = _fmt_qpoly(c.num)
        else:
            s = f"({_fmt_qpoly(c.num)})/({_fmt_qpoly(c.den)})"
    else:
        s = str(c)
    if any(ch in s[1:] for ch in "+-") or "/" in s:
        if not (s.startswith("(") and s.endswith(")")):
            s = f"({s})"
    return s
