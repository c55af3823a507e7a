"""Arithmetic in K[X]/(f) for monic f.

Provides reduction, multiplication matrices, trace and characteristic
polynomials, and an inversion routine that refines the modulus through
gcds instead of factoring.  The characteristic polynomial is computed
two ways, from the multiplication matrix (Faddeev-LeVerrier, valid in
characteristic zero) and through resultants; tests require agreement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadModulus, ZeroDivisorInversion
from .polynomial import Poly, gcd_bezout, resultant


@dataclass(frozen=True)
class QuotientAlgebra:
    modulus: Poly
    field: object

    def __post_init__(self):
        if self.modulus.degree < 1 or not self.modulus.is_monic:
            raise BadModulus("quotient modulus must be monic of degree >= 1")

    @property
    def dim(self) -> int:
        return self.modulus.degree

    @property
    def x(self) -> "AlgebraElement":
        return self.elem(Poly((self.field.zero, self.field.one)))

    @property
    def one(self) -> "AlgebraElement":
        return self.elem(Poly((self.field.one,)))

    @property
    def zero(self) -> "AlgebraElement":
        return self.elem(Poly(()))

    def elem(self, p) -> "AlgebraElement":
        if isinstance(p, AlgebraElement):
            p = p.rep
        if not isinstance(p, Poly):
            p = Poly((self.field.coerce(p),))
        if p.degree >= self.dim:
            p = p.quo_rem(self.modulus)[1]
        return AlgebraElement(p, self)


@dataclass(frozen=True)
class AlgebraElement:
    rep: Poly
    algebra: QuotientAlgebra

    def __add__(self, other):
        other = self.algebra.elem(other)
        return self.algebra.elem(self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = self.algebra.elem(other)
        return self.algebra.elem(self.rep - other.rep)

    def __neg__(self):
        return self.algebra.elem(-self.rep)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.elem(self.rep * other.rep)
        return self.algebra.elem(self.rep.scale(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use invert_refine for inverses")
        result = self.algebra.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.modulus == other.algebra.modulus and self.rep == other.rep
        return NotImplemented

    def __hash__(self):
        return hash((self.rep, self.algebra.modulus))


def reduce_mod(p: Poly, algebra: QuotientAlgebra) -> AlgebraElement:
    return algebra.elem(p)


def mult_matrix(b, algebra: QuotientAlgebra):
    """Matrix of multiplication by b in the basis 1, x, ..., x^(d-1)."""
    b = algebra.elem(b)
    d = algebra.dim
    cols = []
    cur = b.rep
    for _ in range(d):
        cols.append([cur.coeff(i) for i in range(d)])
        cur = (cur * Poly((algebra.field.zero, algebra.field.one))).quo_rem(
            algebra.modulus
        )[1]
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def trace(b, algebra: QuotientAlgebra):
    b = algebra.elem(b)
    d = algebra.dim
    x = Poly((algebra.field.zero, algebra.field.one))
    total = algebra.field.zero
    cur = b.rep
    for j in range(d):
        total = total + cur.coeff(j)
        if j < d - 1:
            cur = (cur * x).quo_rem(algebra.modulus)[1]
    return total


def _mat_mul(a, b, zero):
    n = len(a)
    out = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            aik = a[i][k]
            if aik == 0:
                continue
            row_b = b[k]
            row_o = out[i]
            for j in range(n):
                row_o[j] = row_o[j] + aik * row_b[j]
    return out


def _mat_trace(a, zero):
    total = zero
    for i in range(len(a)):
        total = total + a[i][i]
    return total


def charpoly(b, algebra: QuotientAlgebra) -> Poly:
    """Characteristic polynomial of multiplication by b, monic of degree d.

    Faddeev-LeVerrier recursion; the integer divisions are exact because
    both field instances have characteristic zero.
    """
    m = mult_matrix(b, algebra)
    d = algebra.dim
    zero, one = algebra.field.zero, algebra.field.one
    coeffs = [zero] * (d + 1)
    coeffs[d] = one
    bmat = m
    coeffs[d - 1] = -_mat_trace(bmat, zero)
    for k in range(2, d + 1):
        c = coeffs[d - k + 1]
        shifted = [
            [bmat[i][j] + c if i == j else bmat[i][j] for j in range(d)]
            for i in range(d)
        ]
        bmat = _mat_mul(m, shifted, zero)
        coeffs[d - k] = -(_mat_trace(bmat, zero) / k)
    return Poly(tuple(coeffs))


def charpoly_via_resultant(b, algebra: QuotientAlgebra) -> Poly:
    """Independent route: interpolate tau -> Res_X(f(X), tau - b(X))."""
    b = algebra.elem(b)
    d = algebra.dim
    field = algebra.field
    points = []
    for i in range(d + 1):
        tau = field.from_int(i)
        val = resultant(algebra.modulus, Poly((tau,)) - b.rep)
        points.append((tau, val))
    return _lagrange(points, field)


def _lagrange(points, field):
    total = Poly(())
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = Poly((field.one,))
        denom = field.one
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = num * Poly((-xj, field.one))
            denom = denom * (xi - xj)
        total = total + num.scale(yi / denom)
    return total


def evaluate_in_algebra(q: Poly, b: AlgebraElement) -> AlgebraElement:
    """q(b) by Horner inside the algebra."""
    acc = b.algebra.zero
    for c in reversed(q.coeffs):
        acc = acc * b + b.algebra.elem(c)
    return acc


def invert_refine(p, algebra: QuotientAlgebra, vanish_oracle):
    """Invert p after stripping modulus factors shared with p.

    The loop replaces the modulus e by e / gcd(p, e) until p is coprime
    to e; this is sound because the oracle certifies that p does not
    vanish at the distinguished root, which therefore stays a root of
    every refined modulus.  Returns the Bezout inverse modulo the final
    modulus together with that modulus.
    """
    pe = algebra.elem(p)
    rep = pe.rep
    if rep.is_zero or vanish_oracle(rep):
        raise ZeroDivisorInversion("element vanishes at the distinguished root")
    e = algebra.modulus
    while True:
        cert = gcd_bezout(rep, e)
        if cert.d.degree == 0:
            break
        e = e.exact_div(cert.d)
        if e.degree == 0:
            raise ZeroDivisorInversion(
                "refinement exhausted the modulus; vanish oracle was unsound"
            )
    refined = QuotientAlgebra(e, algebra.field) if e != algebra.modulus else algebra
    return refined.elem(cert.u), e
