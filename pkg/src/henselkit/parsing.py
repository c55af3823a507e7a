"""Text formats for field elements and polynomials.

Polynomials are written either as comma-separated coefficients in
ascending degree (`5,1,1` for X^2 + X + 5) or as expressions in X
(`X^2 + X + 5`); field elements are integer fractions (`3/10`) or, for
the rational function field, expressions in t (`t^2*(1+t)/(2+t)`).
The grammar is +, -, *, /, ^ and parentheses over integers and the
variables, evaluated exactly; division must come out exact.
"""

from __future__ import annotations

import re

from .errors import InputError
from .polynomial import Poly
from .valued_field import TAdicField

_TOKEN = re.compile(r"\s*(\d+|[tX]|\*\*|[-+*/^()])")


def _tokenize(s: str):
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip() == "":
                break
            raise InputError(f"unexpected character {s[pos:].lstrip()[0]!r} at column {pos + 1}")
        tok = m.group(1)
        tokens.append("^" if tok == "**" else tok)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, field, allow_x):
        self.tokens = tokens
        self.i = 0
        self.field = field
        self.allow_x = allow_x

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> Poly:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else self._divide(value, rhs)
        return value

    def unary(self) -> Poly:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise InputError("exponent must be an integer")
            n = sign * int(tok)
            if n >= 0:
                return base**n
            if base.degree != 0:
                raise InputError("negative exponent on a non-constant")
            c = base.coeff(0)
            if c == 0:
                raise InputError("negative exponent on zero")
            return Poly((self.field.one / c,)) ** (-n)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok is None:
            raise InputError("unexpected end of expression")
        if tok.isdigit():
            return Poly((self.field.from_int(int(tok)),))
        if tok == "t":
            if not isinstance(self.field, TAdicField):
                raise InputError("symbol 't' only exists in the tadic field")
            return Poly((self.field.uniformizer,))
        if tok == "X":
            if not self.allow_x:
                raise InputError("polynomial variable 'X' not allowed here")
            return Poly((self.field.zero, self.field.one))
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise InputError("missing closing parenthesis")
            return value
        raise InputError(f"unexpected token {tok!r}")

    def _divide(self, a: Poly, b: Poly) -> Poly:
        if b.is_zero:
            raise InputError("division by zero")
        if b.degree == 0:
            return a.scale(self.field.one / b.coeff(0))
        q, r = a.quo_rem(b)
        if not r.is_zero:
            raise InputError("division of polynomials must be exact")
        return q


def _parse_expression(s: str, field, allow_x: bool) -> Poly:
    tokens = _tokenize(s)
    if not tokens:
        raise InputError("empty expression")
    parser = _Parser(tokens, field, allow_x)
    value = parser.expr()
    if parser.peek() is not None:
        raise InputError(f"trailing input starting at token {parser.peek()!r}")
    return value


def parse_element(s: str, field):
    """Parse one field element."""
    p = _parse_expression(s, field, allow_x=False)
    return field.coerce(p.coeff(0)) if not p.is_zero else field.zero


def parse_polynomial(s: str, field) -> Poly:
    """Parse a polynomial, sniffing between the CSV and expression forms."""
    s = s.strip()
    if "X" in s:
        return _parse_expression(s, field, allow_x=True)
    coeffs = []
    for i, token in enumerate(s.split(",")):
        token = token.strip()
        try:
            coeffs.append(parse_element(token, field))
        except InputError as exc:
            raise InputError(f"bad coefficient at token {i + 1} ({token!r}): {exc}") from None
    return Poly(tuple(coeffs))
