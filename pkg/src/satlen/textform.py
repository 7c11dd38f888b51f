"""Canonical text form for polynomials.

Grammar: integer (or p/q over the rationals) coefficients, declared variable
names, ``^`` for powers, ``*`` for products (juxtaposition also accepted),
``+``/``-`` and parentheses. Printing sorts terms by the active order and
always writes explicit ``*``, e.g. ``x^2 - y*v``.
"""

from __future__ import annotations

from fractions import Fraction

from .orders import GREVLEX, Order


class PolyParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1} in {text!r}")


class _Parser:
    def __init__(self, ring, text: str):
        self.ring = ring
        self.text = text
        self.pos = 0
        # longest match first so that e.g. "x1" beats "x"
        self.names = sorted(ring.names, key=len, reverse=True)

    def error(self, message: str):
        raise PolyParseError(self.text, self.pos, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse(self):
        result = self.expr()
        if self.peek():
            self.error("unexpected trailing input")
        return result

    def expr(self):
        sign = 1
        while True:
            if self.take("-"):
                sign = -sign
            elif not self.take("+"):
                break
        result = self.term() * sign
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                result = result + self.term()
            elif ch == "-":
                self.pos += 1
                result = result - self.term()
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                result = result * self.factor()
            elif ch == "/":
                self.pos += 1
                divisor = self.factor()
                result = self._divide(result, divisor)
            elif ch.isdigit() or ch.isalpha() or ch == "(" or ch == "_":
                result = result * self.factor()  # juxtaposition
            else:
                return result

    def _divide(self, num, den):
        if len(den.terms) != 1 or any(den.lead_monomial()):
            self.error("division only by a nonzero constant")
        c = den.lead_coeff()
        field = self.ring.field
        if field.characteristic:
            inv = pow(c, field.characteristic - 2, field.characteristic)
        else:
            inv = Fraction(1) / c
        return num * self.ring.const(inv)

    def factor(self):
        base = self.atom()
        if self.take("^"):
            exp = self.integer()
            return base**exp
        return base

    def atom(self):
        self.skip_ws()
        if self.take("("):
            inner = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch.isdigit():
            return self.ring.const(self.integer())
        for name in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return self.ring.var(self.ring.names.index(name))
        self.error("expected a number, variable, or '('")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])


def parse_poly(ring, text: str):
    return _Parser(ring, text).parse()


def _coeff_repr(c, characteristic: int):
    """Signed representative: small negatives print as '-' over F_p."""
    if characteristic and c > characteristic // 2:
        return c - characteristic
    return c


def format_poly(poly, order: Order = GREVLEX) -> str:
    if poly.is_zero:
        return "0"
    names = poly.ring.names
    p = poly.ring.field.characteristic
    pieces = []
    for m, c in poly.sorted_terms(order):
        c = _coeff_repr(c, p)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, m) if e
        ]
        if not factors or mag != 1:
            factors.insert(0, str(mag))
        pieces.append((sign, "*".join(factors)))
    head_sign, head = pieces[0]
    text = f"-{head}" if head_sign == "-" else head
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
