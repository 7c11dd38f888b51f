"""Exact multivariate polynomials over F_p or the rationals in a standard-graded ring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import config
from .backend import kernel_for
from .orders import GREVLEX, Order


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Prime field F_p, or the rationals when characteristic is 0."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p >= 2**31 or not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    def coerce(self, c):
        if self.characteristic:
            return int(c) % self.characteristic
        return Fraction(c)

    def __str__(self):
        p = self.characteristic
        return "QQ" if p == 0 else f"GF({p})"


QQ = Field(0)
DEFAULT_FIELD = Field(32003)


@dataclass(frozen=True)
class PolyRing:
    """Standard-graded polynomial ring: every variable has degree 1."""

    field: Field
    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = self.field.coerce(c)
        if not c:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, i: int) -> Poly:
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {exps: self.field.coerce(1)})

    def gens(self) -> list[Poly]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, c=1) -> Poly:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(c)
        return Poly(self, {exps: c} if c else {})

    def from_terms(self, terms: dict) -> Poly:
        out = {}
        for m, c in terms.items():
            c = self.field.coerce(c)
            if c:
                out[tuple(m)] = c
        return Poly(self, out)

    def parse(self, text: str) -> Poly:
        from .textform import parse_poly

        return parse_poly(self, text)

    def extend_front(self, extra: tuple[str, ...]) -> PolyRing:
        """Ring with new degree-1 variables prepended (for elimination tricks)."""
        return PolyRing(self.field, tuple(extra) + self.names)

    def drop_front(self, k: int) -> PolyRing:
        if not 1 <= k <= self.nvars - 1:
            raise ValueError(f"cannot drop {k} of {self.nvars} variables")
        return PolyRing(self.field, self.names[k:])

    def with_field(self, field: Field) -> PolyRing:
        return PolyRing(field, self.names)

    def __str__(self):
        return f"{self.field}[{','.join(self.names)}]"


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def lead_monomial(self, order: Order = GREVLEX) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self.terms, key=order.key)

    def lead_coeff(self, order: Order = GREVLEX):
        return self.terms[self.lead_monomial(order)]

    def sorted_terms(self, order: Order = GREVLEX) -> list:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.coerce(0))

    def monic(self, order: Order = GREVLEX) -> Poly:
        if not self.terms:
            return self
        p = self.ring.field.characteristic
        k = kernel_for(p)
        return Poly(self.ring, k.monic(self.terms, p, order.kind, order.block))

    def _check(self, other: Poly):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        self._check(other)
        p = self.ring.field.characteristic
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Poly(self.ring, out)

    def __neg__(self) -> Poly:
        p = self.ring.field.characteristic
        return Poly(self.ring, {m: (p - c if p else -c) for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        self._check(other)
        p = self.ring.field.characteristic
        k = kernel_for(p)
        return Poly(self.ring, k.mul(self.terms, other.terms, p, config.degree_cap()))

    def __rmul__(self, other) -> Poly:
        return self * other

    def __radd__(self, other) -> Poly:
        return self + other

    def __rsub__(self, other) -> Poly:
        return -self + other

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from .textform import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"<{self} over {self.ring}>"
