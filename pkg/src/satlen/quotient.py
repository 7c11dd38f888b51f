"""Graded quotient rings R = S/J and ideal arithmetic via lifts to the ambient ring.

Ideal handles are immutable apart from a per-handle Groebner cache; do not
share a handle between concurrent tasks without external locking. Distinct
handles never alias.
"""

from __future__ import annotations

from . import config
from .groebner import eliminate, groebner, ideal_equal, normal_form
from .orders import GREVLEX, Order
from .poly import Field, Poly, PolyRing


def homogeneous_components(f: Poly) -> list[Poly]:
    """Split into homogeneous parts, highest degree first."""
    by_deg: dict[int, dict] = {}
    for m, c in f.terms.items():
        by_deg.setdefault(sum(m), {})[m] = c
    return [Poly(f.ring, by_deg[d]) for d in sorted(by_deg, reverse=True)]


def divide_exact(g: Poly, f: Poly, order: Order = GREVLEX) -> Poly:
    """Quotient g/f when f divides g exactly; raises otherwise."""
    if f.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = g.ring
    quotient = ring.zero()
    rest = g
    lm_f = f.lead_monomial(order)
    lc_f = f.lead_coeff(order)
    p = ring.field.characteristic
    inv = pow(lc_f, p - 2, p) if p else 1 / lc_f
    while not rest.is_zero:
        lm = rest.lead_monomial(order)
        if any(e < d for e, d in zip(lm, lm_f)):
            raise ValueError(f"{f} does not divide {g}")
        c = rest.lead_coeff(order) * inv
        t = ring.monomial(tuple(e - d for e, d in zip(lm, lm_f)), c)
        quotient = quotient + t
        rest = rest - t * f
    return quotient


class RingPresentation:
    """R = S/J for a polynomial ring S and a homogeneous ideal J (J empty means R = S)."""

    def __init__(self, field: Field, names, relations=()):
        self.field = field
        self.names = tuple(names)
        self.ambient = PolyRing(field, self.names)
        rels = []
        for r in relations:
            f = self.ambient.parse(r) if isinstance(r, str) else r
            if f.ring != self.ambient:
                raise ValueError("relation lives in a different ring")
            if f.is_zero:
                continue
            if not f.is_homogeneous or f.degree() < 1:
                raise ValueError(f"relation {f} must be homogeneous of positive degree")
            rels.append(f)
        self.relations = tuple(rels)
        self._gb_cache: dict[Order, tuple] = {}

    def j_basis(self, order: Order = GREVLEX) -> tuple:
        if order not in self._gb_cache:
            self._gb_cache[order] = groebner(self.relations, order)
        return self._gb_cache[order]

    def reduce(self, f: Poly) -> Poly:
        """Canonical representative of f modulo the defining ideal."""
        return normal_form(f, self.j_basis(), GREVLEX)

    def is_zero_in_ring(self, f: Poly) -> bool:
        return self.reduce(f).is_zero

    def parse(self, text: str) -> Poly:
        return self.ambient.parse(text)

    def var(self, name: str) -> Poly:
        return self.ambient.var(self.names.index(name))

    def ideal(self, gens) -> IdealHandle:
        polys = [self.parse(g) if isinstance(g, str) else g for g in gens]
        return IdealHandle(self, polys)

    def zero_ideal(self) -> IdealHandle:
        return IdealHandle(self, [])

    def unit_ideal(self) -> IdealHandle:
        return IdealHandle(self, [self.ambient.one()])

    def irrelevant_ideal(self) -> IdealHandle:
        return IdealHandle(self, self.ambient.gens())

    def dimension(self) -> int:
        from .hilbert import krull_dimension

        return krull_dimension(self.zero_ideal())

    def with_characteristic(self, p: int) -> RingPresentation:
        field = Field(p)
        ring = PolyRing(field, self.names)
        rels = [ring.from_terms(r.terms) for r in self.relations]
        return RingPresentation(field, self.names, rels)

    def __eq__(self, other):
        return (
            isinstance(other, RingPresentation)
            and self.field == other.field
            and self.names == other.names
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.field, self.names, self.relations))

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relations)
        return f"{self.ambient}/({rels})" if rels else str(self.ambient)


class IdealHandle:
    """Ideal of R given by homogeneous generator lifts in the ambient ring."""

    def __init__(self, ring: RingPresentation, gens):
        self.ring = ring
        kept = []
        for g in gens:
            if g.ring != ring.ambient:
                raise ValueError("generator lives in a different ring")
            if g.is_zero:
                continue
            if not g.is_homogeneous:
                raise ValueError(f"generator {g} is not homogeneous")
            kept.append(g)
        self.gens = tuple(kept)
        self._gb_cache: dict[Order, tuple] = {}

    @property
    def full_gens(self) -> tuple:
        return self.gens + self.ring.relations

    def gb(self, order: Order = GREVLEX) -> tuple:
        if order not in self._gb_cache:
            self._gb_cache[order] = groebner(self.full_gens, order)
        return self._gb_cache[order]

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self.gb(), GREVLEX).is_zero

    def contains_ideal(self, other: IdealHandle) -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def equal(self, other: IdealHandle) -> bool:
        self._check(other)
        return self.gb() == other.gb()

    def is_unit(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb[0].degree() == 0

    def _check(self, other: IdealHandle):
        if self.ring != other.ring:
            raise ValueError("ideals live in different rings")

    def _tidy(self, polys) -> IdealHandle:
        """New handle with generators reduced mod J, deduplicated, zero-free."""
        seen = set()
        out = []
        for g in polys:
            for part in homogeneous_components(g):
                r = self.ring.reduce(part)
                if r.is_zero:
                    continue
                key = frozenset(r.terms.items())
                if key not in seen:
                    seen.add(key)
                    out.append(r)
        out.sort(key=lambda f: (f.degree(), f.sorted_terms()[0][0]))
        return IdealHandle(self.ring, out)

    # -- arithmetic ---------------------------------------------------------

    def sum(self, other: IdealHandle) -> IdealHandle:
        self._check(other)
        return IdealHandle(self.ring, list(self.gens) + list(other.gens))

    __add__ = sum

    def product(self, other: IdealHandle) -> IdealHandle:
        self._check(other)
        return self._tidy(a * b for a in self.gens for b in other.gens)

    __mul__ = product

    def power(self, n: int) -> IdealHandle:
        if n < 0:
            raise ValueError("ideal power must be nonnegative")
        if n == 0:
            return self.ring.unit_ideal()
        out = self
        for _ in range(n - 1):
            out = out.product(self)
        return out

    __pow__ = power

    def intersect(self, other: IdealHandle) -> IdealHandle:
        """A cap B, via the auxiliary variable trick: eliminate s from s*A + (1-s)*B."""
        self._check(other)
        cut = _raw_intersect(self.ring.ambient, self.full_gens, other.full_gens)
        return self._tidy(cut)

    def colon(self, f: Poly) -> IdealHandle:
        """(A : f) = {g in R : g*f in A}, computed as (1/f)(A cap fS) in the ambient ring."""
        if f.ring != self.ring.ambient:
            raise ValueError("colon element lives in a different ring")
        if not f.is_homogeneous:
            raise ValueError("colon by an inhomogeneous element")
        if self.ring.is_zero_in_ring(f):
            raise ValueError("colon by an element that is zero in the ring")
        meet = _raw_intersect(self.ring.ambient, self.full_gens, [f])
        quotients = []
        for g in meet:
            for part in homogeneous_components(g):
                quotients.append(divide_exact(part, f))
        return self._tidy(quotients)

    def colon_ideal(self, other: IdealHandle) -> IdealHandle:
        """(A : B) as the intersection of the colons by B's generators."""
        self._check(other)
        live = [g for g in other.gens if not self.ring.is_zero_in_ring(g)]
        if not live:
            return self.ring.unit_ideal()
        result = self.colon(live[0])
        for g in live[1:]:
            result = result.intersect(self.colon(g))
        return result

    def saturate(self, other: IdealHandle | None = None) -> tuple[IdealHandle, int]:
        """Fixed point of repeated colon by ``other`` (default: the irrelevant ideal).

        Returns the saturation and the first index where the chain stabilizes.
        """
        other = other if other is not None else self.ring.irrelevant_ideal()
        self._check(other)
        current = self
        for k in range(config.saturation_cap() + 1):
            bigger = current.colon_ideal(other)
            if bigger.equal(current):
                return current, k
            current = bigger
        raise RuntimeError(f"saturation did not stabilize within {config.saturation_cap()} steps")

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _fresh_name(names) -> str:
    base = "s@"
    k = 0
    while f"{base}{k}" in names:
        k += 1
    return f"{base}{k}"


def _lift_front(ext: PolyRing, g: Poly) -> Poly:
    return Poly(ext, {(0,) + m: c for m, c in g.terms.items()})


def _raw_intersect(ambient: PolyRing, gens_a, gens_b) -> list[Poly]:
    """Generators of the intersection of two ideals of the ambient polynomial ring."""
    if not gens_a or not gens_b:
        return []
    ext = ambient.extend_front((_fresh_name(ambient.names),))
    s = ext.var(0)
    one = ext.one()
    raised = [s * _lift_front(ext, g) for g in gens_a]
    raised += [(one - s) * _lift_front(ext, g) for g in gens_b]
    return eliminate(raised, 1)


def ideal_equal_gens(a, b, order: Order = GREVLEX) -> bool:
    return ideal_equal(a, b, order)
