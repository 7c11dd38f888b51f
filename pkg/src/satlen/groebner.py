"""Reduced Groebner bases, division with remainder, ideal equality, elimination."""

from __future__ import annotations

from .backend import kernel_for
from .orders import GREVLEX, Order, elimination
from .poly import Poly, PolyRing


def _common_ring(polys) -> PolyRing:
    rings = {f.ring for f in polys}
    if len(rings) != 1:
        raise ValueError(f"polynomials live in different rings: {sorted(map(str, rings))}")
    return rings.pop()


def groebner(gens, order: Order = GREVLEX) -> tuple[Poly, ...]:
    """Reduced Groebner basis; deterministic (the reduced basis is unique)."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return ()
    ring = _common_ring(gens)
    p = ring.field.characteristic
    k = kernel_for(p)
    basis = k.buchberger([g.terms for g in gens], p, order.kind, order.block)
    return tuple(Poly(ring, terms) for terms in basis)


def normal_form(f: Poly, basis, order: Order = GREVLEX) -> Poly:
    """Remainder of f on division by basis (no term divisible by a basis lead)."""
    basis = [g for g in basis if not g.is_zero]
    if not basis:
        return f
    ring = _common_ring([f, *basis])
    p = ring.field.characteristic
    k = kernel_for(p)
    terms = k.normal_form(f.terms, [g.terms for g in basis], p, order.kind, order.block)
    return Poly(ring, terms)


def ideal_member(f: Poly, basis, order: Order = GREVLEX) -> bool:
    return normal_form(f, basis, order).is_zero


def ideal_equal(gens_a, gens_b, order: Order = GREVLEX) -> bool:
    """True iff both generator lists have the same reduced Groebner basis."""
    return groebner(gens_a, order) == groebner(gens_b, order)


def eliminate(gens, drop_count: int) -> list[Poly]:
    """Generators of the intersection with the subring omitting the first variables.

    Computes a Groebner basis under the block order that eliminates the front
    block and keeps the elements free of those variables, rewritten in the
    smaller ring.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return []
    ring = _common_ring(gens)
    if not 1 <= drop_count <= ring.nvars - 1:
        raise ValueError(f"drop_count {drop_count} out of range for {ring.nvars} variables")
    basis = groebner(gens, elimination(drop_count))
    small = ring.drop_front(drop_count)
    out = []
    for g in basis:
        if all(not any(m[:drop_count]) for m in g.terms):
            out.append(Poly(small, {m[drop_count:]: c for m, c in g.terms.items()}))
    return out
