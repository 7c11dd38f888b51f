"""Hilbert series numerators, Krull dimension, and exact lengths of graded quotients.

Every length here is computed by exact integer arithmetic on Hilbert
numerators N(t) with HS = N(t)/(1-t)^n, never by summing dimensions until
they "look stable".
"""

from __future__ import annotations

from .orders import GREVLEX, Order
from .quotient import IdealHandle

EMPTY = -1  # dimension marker for the unit ideal


def _minimalize(mons: list[tuple]) -> list[tuple]:
    out: list[tuple] = []
    for m in sorted(mons, key=sum):
        if not any(all(x <= y for x, y in zip(g, m)) for g in out):
            out.append(m)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    return _poly_sub(a, [-y for y in b])


def _one_minus_t_pow(d: int) -> list[int]:
    out = [0] * (d + 1)
    out[0] = 1
    out[d] -= 1
    return out


def _shift(a: list[int], d: int) -> list[int]:
    return [0] * d + a


def numerator_of_monomial_ideal(mons: list[tuple]) -> list[int]:
    """N(t) with HS(S/(mons)) = N(t)/(1-t)^n, by the pivot recursion."""
    mons = _minimalize([tuple(m) for m in mons])
    if any(sum(m) == 0 for m in mons):
        return [0]
    mixed = [m for m in mons if sum(1 for e in m if e) > 1]
    if len(mixed) == 0:
        out = [1]
        for m in mons:
            out = _poly_mul(out, _one_minus_t_pow(sum(m)))
        return out
    if len(mixed) == 1:
        m0 = mixed[0]
        pure = [m for m in mons if m != m0]
        colon = _minimalize([tuple(max(e - f, 0) for e, f in zip(m, m0)) for m in pure])
        return _poly_sub(
            numerator_of_monomial_ideal(pure),
            _shift(numerator_of_monomial_ideal(colon), sum(m0)),
        )
    nvars = len(mons[0])
    counts = [sum(1 for m in mixed if m[j]) for j in range(nvars)]
    j = counts.index(max(counts))
    pivot = tuple(1 if i == j else 0 for i in range(nvars))
    left = [m for m in mons if m[j] == 0] + [pivot]
    right = [tuple(e - p if e >= p else e for e, p in zip(m, pivot)) for m in mons]
    return _poly_add(
        numerator_of_monomial_ideal(left),
        _shift(numerator_of_monomial_ideal(right), 1),
    )


def lead_monomials(handle: IdealHandle, order: Order = GREVLEX, ambient: bool = False) -> list[tuple]:
    from .groebner import groebner

    basis = groebner(handle.gens, order) if ambient else handle.gb(order)
    return [g.lead_monomial(order) for g in basis]


def hilbert_numerator(handle: IdealHandle, ambient: bool = False, order: Order = GREVLEX) -> list[int]:
    """Integer numerator of HS(S/(I_lift + J)) over (1-t)^nvars.

    With ``ambient`` the relations are left out and the ideal is taken in S.
    """
    for g in handle.gens:
        if not g.is_homogeneous:
            raise ValueError(f"generator {g} is not homogeneous")
    return numerator_of_monomial_ideal(lead_monomials(handle, order, ambient))


def _divide_by_one_minus_t(coeffs: list[int]) -> list[int] | None:
    """Quotient by (1-t) when it divides exactly, else None."""
    if sum(coeffs) != 0:
        return None
    out = []
    acc = 0
    for c in coeffs[:-1]:
        acc += c
        out.append(acc)
    # exactness: acc + coeffs[-1] telescopes to sum(coeffs) = 0
    return out if out else [0]


def _pole_order(coeffs: list[int], nvars: int) -> tuple[int, list[int]]:
    """(pole order at t=1 of coeffs/(1-t)^nvars, residual polynomial part)."""
    remaining = nvars
    cur = coeffs
    while remaining > 0:
        nxt = _divide_by_one_minus_t(cur)
        if nxt is None:
            return remaining, cur
        cur = nxt
        remaining -= 1
    return 0, cur


def krull_dimension(handle: IdealHandle) -> int:
    """Dimension of S/(I_lift + J); EMPTY (-1) for the unit ideal."""
    num = hilbert_numerator(handle)
    if num == [0]:
        return EMPTY
    pole, _ = _pole_order(num, handle.ring.ambient.nvars)
    return pole


def length_from_numerator(num: list[int], nvars: int) -> int | None:
    """Total length when the series is a polynomial; None when infinite."""
    pole, residue = _pole_order(num, nvars)
    if pole > 0:
        return None
    return sum(residue)


def length_quotient(handle: IdealHandle, order: Order = GREVLEX) -> int | None:
    """Length of S/(I_lift + J); None when the quotient has positive dimension."""
    return length_from_numerator(hilbert_numerator(handle, order=order), handle.ring.ambient.nvars)


def length_pair(inner: IdealHandle, outer: IdealHandle, order: Order = GREVLEX) -> int | None:
    """Length of outer/inner for nested ideals; None when infinite.

    Inclusion is verified by reducing inner's generators against outer's basis.
    """
    inner._check(outer)
    if not outer.contains_ideal(inner):
        raise ValueError("length_pair requires inner to be contained in outer")
    n_in = hilbert_numerator(inner, order=order)
    n_out = hilbert_numerator(outer, order=order)
    return length_from_numerator(_poly_sub(n_in, n_out), inner.ring.ambient.nvars)
