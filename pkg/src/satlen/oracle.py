"""Brute-force degree-slice oracle over F_p.

Validates the Groebner/Hilbert path by independent linear algebra: the
degree-d slice of S/I is the full monomial space minus the row space of all
monomial multiples of the generators. Single-monomial generators are handled
by deleting the columns they cover, which keeps the fixture slices small.

Test-support machinery: results carry empirical stabilization checks
(doubled torsion exponent, trailing zero slices), not certificates.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .linalg import rank_mod, rref_mod
from .poly import Poly
from .quotient import IdealHandle


class OracleStabilizationError(RuntimeError):
    """The brute-force computation did not stabilize within its caps."""


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[tuple, ...]:
    if nvars == 1:
        return ((d,),)
    out = []
    for i in range(d, -1, -1):
        out.extend((i,) + rest for rest in monomials_of_degree(nvars - 1, d - i))
    return tuple(out)


def _split_generators(gens) -> tuple[list[tuple], list[Poly]]:
    mono, rest = [], []
    for g in gens:
        if g.is_zero:
            continue
        if len(g.terms) == 1:
            mono.append(next(iter(g.terms)))
        else:
            rest.append(g)
    return mono, rest


def _killed(m: tuple, mono_gens: list[tuple]) -> bool:
    return any(all(x <= y for x, y in zip(a, m)) for a in mono_gens)


class SliceSpace:
    """Degree-slice data for one ideal of S: surviving monomials and a row basis."""

    def __init__(self, gens, nvars: int, p: int):
        if p == 0:
            raise ValueError("the degree-slice oracle works over a prime field only")
        self.nvars = nvars
        self.p = p
        self.mono_gens, self.poly_gens = _split_generators(gens)
        self._cache: dict[int, tuple[list[tuple], dict, np.ndarray, list[int]]] = {}

    def degree_data(self, d: int):
        """(surviving monomials, index map, rref rows, pivot columns) at degree d."""
        if d in self._cache:
            return self._cache[d]
        surv = [m for m in monomials_of_degree(self.nvars, d) if not _killed(m, self.mono_gens)]
        index = {m: i for i, m in enumerate(surv)}
        rows = []
        for g in self.poly_gens:
            dg = g.degree()
            if dg > d:
                continue
            for mult in monomials_of_degree(self.nvars, d - dg):
                row = np.zeros(len(surv), dtype=np.int64)
                alive = False
                for m, c in g.terms.items():
                    shifted = tuple(a + b for a, b in zip(m, mult))
                    j = index.get(shifted)
                    if j is not None:
                        row[j] = c % self.p
                        alive = True
                if alive:
                    rows.append(row)
        mat = np.array(rows, dtype=np.int64) if rows else np.zeros((0, len(surv)), dtype=np.int64)
        rref, pivots = rref_mod(mat, self.p)
        out = (surv, index, rref, pivots)
        self._cache[d] = out
        return out

    def slice_dim(self, d: int) -> int:
        surv, _, _, pivots = self.degree_data(d)
        return len(surv) - len(pivots)

    def max_gen_degree(self) -> int:
        degs = [sum(m) for m in self.mono_gens] + [g.degree() for g in self.poly_gens]
        return max(degs, default=0)


def slice_dimension(handle: IdealHandle, d: int) -> int:
    """dim_k of (S/(I_lift + J))_d by rank arithmetic."""
    space = _space_for(handle)
    return space.slice_dim(d)


def _space_for(handle: IdealHandle) -> SliceSpace:
    return SliceSpace(handle.full_gens, handle.ring.ambient.nvars, handle.ring.field.characteristic)


def quotient_length_oracle(handle: IdealHandle, dmax: int = 80) -> int | None:
    """Sum of slice dimensions; a zero slice certifies termination (None = infinite)."""
    space = _space_for(handle)
    total = 0
    for d in range(dmax + 1):
        q = space.slice_dim(d)
        if q == 0:
            return total
        total += q
    return None


def pair_length_oracle(inner: IdealHandle, outer: IdealHandle, dmax: int = 80) -> int | None:
    """Length of outer/inner by slice differences; stops once differences vanish
    past the generator degrees."""
    si = _space_for(inner)
    so = _space_for(outer)
    gen_bound = max(si.max_gen_degree(), so.max_gen_degree())
    total = 0
    for d in range(dmax + 1):
        diff = si.slice_dim(d) - so.slice_dim(d)
        if diff < 0:
            raise ValueError("slice dimensions are not nested; is inner inside outer?")
        total += diff
        if diff == 0 and d >= gen_bound:
            return total
    return None


def _torsion_slice(space: SliceSpace, d: int, s: int) -> int:
    """dim of the degree-d part of {f : x_i^s f in I for every i} modulo I_d."""
    surv_d, _, _, pivots_d = space.degree_data(d)
    if not surv_d:
        return 0
    surv_up, index_up, rref_up, pivots_up = space.degree_data(d + s)
    nonpivot = [j for j in range(len(surv_up)) if j not in set(pivots_up)]
    np_index = {j: i for i, j in enumerate(nonpivot)}
    pivot_row = {c: k for k, c in enumerate(pivots_up)}
    blocks = []
    for i in range(space.nvars):
        block = np.zeros((len(nonpivot), len(surv_d)), dtype=np.int64)
        used = False
        for col, u in enumerate(surv_d):
            w = tuple(e + (s if k == i else 0) for k, e in enumerate(u))
            j = index_up.get(w)
            if j is None:
                continue  # x_i^s * u fell into the monomial part of the ideal
            if j in pivot_row:
                # residual of the unit vector after clearing its pivot
                residual = -rref_up[pivot_row[j]]
                for jj in nonpivot:
                    v = residual[jj] % space.p
                    if v:
                        block[np_index[jj], col] = v
                        used = True
            else:
                block[np_index[j], col] = 1
                used = True
        if used:
            blocks.append(block)
    if not blocks:
        kernel_dim = len(surv_d)
    else:
        kernel_dim = len(surv_d) - rank_mod(np.vstack(blocks), space.p)
    return kernel_dim - len(pivots_d)


def torsion_length(handle: IdealHandle, s: int, dmax: int = 60, zero_window: int = 3) -> int:
    """Sum over degrees of the x_i^s-torsion slice dimensions of S/(I_lift + J)."""
    space = _space_for(handle)
    bound = space.max_gen_degree()
    total = 0
    zero_run = 0
    for d in range(dmax + 1):
        t = _torsion_slice(space, d, s)
        total += t
        if t == 0 and d >= bound:
            zero_run += 1
            if zero_run >= zero_window:
                return total
        else:
            zero_run = 0
    raise OracleStabilizationError(f"torsion slices did not vanish by degree {dmax}")


def h0_oracle(handle: IdealHandle, degree_cap: int | None = None, dmax: int = 60) -> int:
    """Length of the m-torsion submodule of S/(I_lift + J), by stabilized slices.

    With an explicit ``degree_cap`` the torsion exponent is the cap and the
    doubled cap must agree; otherwise the exponent doubles from 2 until two
    consecutive rounds agree.
    """
    if degree_cap is not None:
        a = torsion_length(handle, degree_cap, dmax)
        b = torsion_length(handle, 2 * degree_cap, dmax)
        if a != b:
            raise OracleStabilizationError(
                f"torsion count changed between exponent {degree_cap} and {2 * degree_cap}"
            )
        return a
    prev = None
    s = 2
    while s <= 128:
        val = torsion_length(handle, s, dmax)
        if val == prev:
            return val
        prev = val
        s *= 2
    raise OracleStabilizationError("torsion exponent doubling did not stabilize by 128")
