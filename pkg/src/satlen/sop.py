"""Systems of parameters: grid fits of power-quotient lengths, d-sequence and
standardness tests, and parameter multiplicities on one-dimensional quotients.

The grid fit solves for integers lambda_0..lambda_d with
len(R/(x_1^{n_1},...,x_d^{n_d})) = sum_i n_1...n_i lambda_i from d+1
unitriangular corner points, then verifies every tuple of a full grid
exactly. A finite grid cannot prove the identity for all tuples; reports
state the verified range and any violation carries a concrete witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hilbert import krull_dimension, length_quotient
from .poly import Poly
from .quotient import IdealHandle, RingPresentation
from .satseq import _colon_or_unit, _powers


@dataclass
class ApsopFit:
    """Result of fitting lambda_0..lambda_d over a verification grid."""

    ok: bool
    lambdas: tuple[int, ...] | None
    fit_points: list[tuple[int, ...]]
    verify_max: int
    first_violation: dict | None = None
    reason: str = ""

    @property
    def dimension(self) -> int:
        return len(self.fit_points[0]) if self.fit_points else 0


def power_quotient_length(
    ring: RingPresentation, elems: list[Poly], exponents, modulus: IdealHandle | None = None
) -> int | None:
    """Length of R/(modulus + (e_1^{n_1}, ..., e_k^{n_k}))."""
    gens = [e**n for e, n in zip(elems, exponents)]
    handle = ring.ideal(gens)
    if modulus is not None:
        handle = handle.sum(modulus)
    return length_quotient(handle)


def is_sop(ring: RingPresentation, elems: list[Poly], modulus: IdealHandle | None = None) -> bool:
    """True iff elems form a system of parameters of R/modulus."""
    base = modulus if modulus is not None else ring.zero_ideal()
    d = krull_dimension(base)
    if len(elems) != d:
        return False
    if any(ring.is_zero_in_ring(e) or not e.is_homogeneous for e in elems):
        return False
    return length_quotient(base.sum(ring.ideal(elems))) is not None


def _fit_points(d: int) -> list[tuple[int, ...]]:
    points = [(1,) * d]
    for i in range(1, d + 1):
        points.append(tuple(2 if k < i else 1 for k in range(d)))
    return points


def _predicted(lambdas, exponents) -> int:
    total = 0
    prod = 1
    for v, lam in enumerate(lambdas):
        if v > 0:
            prod *= exponents[v - 1]
        total += prod * lam
    return total


def fit_apsop(
    ring: RingPresentation,
    elems: list[Poly],
    verify_max: int = 3,
    modulus: IdealHandle | None = None,
) -> ApsopFit:
    """Fit the lambda vector from the corner points, then verify the full grid."""
    d = len(elems)
    points = _fit_points(d)
    lengths = []
    for pt in points:
        val = power_quotient_length(ring, elems, pt, modulus)
        if val is None:
            raise ValueError(f"infinite length at exponents {pt}: not a system of parameters")
        lengths.append(val)
    # telescoping: lengths[i] - lengths[i-1] = 2^(i-1) * sum_{v >= i} lambda_v
    suffix = [0] * (d + 2)
    for i in range(d, 0, -1):
        delta = lengths[i] - lengths[i - 1]
        q, r = divmod(delta, 2 ** (i - 1))
        if r:
            return ApsopFit(False, None, points, verify_max, reason=f"non-integral fit at point {points[i]}")
        suffix[i] = q
    lambdas = [lengths[0] - suffix[1]]
    for i in range(1, d + 1):
        lambdas.append(suffix[i] - suffix[i + 1])
    lambdas = tuple(lambdas)
    for pt in itertools.product(range(1, verify_max + 1), repeat=d):
        actual = power_quotient_length(ring, elems, pt, modulus)
        expected = _predicted(lambdas, pt)
        if actual != expected:
            witness = {"exponents": pt, "expected": expected, "actual": actual}
            return ApsopFit(False, lambdas, points, verify_max, first_violation=witness)
    return ApsopFit(True, lambdas, points, verify_max)


def is_standard_sop(
    ring: RingPresentation, elems: list[Poly], verify_max: int = 3
) -> bool:
    """True iff the grid fit succeeds with all interior lambdas zero."""
    fit = fit_apsop(ring, elems, verify_max)
    if not fit.ok:
        return False
    return all(v == 0 for v in fit.lambdas[1:-1])


def is_d_sequence(
    ring: RingPresentation, elems: list[Poly], modulus: IdealHandle | None = None
) -> bool:
    """Colon condition (x_1..x_{i-1}) : x_i x_j = (x_1..x_{i-1}) : x_j on R/modulus."""
    if not elems:
        raise ValueError("empty sequence")
    base_mod = modulus if modulus is not None else ring.zero_ideal()
    s = len(elems)
    for i in range(1, s + 1):
        base = base_mod.sum(ring.ideal(elems[: i - 1]))
        for j in range(i, s + 1):
            lhs = _colon_or_unit(base, elems[i - 1] * elems[j - 1])
            rhs = _colon_or_unit(base, elems[j - 1])
            if not lhs.equal(rhs):
                return False
    return True


def check_apsop_persistence(
    ring: RingPresentation,
    sop: list[Poly],
    i: int,
    j: int,
    n_max: int,
    verify_max: int = 2,
) -> list[dict]:
    """Fit x_1..x_i, x_{j+1}^2..x_d^2 on R/I^n for n = 1..n_max, I = (x_{i+1}..x_j)."""
    d = len(sop)
    if not (0 <= i < j <= d):
        raise ValueError(f"need 0 <= i < j <= {d}")
    seq = list(sop[:i]) + [e * e for e in sop[j:]]
    ideal = ring.ideal(sop[i:j])
    out = []
    powers = _powers(ideal, n_max - 1) if n_max >= 1 else []
    for n in range(1, n_max + 1):
        fit = fit_apsop(ring, seq, verify_max, modulus=powers[n - 1])
        out.append({"n": n, "ok": fit.ok, "lambdas": fit.lambdas})
    return out


def param_multiplicity(ring: RingPresentation, prime_gens, a: Poly) -> int:
    """Multiplicity of the parameter a on the one-dimensional quotient R/p:
    the slope of n -> len(R/(p + a^n))."""
    prime = ring.ideal(prime_gens) if not isinstance(prime_gens, IdealHandle) else prime_gens
    if krull_dimension(prime) != 1:
        raise ValueError("the quotient by the prime must be one-dimensional")
    fit = fit_apsop(ring, [a], verify_max=3, modulus=prime)
    if not fit.ok:
        raise ValueError(f"multiplicity fit failed: {fit.reason or fit.first_violation}")
    return fit.lambdas[1]
