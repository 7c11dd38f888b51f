"""Length sequences of saturated ideal powers and the colon/saturation identities.

The central function maps n to the length of the m-torsion of R/I^(n+1),
computed as length of sat(I^(n+1))/I^(n+1) with a certified saturation fixed
point. Identity checkers verify both inclusions via full ideal equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hilbert import length_pair
from .oracle import h0_oracle
from .orders import GREVLEX, Order
from .poly import Poly
from .quotient import IdealHandle, RingPresentation


@dataclass
class LengthSequence:
    """Values indexed by n = 0..n_max; all entries finite."""

    values: list[int]
    kind: str  # "h0" or "rees"
    provenance: str
    saturation_indices: list[int] = field(default_factory=list)

    def __len__(self):
        return len(self.values)

    def csv_rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values))


def _powers(ideal: IdealHandle, n_max: int) -> list[IdealHandle]:
    """[I^1, ..., I^(n_max+1)], built incrementally."""
    out = [ideal]
    for _ in range(n_max):
        out.append(out[-1].product(ideal))
    return out


def h0_sequence(
    ring: RingPresentation, ideal: IdealHandle, n_max: int, order: Order = GREVLEX
) -> LengthSequence:
    """n -> length of the m-torsion submodule of R/I^(n+1), for n = 0..n_max."""
    if ideal.is_unit():
        raise ValueError("the ideal must be proper")
    values = []
    indices = []
    for power in _powers(ideal, n_max):
        sat, k = power.saturate()
        val = length_pair(power, sat, order)
        if val is None:
            raise RuntimeError("saturation quotient came out infinite; this is a bug")
        values.append(val)
        indices.append(k)
    return LengthSequence(values, "h0", f"{ring}; I = {ideal}", indices)


def rees_sequence(
    ring: RingPresentation,
    inner: IdealHandle,
    outer: IdealHandle,
    n_max: int,
    order: Order = GREVLEX,
) -> LengthSequence:
    """n -> length of outer^(n+1)/inner^(n+1) for nested ideals of finite colength."""
    if not outer.contains_ideal(inner):
        raise ValueError("inner must be contained in outer")
    if length_pair(inner, outer) is None:
        raise ValueError("outer/inner must have finite length")
    inner_pows = _powers(inner, n_max)
    outer_pows = _powers(outer, n_max)
    values = []
    for a, b in zip(inner_pows, outer_pows):
        val = length_pair(a, b, order)
        if val is None:
            raise ValueError("a power pair came out infinite")
        values.append(val)
    return LengthSequence(values, "rees", f"{ring}; {inner} in {outer}")


def h0_bruteforce(
    ring: RingPresentation, ideal: IdealHandle, n: int, degree_cap: int | None = None
) -> int:
    """Degree-slice linear-algebra value of the n-th sequence entry (test oracle)."""
    return h0_oracle(ideal.power(n + 1), degree_cap)


def is_filter_regular(ring: RingPresentation, a: Poly) -> bool:
    """True iff the annihilator of a in R has finite length."""
    if ring.is_zero_in_ring(a):
        raise ValueError("element is zero in the ring")
    zero = ring.zero_ideal()
    return length_pair(zero, zero.colon(a)) is not None


def _colon_or_unit(ideal: IdealHandle, f: Poly) -> IdealHandle:
    """Colon by f, with (A : 0) = R when f vanishes in the ring."""
    if ideal.ring.is_zero_in_ring(f):
        return ideal.ring.unit_ideal()
    return ideal.colon(f)


@dataclass
class IdentityReport:
    """Per-n outcome of one ideal identity check."""

    name: str
    params: dict
    entries: list[dict]

    @property
    def passed(self) -> bool:
        return all(all(v for k, v in e.items() if k != "n") for e in self.entries)


def _sop_checks(sop: list[Poly], i: int, j: int):
    d = len(sop)
    if not (0 <= i < j <= d):
        raise ValueError(f"need 0 <= i < j <= {d}, got i={i}, j={j}")


def check_colon_factorization(
    ring: RingPresentation, sop: list[Poly], i: int, j: int, t: int, n_max: int
) -> IdentityReport:
    """Check I^(n+1) : x_t = I^n (I : x_t) + (0 : x_t) for I = (x_{i+1}..x_j)."""
    _sop_checks(sop, i, j)
    d = len(sop)
    if not (1 <= t <= i or j + 1 <= t <= d):
        raise ValueError(f"t must lie in 1..{i} or {j + 1}..{d}, got {t}")
    x_t = sop[t - 1]
    ideal = ring.ideal(sop[i:j])
    torsion = _colon_or_unit(ring.zero_ideal(), x_t)
    colon_i = _colon_or_unit(ideal, x_t)
    entries = []
    powers = _powers(ideal, n_max)
    for n in range(n_max + 1):
        lhs = _colon_or_unit(powers[n], x_t)
        base = powers[n - 1] if n >= 1 else ring.unit_ideal()
        rhs = base.product(colon_i).sum(torsion)
        entries.append({"n": n, "equal": lhs.equal(rhs)})
    return IdentityReport("colon-factorization", {"i": i, "j": j, "t": t}, entries)


def check_saturation_via_colon(
    ring: RingPresentation, sop: list[Poly], i: int, j: int, n_max: int
) -> IdentityReport:
    """Check sat(I^(n+1)) = I^(n+1) : x_t = I^n (I : x_t) + (0 : x_t).

    Uses t = 1 when i >= 1, otherwise t = j+1; for i = 0 also checks the
    colon-by-square collapse I^(n+1) : x_t^2 = I^(n+1) : x_t.
    """
    _sop_checks(sop, i, j)
    d = len(sop)
    t = 1 if i >= 1 else j + 1
    if t > d:
        raise ValueError(f"no admissible t for i={i}, j={j}, d={d}")
    x_t = sop[t - 1]
    ideal = ring.ideal(sop[i:j])
    torsion = _colon_or_unit(ring.zero_ideal(), x_t)
    colon_i = _colon_or_unit(ideal, x_t)
    entries = []
    powers = _powers(ideal, n_max)
    for n in range(n_max + 1):
        power = powers[n]
        sat, _ = power.saturate()
        colon = _colon_or_unit(power, x_t)
        base = powers[n - 1] if n >= 1 else ring.unit_ideal()
        rhs = base.product(colon_i).sum(torsion)
        entry = {
            "n": n,
            "saturation_equals_colon": sat.equal(colon),
            "colon_formula": colon.equal(rhs),
        }
        if i == 0:
            entry["square_collapse"] = _colon_or_unit(power, x_t * x_t).equal(colon)
        entries.append(entry)
    return IdentityReport("saturation-via-colon", {"i": i, "j": j, "t": t}, entries)


def check_colon_power_drop(ring: RingPresentation, sop: list[Poly], i: int, n_max: int) -> IdentityReport:
    """Check I^(n+1) : x_1 = I^n + (0 : x_1) for I = (x_1..x_i) of a standard sop."""
    d = len(sop)
    if not (1 <= i <= d):
        raise ValueError(f"need 1 <= i <= {d}, got {i}")
    x_1 = sop[0]
    ideal = ring.ideal(sop[:i])
    torsion = _colon_or_unit(ring.zero_ideal(), x_1)
    entries = []
    powers = _powers(ideal, n_max)
    for n in range(n_max + 1):
        lhs = _colon_or_unit(powers[n], x_1)
        base = powers[n - 1] if n >= 1 else ring.unit_ideal()
        rhs = base.sum(torsion)
        entries.append({"n": n, "equal": lhs.equal(rhs)})
    return IdentityReport("colon-power-drop", {"i": i}, entries)
