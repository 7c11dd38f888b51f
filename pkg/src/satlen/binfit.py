"""Eventual-polynomial detection in the binomial basis and closed-form validators.

A fitted polynomial is stored as integer coefficients f_0..f_D with
P(n) = sum_t f_t * C(n+t, t). Detection demands that a difference table
vanish identically over a stability window; eventual behavior can never be
proven from a finite prefix, so a negative verdict only says "no
stabilization within the computed range".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) for possibly negative n (generalized, integer-valued)."""
    if k < 0:
        return 0
    if n < 0:
        return (-1) ** k * binomial(k - n - 1, k)
    return math.comb(n, k)


@dataclass(frozen=True)
class BinomialPolynomial:
    """P(n) = sum_t coeffs[t] * C(n+t, t); stable_from marks where a sequence matches."""

    coeffs: tuple[int, ...]
    stable_from: int = 0

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("need at least a constant coefficient")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading binomial coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, n: int) -> int:
        return sum(f * binomial(n + t, t) for t, f in enumerate(self.coeffs))

    def e0_e1(self) -> tuple[int, int]:
        """(linear coefficient, constant term) for fits of degree <= 1."""
        if self.degree > 1:
            raise ValueError(f"degree {self.degree} fit has no (e0, e1) form")
        if self.degree == 0:
            return 0, self.coeffs[0]
        return self.coeffs[1], self.coeffs[0] + self.coeffs[1]

    def monomial_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients of 1, n, n^2, ... as exact rationals."""
        out = [Fraction(0)] * len(self.coeffs)
        for t, f in enumerate(self.coeffs):
            # C(n+t, t) = prod_{k=1..t} (n+k)/k
            poly = [Fraction(1)]
            for k in range(1, t + 1):
                nxt = [Fraction(0)] * (len(poly) + 1)
                for a, c in enumerate(poly):
                    nxt[a] += c * k
                    nxt[a + 1] += c
                poly = [c / k for c in nxt]
            for a, c in enumerate(poly):
                out[a] += f * c
        return tuple(out)


def from_monomial_coeffs(coeffs) -> BinomialPolynomial:
    """Inverse of monomial_coeffs; input must be an integer-valued polynomial."""
    work = [Fraction(c) for c in coeffs]
    while len(work) > 1 and work[-1] == 0:
        work.pop()
    fs = [0] * len(work)
    for t in range(len(work) - 1, -1, -1):
        # leading monomial coefficient of C(n+t, t) is 1/t!
        lead = work[t] * math.factorial(t)
        if lead.denominator != 1:
            raise ValueError("not an integer combination of binomial basis polynomials")
        fs[t] = int(lead)
        basis = BinomialPolynomial(tuple([0] * t + [1])) if fs[t] else None
        if basis is not None:
            for a, c in enumerate(basis.monomial_coeffs()):
                work[a] -= fs[t] * c
    while len(fs) > 1 and fs[-1] == 0:
        fs.pop()
    return BinomialPolynomial(tuple(fs))


def _difference_table(values: list[int], depth: int) -> list[list[int]]:
    table = [list(values)]
    for _ in range(depth):
        prev = table[-1]
        table.append([b - a for a, b in zip(prev, prev[1:])])
    return table


def _solve_binomial(points: list[tuple[int, int]]) -> tuple[int, ...]:
    """Exact solve of sum_t f_t C(n+t,t) = value through the given points."""
    k = len(points)
    rows = [[Fraction(binomial(n + t, t)) for t in range(k)] + [Fraction(v)] for n, v in points]
    for col in range(k):
        piv = next(r for r in range(col, k) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        scale = rows[col][col]
        rows[col] = [c / scale for c in rows[col]]
        for r in range(k):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    out = []
    for r in range(k):
        v = rows[r][k]
        if v.denominator != 1:
            raise ArithmeticError("binomial fit of integer data produced a non-integer")
        out.append(int(v))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass
class FitVerdict:
    is_polynomial: bool
    polynomial: BinomialPolynomial | None
    window: int
    message: str = ""


def detect_eventual_polynomial(values, window: int = 3) -> FitVerdict:
    """Fit the eventual polynomial of an integer sequence, if one stabilizes.

    Requires the order-(k+1) differences to vanish on the last ``window``
    entries before accepting degree k.
    """
    values = list(values)
    max_degree = len(values) - window - 2
    if max_degree < 0:
        raise ValueError(f"sequence of length {len(values)} is too short for window {window}")
    table = _difference_table(values, max_degree + 1)
    for k in range(max_degree + 1):
        diffs = table[k]
        tail = diffs[-(window + 1) :]
        if len(tail) == window + 1 and len(set(tail)) == 1:
            start = len(values) - 1 - k
            poly = BinomialPolynomial(
                _solve_binomial([(n, values[n]) for n in range(start, len(values))])
            )
            stable = len(values)
            while stable > 0 and poly(stable - 1) == values[stable - 1]:
                stable -= 1
            return FitVerdict(True, BinomialPolynomial(poly.coeffs, stable), window)
    return FitVerdict(
        False, None, window, f"no difference order <= {max_degree} stabilized over the window"
    )


# ---------------------------------------------------------------------------
# closed-form validators


@dataclass(frozen=True)
class CohomologyVector:
    """Lengths h^0..h^{d-1} of the below-dimension local cohomology modules."""

    h: tuple[int, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.h):
            raise ValueError("cohomology lengths must be nonnegative")

    @property
    def depth(self) -> int:
        for j, v in enumerate(self.h):
            if v:
                return j
        return len(self.h)


@dataclass
class Verdict:
    passed: bool
    label: str
    details: dict = field(default_factory=dict)


def validate_degree_at_most_one(values, window: int = 3) -> Verdict:
    """Sequence from a principal ideal must stabilize to a polynomial of degree <= 1."""
    fit = detect_eventual_polynomial(values, window)
    if not fit.is_polynomial:
        return Verdict(False, "principal-degree", {"message": fit.message})
    e0, e1 = (fit.polynomial.e0_e1() if fit.polynomial.degree <= 1 else (None, None))
    return Verdict(
        fit.polynomial.degree <= 1,
        "principal-degree",
        {
            "degree": fit.polynomial.degree,
            "e0": e0,
            "e1": e1,
            "stable_from": fit.polynomial.stable_from,
        },
    )


def validate_leading_coefficient(measured_e0: int, annotation: list[dict]) -> Verdict:
    """Leading coefficient must equal the sum of local torsion lengths times
    multiplicities over the annotated one-dimensional associated primes that
    avoid the ideal."""
    predicted = 0
    used = []
    for entry in annotation:
        if entry["contains_a"]:
            continue
        predicted += entry["local_h0_length"] * entry["multiplicity"]
        used.append(entry)
    return Verdict(
        predicted == measured_e0,
        "leading-coefficient",
        {"predicted_e0": predicted, "measured_e0": measured_e0, "primes_used": len(used)},
    )


def predicted_from_cohomology(h: CohomologyVector, i: int) -> BinomialPolynomial:
    """Closed form h^0 + sum_{t<i} (sum_j C(t,j) h^{j+1}) C(n+t,t)."""
    coeffs = [0] * max(i, 1)
    coeffs[0] = h.h[0]
    for t in range(i):
        coeffs[t] += sum(binomial(t, j) * h.h[j + 1] for j in range(t + 1))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return BinomialPolynomial(tuple(coeffs))


def validate_cohomology_formula(values, h: CohomologyVector, i: int, d: int) -> Verdict:
    """The sequence must equal the cohomology closed form at every computed n
    (not only eventually), vanish when i < depth, and have degree i-1 when
    depth <= i < d."""
    if i >= d or len(h.h) != d:
        raise ValueError(f"need i < d and h of length d; got i={i}, d={d}, len(h)={len(h.h)}")
    predicted = predicted_from_cohomology(h, i)
    mismatch = next((n for n, v in enumerate(values) if v != predicted(n)), None)
    details: dict = {
        "predicted_coeffs": list(predicted.coeffs),
        "first_mismatch": mismatch,
    }
    ok = mismatch is None
    depth = h.depth
    if i < depth:
        details["depth_case"] = "below depth: sequence must vanish"
        ok = ok and all(v == 0 for v in values)
    else:
        details["depth_case"] = f"expected degree {i - 1}"
        ok = ok and predicted.degree == (i - 1 if i >= 1 else 0)
    return Verdict(ok, "cohomology-formula", details)


def epsilon_probe(values, d: int) -> tuple[list[Fraction], str]:
    """Exact probe values d! * seq[n] / n^d for n >= 1 and a trend summary."""
    if d < 1:
        raise ValueError("probe dimension must be >= 1")
    probes = [Fraction(math.factorial(d) * values[n], n**d) for n in range(1, len(values))]
    pairs = list(zip(probes, probes[1:]))
    if not pairs:
        trend = "constant"
    elif all(a > b for a, b in pairs):
        trend = "decreasing"
    elif all(a < b for a, b in pairs):
        trend = "increasing"
    elif all(a == b for a, b in pairs):
        trend = "constant"
    else:
        trend = "mixed"
    return probes, trend


def validate_constancy(
    values, case: str, expected_constant: int | None = None, expected_e0: int | None = None,
    window: int = 3,
) -> Verdict:
    """Annihilator case: the fit must be a constant polynomial. Filter-regular
    case: record e0 and compare against an annotated value when present."""
    fit = detect_eventual_polynomial(values, window)
    if not fit.is_polynomial:
        return Verdict(False, f"constancy-{case}", {"message": fit.message})
    poly = fit.polynomial
    if case == "annihilator":
        ok = poly.degree == 0
        details = {"degree": poly.degree, "constant": poly.coeffs[0]}
        if expected_constant is not None:
            ok = ok and poly.coeffs[0] == expected_constant
            details["expected_constant"] = expected_constant
        return Verdict(ok, "constancy-annihilator", details)
    if case == "filter_regular":
        ok = poly.degree <= 1
        e0 = poly.e0_e1()[0] if ok else None
        details = {"degree": poly.degree, "e0": e0}
        if expected_e0 is not None:
            ok = ok and e0 == expected_e0
            details["expected_e0"] = expected_e0
        return Verdict(ok, "constancy-filter-regular", details)
    raise ValueError(f"unknown case {case!r}")
