"""Job files: JSON fixtures describing a ring, ideals, a sop, annotations, and tasks.

Reports are byte-deterministic for a fixed job file and package version:
wall-clock timings are only added on request (they break determinism and are
meant for eyeballing, not for CI diffs).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .binfit import (
    CohomologyVector,
    detect_eventual_polynomial,
    epsilon_probe,
    validate_cohomology_formula,
    validate_constancy,
    validate_degree_at_most_one,
    validate_leading_coefficient,
)
from .orders import GREVLEX, Order, order_from_name
from .poly import Field
from .quotient import IdealHandle, RingPresentation
from .satseq import (
    check_colon_factorization,
    check_colon_power_drop,
    check_saturation_via_colon,
    h0_bruteforce,
    h0_sequence,
    is_filter_regular,
    rees_sequence,
)
from .sop import check_apsop_persistence, fit_apsop, is_d_sequence, is_sop, param_multiplicity
from .srhomology import (
    buchsbaum_cohomology_vector,
    complex_from_facets,
    complex_from_squarefree,
    reduced_homology_dims,
)
from .textform import PolyParseError


class JobError(Exception):
    """Malformed job input; maps to exit code 2."""


@dataclass
class Overrides:
    nmax: int | None = None
    characteristic: int | None = None
    order: Order = GREVLEX
    verify_grid: int | None = None
    oracle: bool = False
    timings: bool = False


@dataclass
class JobContext:
    ring: RingPresentation
    ideals: dict[str, IdealHandle]
    sop: list
    annotations: dict
    overrides: Overrides
    name: str = ""
    _h_cache: dict = field(default_factory=dict)

    def ideal(self, name: str) -> IdealHandle:
        if name not in self.ideals:
            raise JobError(f"undefined ideal name {name!r}")
        return self.ideals[name]

    def nmax(self, task: dict, default: int = 6) -> int:
        n = task.get("nmax", default)
        if self.overrides.nmax is not None:
            n = self.overrides.nmax
        if not isinstance(n, int) or n < 0:
            raise JobError(f"bad nmax {n!r}")
        return n

    def need_sop(self) -> list:
        if not self.sop:
            raise JobError("task needs a sop block")
        return self.sop

    def h_vector(self, d: int) -> CohomologyVector:
        if d in self._h_cache:
            return self._h_cache[d]
        ann = self.annotations
        if "cohomology" in ann:
            h = CohomologyVector(tuple(int(v) for v in ann["cohomology"]))
            if len(h.h) != d:
                raise JobError(f"cohomology annotation must list h^0..h^{d - 1}")
        else:
            cx = self.complex()
            h = buchsbaum_cohomology_vector(
                cx, d, self.ring.field.characteristic, bool(ann.get("buchsbaum"))
            )
        self._h_cache[d] = h
        return h

    def complex(self):
        ann = self.annotations
        if "facets" in ann:
            return complex_from_facets(self.ring.names, ann["facets"])
        return complex_from_squarefree(list(self.ring.relations), self.ring.names)


def _expected_check(values: list[int], expect) -> tuple[bool | None, dict]:
    if expect is None:
        return None, {}
    expect = [int(v) for v in expect][: len(values)]
    mismatch = next((n for n, (a, b) in enumerate(zip(values, expect)) if a != b), None)
    ok = mismatch is None and len(expect) == len(values)
    out = {"exp_values": expect}
    if mismatch is not None:
        out["first_mismatch"] = mismatch
    return ok, out


def _task_h0(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    seq = h0_sequence(ctx.ring, ideal, ctx.nmax(task), ctx.overrides.order)
    passed, extra = _expected_check(seq.values, task.get("expect"))
    out = {"values": seq.values, "saturation_indices": seq.saturation_indices, **extra}
    if ctx.overrides.oracle:
        oracle_vals = [h0_bruteforce(ctx.ring, ideal, n) for n in range(len(seq.values))]
        agrees = oracle_vals == seq.values
        out["oracle_values"] = oracle_vals
        out["oracle_agrees"] = agrees
        passed = agrees if passed is None else (passed and agrees)
    return {"output": out, "passed": passed, "sequence": seq.values}


def _task_rees(ctx: JobContext, task: dict) -> dict:
    inner = ctx.ideal(task["inner"])
    outer = ctx.ideal(task["outer"])
    seq = rees_sequence(ctx.ring, inner, outer, ctx.nmax(task), ctx.overrides.order)
    passed, extra = _expected_check(seq.values, task.get("expect"))
    return {"output": {"values": seq.values, **extra}, "passed": passed, "sequence": seq.values}


def _identity_output(report) -> dict:
    return {"params": report.params, "entries": report.entries}


def _task_colon_factorization(ctx: JobContext, task: dict) -> dict:
    rep = check_colon_factorization(
        ctx.ring, ctx.need_sop(), task["i"], task["j"], task["t"], ctx.nmax(task, 4)
    )
    return {"output": _identity_output(rep), "passed": rep.passed}


def _task_saturation_via_colon(ctx: JobContext, task: dict) -> dict:
    rep = check_saturation_via_colon(ctx.ring, ctx.need_sop(), task["i"], task["j"], ctx.nmax(task, 4))
    return {"output": _identity_output(rep), "passed": rep.passed}


def _task_colon_power_drop(ctx: JobContext, task: dict) -> dict:
    rep = check_colon_power_drop(ctx.ring, ctx.need_sop(), task["i"], ctx.nmax(task, 5))
    return {"output": _identity_output(rep), "passed": rep.passed}


def _principal_generator(ctx: JobContext, ideal: IdealHandle):
    if len(ideal.gens) != 1:
        raise JobError("task requires a principal ideal")
    return ideal.gens[0]


def _task_principal_degree(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    _principal_generator(ctx, ideal)
    seq = h0_sequence(ctx.ring, ideal, ctx.nmax(task), ctx.overrides.order)
    verdict = validate_degree_at_most_one(seq.values)
    return {
        "output": {"values": seq.values, **verdict.details},
        "passed": verdict.passed,
        "sequence": seq.values,
    }


def _task_leading_coefficient(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    a = _principal_generator(ctx, ideal)
    seq = h0_sequence(ctx.ring, ideal, ctx.nmax(task), ctx.overrides.order)
    fit = detect_eventual_polynomial(seq.values)
    if not fit.is_polynomial or fit.polynomial.degree > 1:
        return {"output": {"values": seq.values, "message": "no degree <= 1 fit"}, "passed": False}
    e0 = fit.polynomial.e0_e1()[0]
    entries = []
    for item in ctx.annotations.get("ass1", []):
        prime = ctx.ring.ideal(item["prime"])
        contains = prime.contains(a)
        entry = {
            "prime": [str(g) for g in prime.gens],
            "local_h0_length": int(item["local_h0_length"]),
            "contains_a": contains,
            "multiplicity": 0 if contains else param_multiplicity(ctx.ring, prime, a),
        }
        entries.append(entry)
    verdict = validate_leading_coefficient(e0, entries)
    return {
        "output": {"values": seq.values, "annotation": entries, **verdict.details},
        "passed": verdict.passed,
        "sequence": seq.values,
    }


def _task_cohomology_formula(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    d = ctx.ring.dimension()
    i = task.get("i", len(ideal.gens))
    seq = h0_sequence(ctx.ring, ideal, ctx.nmax(task), ctx.overrides.order)
    h = ctx.h_vector(d)
    verdict = validate_cohomology_formula(seq.values, h, i, d)
    out = {"values": seq.values, "h": list(h.h), "i": i, "d": d, **verdict.details}
    return {"output": out, "passed": verdict.passed, "sequence": seq.values}


def _task_constancy(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    a = _principal_generator(ctx, ideal)
    case = task.get("case")
    if case not in ("annihilator", "filter_regular"):
        raise JobError(f"constancy case must be annihilator or filter_regular, got {case!r}")
    if case == "filter_regular" and not is_filter_regular(ctx.ring, a):
        return {"output": {"message": "element is not filter-regular"}, "passed": False}
    seq = h0_sequence(ctx.ring, ideal, ctx.nmax(task), ctx.overrides.order)
    verdict = validate_constancy(
        seq.values, case, task.get("expect_constant"), task.get("expect_e0")
    )
    return {
        "output": {"values": seq.values, **verdict.details},
        "passed": verdict.passed,
        "sequence": seq.values,
    }


def _task_vanishing(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    seq = h0_sequence(ctx.ring, ideal, ctx.nmax(task), ctx.overrides.order)
    return {
        "output": {"values": seq.values},
        "passed": all(v == 0 for v in seq.values),
        "sequence": seq.values,
    }


def _task_apsop_fit(ctx: JobContext, task: dict) -> dict:
    sop = ctx.need_sop()
    verify = ctx.overrides.verify_grid or task.get("verify_max", 3)
    if not is_sop(ctx.ring, sop):
        return {"output": {"message": "elements are not a sop"}, "passed": False}
    fit = fit_apsop(ctx.ring, sop, verify)
    out = {
        "ok": fit.ok,
        "lambdas": list(fit.lambdas) if fit.lambdas else None,
        "fit_points": [list(p) for p in fit.fit_points],
        "verified_grid": f"1..{verify}^{len(sop)}",
    }
    if fit.first_violation:
        out["first_violation"] = {
            k: list(v) if isinstance(v, tuple) else v for k, v in fit.first_violation.items()
        }
    passed = fit.ok
    expect = task.get("expect_lambdas")
    if expect is not None:
        out["expect_lambdas"] = [int(v) for v in expect]
        passed = passed and fit.lambdas is not None and list(fit.lambdas) == out["expect_lambdas"]
    if fit.ok:
        interior_zero = all(v == 0 for v in fit.lambdas[1:-1])
        out["standard"] = interior_zero
        if interior_zero:
            out["e_multiplicity"] = fit.lambdas[-1]
            out["invariant"] = fit.lambdas[0]
    return {"output": out, "passed": passed}


def _task_d_sequence(ctx: JobContext, task: dict) -> dict:
    ok = is_d_sequence(ctx.ring, ctx.need_sop())
    return {"output": {"is_d_sequence": ok}, "passed": ok == task.get("expect", True)}


def _task_apsop_persistence(ctx: JobContext, task: dict) -> dict:
    entries = check_apsop_persistence(
        ctx.ring, ctx.need_sop(), task["i"], task["j"], ctx.nmax(task, 2),
        ctx.overrides.verify_grid or task.get("verify_max", 2),
    )
    out = [
        {"n": e["n"], "ok": e["ok"], "lambdas": list(e["lambdas"]) if e["lambdas"] else None}
        for e in entries
    ]
    return {"output": {"entries": out}, "passed": all(e["ok"] for e in entries)}


def _task_homology(ctx: JobContext, task: dict) -> dict:
    d = task.get("d", ctx.ring.dimension())
    cx = ctx.complex()
    betti = reduced_homology_dims(cx, ctx.ring.field.characteristic)
    h = ctx.h_vector(d)
    out = {
        "facets": [sorted(ctx.ring.names[i] for i in f) for f in cx.facets],
        "reduced_betti": betti,
        "h": list(h.h),
    }
    passed = None
    if "expect" in task:
        out["expect"] = [int(v) for v in task["expect"]]
        passed = list(h.h) == out["expect"]
    return {"output": out, "passed": passed}


def _task_epsilon_probe(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    d = int(task["d"])
    seq = h0_sequence(ctx.ring, ideal, ctx.nmax(task), ctx.overrides.order)
    probes, trend = epsilon_probe(seq.values, d)
    out = {"values": seq.values, "probes": [str(q) for q in probes], "trend": trend}
    passed = None
    if "expect_trend" in task:
        passed = trend == task["expect_trend"]
        out["expect_trend"] = task["expect_trend"]
    return {"output": out, "passed": passed, "sequence": seq.values}


def _task_bruteforce(ctx: JobContext, task: dict) -> dict:
    ideal = ctx.ideal(task["ideal"])
    nmax = ctx.nmax(task, 3)
    seq = h0_sequence(ctx.ring, ideal, nmax, ctx.overrides.order)
    oracle_vals = [
        h0_bruteforce(ctx.ring, ideal, n, task.get("degree_cap")) for n in range(nmax + 1)
    ]
    ok = oracle_vals == seq.values
    return {
        "output": {"values": seq.values, "oracle_values": oracle_vals},
        "passed": ok,
    }


TASKS = {
    "h0": _task_h0,
    "rees": _task_rees,
    "lemma35": _task_colon_factorization,
    "cor36": _task_saturation_via_colon,
    "cor38": _task_colon_power_drop,
    "thm22": _task_principal_degree,
    "thm24": _task_leading_coefficient,
    "thm39": _task_cohomology_formula,
    "cor25": _task_constancy,
    "cor34": _task_vanishing,
    "apsop-fit": _task_apsop_fit,
    "d-sequence": _task_d_sequence,
    "prop33": _task_apsop_persistence,
    "homology": _task_homology,
    "epsilon-probe": _task_epsilon_probe,
    "bruteforce-crosscheck": _task_bruteforce,
}


def load_job(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise JobError(f"cannot read job file: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise JobError(f"JSON parse error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict) or "ring" not in data or "tasks" not in data:
        raise JobError("job must be an object with 'ring' and 'tasks'")
    return data


def build_context(data: dict, overrides: Overrides | None = None) -> JobContext:
    overrides = overrides or Overrides()
    ring_block = data["ring"]
    try:
        char = int(ring_block.get("characteristic", 32003))
        if overrides.characteristic is not None:
            char = overrides.characteristic
        ring = RingPresentation(
            Field(char), tuple(ring_block["variables"]), ring_block.get("relations", [])
        )
        ideals = {name: ring.ideal(gens) for name, gens in data.get("ideals", {}).items()}
        sop = [ring.parse(s) for s in data.get("sop", {}).get("elements", [])]
    except (PolyParseError, ValueError, KeyError) as e:
        raise JobError(f"bad ring/ideal block: {e}") from e
    return JobContext(
        ring, ideals, sop, data.get("annotations", {}), overrides, data.get("name", "job")
    )


def run_job(path, overrides: Overrides | None = None) -> dict:
    data = load_job(path)
    ctx = build_context(data, overrides)
    entries = []
    for idx, task in enumerate(data["tasks"]):
        kind = task.get("kind")
        if kind not in TASKS:
            raise JobError(f"unknown task kind {kind!r} (task {idx})")
        try:
            t0 = time.perf_counter()
            result = TASKS[kind](ctx, task)
            elapsed = time.perf_counter() - t0
        except JobError:
            raise
        except (PolyParseError, ValueError, KeyError) as e:
            raise JobError(f"task {idx} ({kind}): {e}") from e
        entry = {
            "index": idx,
            "kind": kind,
            "params": {k: v for k, v in task.items() if k != "kind"},
            "output": result["output"],
            "passed": result["passed"],
        }
        if "sequence" in result:
            entry["sequence"] = result["sequence"]
        if ctx.overrides.timings:
            entry["seconds"] = round(elapsed, 3)
        entries.append(entry)
    passed = all(e["passed"] is not False for e in entries)
    return {
        "job": ctx.name,
        "version": __version__,
        "characteristic": ctx.ring.field.characteristic,
        "order": str(ctx.overrides.order),
        "ring": str(ctx.ring),
        "tasks": entries,
        "passed": passed,
    }


def report_bytes(report: dict) -> bytes:
    return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode()


def export_csv(report: dict, out_dir) -> list[Path]:
    """One CSV per sequence-producing task: header n,value and ascending rows."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in report["tasks"]:
        if "sequence" not in entry:
            continue
        path = out_dir / f"{report['job']}_{entry['index']:02d}-{entry['kind']}.csv"
        lines = ["n,value"] + [f"{n},{v}" for n, v in enumerate(entry["sequence"])]
        path.write_text("\n".join(lines) + "\n")
        written.append(path)
    return written
