"""The full battery of certified checks on one Hopf algebra.

Checks run in a fixed order and each produces one CheckRecord. A check that
raises becomes a "fail" record carrying the error; nothing escapes except
the verification gate, which runs first.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Callable

import numpy as np

from hopfint import __version__
from hopfint.comodules import (
    Comodule, doi_iso, dual_comodule, ev_db, free_hom_iso, generator_hom_count, generator_witness,
    internal_hom_check, regular_comodule, trivial_comodule,
)
from hopfint.dual_conv import dual_hopf, module_to_comodule, rational_action, verify_module
from hopfint.errors import InvalidInput
from hopfint.gp_functors import (
    adjunction_check, functor_T, functor_U, hom_sequence_check, regular_hom_check, right_dual_check,
    twist_iso_check, ut_identity_check,
)
from hopfint.hopf_core import HopfAlgebraData, Report
from hopfint.integrals import (
    antipode_check, gamma_check, gamma_comodule, integral_space, phi_star_check,
    sweedler_iso_check, uniqueness_check,
)

log = logging.getLogger(__name__)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

# groups selectable one at a time from the command line
GROUPS = ("uniqueness", "gamma", "sweedler", "phi_star", "antipode", "convolution", "doi",
          "free_hom", "snake", "internal_hom", "twist", "generator", "functors", "adjunction")


@dataclass
class CheckRecord:
    check: str
    status: str
    witness: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.check, "status": self.status, "witness": self.witness}


@dataclass
class ReportDocument:
    header: dict[str, Any]
    records: list[CheckRecord]

    @property
    def ok(self) -> bool:
        return all(r.status == PASS for r in self.records)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "kind": "report",
            "header": self.header,
            "records": [r.to_dict() for r in self.records],
            "summary": {**self.counts(), "ok": self.ok},
        }


@dataclass(frozen=True)
class SuiteOptions:
    seed: int = 1729
    iso_attempts: int = 32
    order_bound_factor: int = 4
    battery_dim_limit: int = 1
    jobs: int = 1


# ── Context ───────────────────────────────────────────────────────────────────

class SuiteContext:
    """Shared, lazily built comodules for one run."""

    def __init__(self, h: HopfAlgebraData, options: SuiteOptions):
        self.h = h
        self.options = options

    @cached_property
    def objects(self) -> dict[str, Comodule]:
        h = self.h
        regular = regular_comodule(h)
        return {
            "k": trivial_comodule(h),
            "Γ": gamma_comodule(h),
            "H": regular,
            "H*": dual_comodule(regular),
        }

    @cached_property
    def gamma(self):
        return gamma_check(self.h, seed=self.options.seed, attempts=self.options.iso_attempts)

    def iso_kwargs(self) -> dict[str, int]:
        return {"seed": self.options.seed, "attempts": self.options.iso_attempts}


def _from_report(report: Report, **extra: Any) -> tuple[str, dict]:
    witness = report.to_dict()
    witness.update(extra)
    return (PASS if report.ok else FAIL), witness


def _from_round_trip(report) -> tuple[str, dict]:
    witness = report.to_dict()
    if report.ok:
        return PASS, witness
    return (INCONCLUSIVE if report.status == "inconclusive" else FAIL), witness


def _format(h: HopfAlgebraData, v: np.ndarray) -> list[str]:
    return h.field.format_array(v)


# ── Individual checks ─────────────────────────────────────────────────────────

def _uniqueness(ctx: SuiteContext):
    h = ctx.h
    report = uniqueness_check(h)
    return _from_report(
        report,
        right_basis=[_format(h, v) for v in integral_space(h, "right").basis],
        left_basis=[_format(h, v) for v in integral_space(h, "left").basis],
    )


def _grouplike(ctx: SuiteContext):
    g = ctx.gamma
    status = PASS if g.integral_relation and g.grouplike else FAIL
    return status, {"gamma": g.gamma, "integral_relation": g.integral_relation,
                    "grouplike": g.grouplike, "properties": list(g.properties)}


def _gamma_comodule(ctx: SuiteContext):
    g = ctx.gamma
    status = PASS if g.action_matches and g.invertible_with_dual else FAIL
    return status, {"action_matches": g.action_matches,
                    "invertible_with_dual": g.invertible_with_dual}


def _convolution(ctx: SuiteContext):
    h = ctx.h
    star = dual_hopf(h)
    double = dual_hopf(star)
    modules_ok = True
    round_trips_ok = True
    for m in ctx.objects.values():
        module = rational_action(m)
        modules_ok &= verify_module(module).ok
        round_trips_ok &= module_to_comodule(module).same_coaction(m)
    witness = {
        "dual_is_hopf": star.verification.ok,
        "double_dual_same_tensors": double.same_tensors(h),
        "rational_modules": modules_ok,
        "module_comodule_round_trip": round_trips_ok,
    }
    return (PASS if all(witness.values()) else FAIL), witness


def _t_u_dims(ctx: SuiteContext, name: str):
    n = ctx.objects[name]
    t = functor_T(n).module.dim
    u = functor_U(n).dim
    witness = {"dim": n.dim, "dim_T": t, "dim_U": u}
    return (PASS if t == n.dim == u else FAIL), witness


def _generator(ctx: SuiteContext, name: str):
    m = ctx.objects[name]
    return _from_report(generator_hom_count(m), generator=generator_witness(m))


@dataclass(frozen=True)
class PlannedCheck:
    name: str
    group: str
    run: Callable[[SuiteContext], tuple[str, dict]]


def plan(ctx: SuiteContext) -> list[PlannedCheck]:
    """The fixed check order for this algebra."""
    h = ctx.h
    o = ctx.options
    n = h.dim
    core = ("k", "Γ", "H")
    every = ("k", "Γ", "H", "H*")
    checks = [
        PlannedCheck("uniqueness", "uniqueness", _uniqueness),
        PlannedCheck("grouplike", "gamma", _grouplike),
        PlannedCheck("gamma_comodule", "gamma", _gamma_comodule),
        PlannedCheck("sweedler[left]", "sweedler",
                     lambda c: _from_report(sweedler_iso_check(c.h, "left"))),
        PlannedCheck("sweedler[right]", "sweedler",
                     lambda c: _from_report(sweedler_iso_check(c.h, "right"))),
        PlannedCheck("phi_star", "phi_star", lambda c: _from_report(phi_star_check(c.h))),
        PlannedCheck("antipode", "antipode",
                     lambda c: _from_report(antipode_check(c.h, o.order_bound_factor))),
        PlannedCheck("convolution", "convolution", _convolution),
    ]
    for v in ("k", "H"):
        checks.append(PlannedCheck(f"doi[{v}]", "doi",
                                   lambda c, v=v: _from_report(doi_iso(c.objects[v]).report)))
    for m, x in product(core, (1, 2)):
        checks.append(PlannedCheck(f"free_hom[{m},{x}]", "free_hom",
                                   lambda c, m=m, x=x: _from_report(free_hom_iso(c.objects[m], x).report)))
    for m in every:
        checks.append(PlannedCheck(f"snake[{m}]", "snake",
                                   lambda c, m=m: _from_report(ev_db(c.objects[m]).report)))
    dims = {"k": 1, "Γ": 1, "H": n}
    for triple in product(core, repeat=3):
        if dims[triple[0]] * dims[triple[1]] * dims[triple[2]] <= o.battery_dim_limit * n * n:
            checks.append(PlannedCheck(
                f"internal_hom[{','.join(triple)}]", "internal_hom",
                lambda c, t=triple: _from_report(internal_hom_check(*(c.objects[x] for x in t)))))
    for m in core:
        checks.append(PlannedCheck(f"twist[{m}]", "twist",
                                   lambda c, m=m: _from_report(twist_iso_check(c.objects[m]))))
    for m in every:
        checks.append(PlannedCheck(f"generator[{m}]", "generator",
                                   lambda c, m=m: _generator(c, m)))
    for m in every:
        checks.append(PlannedCheck(f"functor_dims[{m}]", "functors",
                                   lambda c, m=m: _t_u_dims(c, m)))
    for a, b in product(("k", "H", "H*", "Γ"), repeat=2):
        checks.append(PlannedCheck(
            f"adjunction[{a},{b}]", "adjunction",
            lambda c, a=a, b=b: _from_report(adjunction_check(c.objects[a], c.objects[b]))))
    for m in every:
        checks.append(PlannedCheck(
            f"ut_identity[{m}]", "functors",
            lambda c, m=m: _from_round_trip(ut_identity_check(c.objects[m], **c.iso_kwargs()))))
    checks.append(PlannedCheck("hom_sequence", "functors",
                               lambda c: _from_report(hom_sequence_check(c.h))))
    for m in core:
        checks.append(PlannedCheck(f"regular_hom[{m}]", "functors",
                                   lambda c, m=m: _from_report(regular_hom_check(c.objects[m]))))
    for m in core:
        checks.append(PlannedCheck(
            f"right_dual[{m}]", "functors",
            lambda c, m=m: _from_round_trip(right_dual_check(c.objects[m], **c.iso_kwargs()))))
    return checks


def _execute(ctx: SuiteContext, check: PlannedCheck) -> CheckRecord:
    started = time.perf_counter()
    try:
        status, witness = check.run(ctx)
    except Exception as e:
        log.debug("check %s raised %r", check.name, e)
        status, witness = FAIL, {"error": f"{type(e).__name__}: {e}"}
    log.debug("check %s: %s in %.3fs", check.name, status, time.perf_counter() - started)
    return CheckRecord(check.name, status, witness)


def run_suite(h: HopfAlgebraData, options: SuiteOptions | None = None,
              groups: tuple[str, ...] | None = None) -> ReportDocument:
    """Verify h (raising HopfVerificationError on failure), then run every check."""
    options = options or SuiteOptions()
    h.require_verified()
    ctx = SuiteContext(h, options)
    checks = [c for c in plan(ctx) if groups is None or c.group in groups]
    header = {
        "hopfint": __version__,
        "algebra": h.label,
        "field": str(h.field),
        "dim": h.dim,
        "seed": options.seed,
        "iso_attempts": options.iso_attempts,
    }
    records = [CheckRecord("verify", PASS, h.verification.to_dict())]
    if options.jobs > 1:
        # build shared objects once before the workers start
        try:
            ctx.objects
        except Exception as e:
            log.debug("shared comodules unavailable: %r", e)
        with ThreadPoolExecutor(max_workers=options.jobs) as pool:
            records += list(pool.map(lambda c: _execute(ctx, c), checks))
    else:
        records += [_execute(ctx, c) for c in checks]
    return ReportDocument(header, records)


def single_check(h: HopfAlgebraData, group: str, options: SuiteOptions | None = None
                 ) -> ReportDocument:
    if group not in GROUPS:
        raise InvalidInput(f"unknown check group {group!r}")
    return run_suite(h, options, groups=(group,))
