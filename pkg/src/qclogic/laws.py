"""Registry of logical laws and gate identities, and the suite runner."""

from __future__ import annotations

import enum
import json
import math
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import __version__, gates
from .quregister import random_amplitudes
from .semantics import COUNTEREXAMPLE_TOL, Realization, margin_at, search
from .syntax import Formula, format, parse

DEFAULT_BUDGET = 10_000
HOLDS_TOL = 1e-9
IDENTITY_TOL = 1e-12
SCHEMA_VERSION = 1


class Kind(str, enum.Enum):
    CONSEQUENCE = "CONSEQUENCE"
    TAUTOLOGY = "TAUTOLOGY"
    PROPERTY = "PROPERTY"


class Expected(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"


class Verdict(str, enum.Enum):
    HOLDS_UNREFUTED = "CONFIRMED-HOLDS-UNREFUTED"
    FAILS = "CONFIRMED-FAILS"
    UNEXPECTED = "UNEXPECTED"


@dataclass(frozen=True)
class LawSpec:
    """One claim to check.

    CONSEQUENCE laws use ``left`` and ``right``; TAUTOLOGY laws use
    ``right`` only; PROPERTY laws name a numeric check in ``PROPERTY_CHECKS``
    whose result must stay within ``tolerance``.
    """

    id: str
    kind: Kind
    expected: Expected
    left: Formula | None = None
    right: Formula | None = None
    pinned_counterexample: Realization | None = None
    property_name: str | None = None
    tolerance: float = HOLDS_TOL

    def describe(self) -> str:
        if self.kind is Kind.CONSEQUENCE:
            return f"{format(self.left)} |= {format(self.right)}"
        if self.kind is Kind.TAUTOLOGY:
            return f"|= {format(self.right)}"
        return self.property_name


@dataclass
class LawReport:
    law_id: str
    verdict: Verdict
    expected: Expected
    samples_used: int
    max_margin: float
    counterexample: Realization | None = None
    counterexample_margin: float | None = None
    counterexample_source: str | None = None
    grid_points: int = 0
    grid_max_margin: float | None = None
    diagnostics: str | None = None
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "id": self.law_id,
            "expected": self.expected.value,
            "verdict": self.verdict.value,
            "samples_used": self.samples_used,
            "max_margin": _finite(self.max_margin),
            "counterexample": None,
        }
        if self.counterexample is not None:
            d["counterexample"] = {
                "source": self.counterexample_source,
                "margin": self.counterexample_margin,
                "realization": self.counterexample.to_dict(),
            }
        if self.grid_points:
            d["grid"] = {"points": self.grid_points, "max_margin": self.grid_max_margin}
        if self.diagnostics:
            d["diagnostics"] = self.diagnostics
        if include_timing:
            d["wall_time"] = self.wall_time
        return d


@dataclass
class SuiteReport:
    reports: list[LawReport]
    seed: int
    budget: int
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(r.verdict is not Verdict.UNEXPECTED for r in self.reports)

    def to_dict(self, include_timing: bool = False) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "engine_version": self.version,
            "seed": self.seed,
            "budget": self.budget,
            "pass": self.passed,
            "laws": [r.to_dict(include_timing) for r in self.reports],
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"qclogic {self.version}  seed={self.seed}  budget={self.budget}"]
        for r in self.reports:
            line = (
                f"{r.verdict.value:<26} {r.law_id:<34} max_margin={r.max_margin:+.3e} "
                f"samples={r.samples_used} ({r.wall_time * 1000:.1f} ms)"
            )
            if r.counterexample is not None:
                line += f"\n{'':<27}counterexample[{r.counterexample_source}] margin={r.counterexample_margin:.6g}"
            lines.append(line)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _finite(x: float):
    return x if math.isfinite(x) else None


# -- gate-level property checks ------------------------------------------------
# each returns the largest deviation observed over ``count`` random states


def _check_sqrt_not_squared(count: int, rng: np.random.Generator) -> float:
    worst = 0.0
    for w in range(1, 7):
        psi = random_amplitudes(w, rng, count)
        twice = gates.sqrt_not_kernel(gates.sqrt_not_kernel(psi))
        worst = max(worst, float(np.abs(twice - gates.not_kernel(psi)).max()))
    return worst


def _check_toffoli_commutes_with_sqrt_not(count: int, rng: np.random.Generator) -> float:
    worst = 0.0
    for n in (1, 2):
        for m in (1, 2):
            psi = random_amplitudes(n + m + 1, rng, count)
            a = gates.toffoli_kernel(gates.sqrt_not_kernel(psi), n, m)
            b = gates.sqrt_not_kernel(gates.toffoli_kernel(psi, n, m))
            worst = max(worst, float(np.abs(a - b).max()))
    return worst


def _check_sqrt_not_commutes_with_not(count: int, rng: np.random.Generator) -> float:
    worst = 0.0
    for w in range(1, 7):
        psi = random_amplitudes(w, rng, count)
        a = gates.sqrt_not_kernel(gates.not_kernel(psi))
        b = gates.not_kernel(gates.sqrt_not_kernel(psi))
        worst = max(worst, float(np.abs(a - b).max()))
    return worst


def _check_constant_half(count: int, rng: np.random.Generator) -> float:
    worst = 0.0
    for n in (1, 2):
        for m in (1, 2):
            phi = random_amplitudes(n, rng, count)
            psi = random_amplitudes(m, rng, count)
            out = gates.sqrt_not_kernel(gates.and_kernel(phi, psi))
            p = (np.abs(out[:, 1::2]) ** 2).sum(axis=-1)
            worst = max(worst, float(np.abs(p - 0.5).max()))
    return worst


PROPERTY_CHECKS: dict[str, Callable[[int, np.random.Generator], float]] = {
    "sqrt-not-squared-is-not": _check_sqrt_not_squared,
    "toffoli-commutes-with-sqrt-not": _check_toffoli_commutes_with_sqrt_not,
    "sqrt-not-commutes-with-not": _check_sqrt_not_commutes_with_not,
    "sqrt-not-of-and-is-half": _check_constant_half,
}

def _consequence(law_id: str, left: str, right: str, expected=Expected.HOLDS, pinned=None):
    return LawSpec(law_id, Kind.CONSEQUENCE, expected, parse(left), parse(right), pinned)


def _half_qubit():
    h = math.sqrt(2) / 2
    return (h, h)


def builtin_laws() -> list[LawSpec]:
    """Every law the suite checks, in report order."""
    half = _half_qubit()
    alpha = Realization({"p": half})
    distrib = Realization({"p": half, "q": half, "r": (math.sqrt(3) / 2, 0.5)})
    laws = [
        _consequence("double-negation", "p", "not not p"),
        _consequence("double-negation-converse", "not not p", "p"),
        _consequence("sqrt-negation", "snot snot p", "not p"),
        _consequence("sqrt-negation-converse", "not p", "snot snot p"),
        _consequence("commutativity-and", "p and q", "q and p"),
        _consequence("commutativity-or", "p or q", "q or p"),
        _consequence("associativity-and", "p and (q and r)", "(p and q) and r"),
        _consequence("associativity-and-converse", "(p and q) and r", "p and (q and r)"),
        _consequence("associativity-or", "p or (q or r)", "(p or q) or r"),
        _consequence("associativity-or-converse", "(p or q) or r", "p or (q or r)"),
        _consequence("de-morgan-1", "not (p and q)", "not p or not q"),
        _consequence("de-morgan-1-converse", "not p or not q", "not (p and q)"),
        _consequence("de-morgan-2", "not (p or q)", "not p and not q"),
        _consequence("de-morgan-2-converse", "not p and not q", "not (p or q)"),
        _consequence("semiidempotence-1", "p and p", "p"),
        _consequence("distributivity-1", "p and (q or r)", "(p and q) or (p and r)"),
        _consequence("semiidempotence-2", "p", "p and p", Expected.FAILS, alpha),
        LawSpec("excluded-middle", Kind.TAUTOLOGY, Expected.FAILS,
                right=parse("p or not p"), pinned_counterexample=alpha),
        LawSpec("non-contradiction", Kind.TAUTOLOGY, Expected.FAILS,
                right=parse("not (p and not p)"), pinned_counterexample=alpha),
        _consequence("distributivity-2", "(p and q) or (p and r)", "p and (q or r)",
                     Expected.FAILS, distrib),
    ]
    for name, tol in [
        ("sqrt-not-squared-is-not", IDENTITY_TOL),
        ("toffoli-commutes-with-sqrt-not", IDENTITY_TOL),
        ("sqrt-not-commutes-with-not", IDENTITY_TOL),
        ("sqrt-not-of-and-is-half", HOLDS_TOL),
    ]:
        laws.append(LawSpec(name, Kind.PROPERTY, Expected.HOLDS,
                            property_name=name, tolerance=tol))
    return laws


def law_seed(seed: int, law_id: str) -> int:
    """Per-law seed, independent of run order."""
    return seed ^ zlib.crc32(law_id.encode())


def _run_property(spec: LawSpec, budget: int, seed: int) -> LawReport:
    rng = np.random.default_rng(seed)
    dev = PROPERTY_CHECKS[spec.property_name](budget, rng)
    ok = dev <= spec.tolerance
    verdict = Verdict.HOLDS_UNREFUTED if ok else Verdict.FAILS
    if (verdict is Verdict.FAILS) != (spec.expected is Expected.FAILS):
        verdict = Verdict.UNEXPECTED
    return LawReport(spec.id, verdict, spec.expected, budget, dev)


def _run_logical(spec: LawSpec, budget: int, seed: int) -> LawReport:
    left = spec.left if spec.kind is Kind.CONSEQUENCE else None
    holds = spec.expected is Expected.HOLDS
    # pinned witnesses are attached to the spec, not looked up
    pinned_margin = None
    used = 0
    if spec.pinned_counterexample is not None:
        pinned_margin = margin_at(left, spec.right, spec.pinned_counterexample)
        used = 1
    if not holds and pinned_margin is not None and pinned_margin > COUNTEREXAMPLE_TOL:
        return LawReport(spec.id, Verdict.FAILS, spec.expected, used, pinned_margin,
                         spec.pinned_counterexample, pinned_margin, "pinned")

    # holding laws are refuted by any sample beyond the equality tolerance
    threshold = HOLDS_TOL if holds else COUNTEREXAMPLE_TOL
    res = search(left, spec.right, budget, seed, use_witnesses=False,
                 threshold=threshold, stop_at_first=not holds)
    used += res.samples_used
    max_margin = res.max_margin
    if pinned_margin is not None:
        max_margin = max(max_margin, pinned_margin)
    cx = res.counterexample
    grid = dict(grid_points=res.grid_points, grid_max_margin=res.grid_max_margin)
    if cx is None:
        verdict = Verdict.HOLDS_UNREFUTED if holds else Verdict.UNEXPECTED
        return LawReport(spec.id, verdict, spec.expected, used, max_margin, **grid)
    verdict = Verdict.UNEXPECTED if holds else Verdict.FAILS
    return LawReport(spec.id, verdict, spec.expected, used, max_margin,
                     cx.realization, cx.margin, cx.source, **grid)


def run_law(spec: LawSpec, budget: int = DEFAULT_BUDGET, seed: int = 0) -> LawReport:
    """Check one law. ``seed`` is used as given; :func:`run_suite` derives
    per-law seeds with :func:`law_seed`."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    t0 = time.perf_counter()
    try:
        if spec.kind is Kind.PROPERTY:
            report = _run_property(spec, budget, seed)
        else:
            report = _run_logical(spec, budget, seed)
    except Exception as exc:  # reported, not raised: one bad law must not hide the rest
        report = LawReport(spec.id, Verdict.UNEXPECTED, spec.expected, 0, math.nan,
                           diagnostics=f"{type(exc).__name__}: {exc}")
    report.wall_time = time.perf_counter() - t0
    return report


def run_suite(budget: int = DEFAULT_BUDGET, seed: int = 0,
              laws: list[LawSpec] | None = None) -> SuiteReport:
    laws = builtin_laws() if laws is None else laws
    reports = [run_law(spec, budget, law_seed(seed, spec.id)) for spec in laws]
    return SuiteReport(reports, seed, budget)
