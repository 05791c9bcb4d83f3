from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import structlog

from config.settings import VerificationSettings
from core.errors import InternalContradiction
from hermite.basis import HermiteBasis
from hermite.interpolation import alpha_table, monomial_reconstruction
from nonvanishing.models import WitnessMode, WitnessProblem
from nonvanishing.witness import certificate_sum, find_witness
from polynomials.models import MultivarPoly
from rings.models import RingSpec
from verification.generators import random_problem

logger = structlog.get_logger("verification")


@dataclass(slots=True)
class IdentityReport:
    ring: str
    cases: int = 0
    checks: int = 0
    failures: int = 0
    first_failure: str | None = None
    failure_kinds: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, kind: str, description: str) -> None:
        self.failures += 1
        self.failure_kinds[kind] = self.failure_kinds.get(kind, 0) + 1
        if self.first_failure is None:
            self.first_failure = description
        logger.error("identity_check_failed", ring=self.ring, kind=kind, description=description)


def _check_problem(problem: WitnessProblem, report: IdentityReport) -> None:
    label = f"f = {problem.f.render()}, t = {problem.t}"

    report.checks += 1
    total = certificate_sum(problem)
    if total != problem.leading_coefficient:
        report.record("certificate_sum", f"{label}: sum {total} != c_t {problem.leading_coefficient}")

    for mode in WitnessMode:
        report.checks += 1
        try:
            find_witness(problem, mode)
        except InternalContradiction as exc:
            report.record(f"witness_{mode.value}", f"{label}: {exc}")

    for factor in problem.grid.factors:
        basis = HermiteBasis(factor)
        report.checks += 1
        try:
            alpha_table(factor, basis)
        except InternalContradiction as exc:
            report.record("moments", f"{label}: {exc}")
            continue
        for ell in range(factor.size):
            report.checks += 1
            expected = MultivarPoly.monomial(factor.ring, (ell,))
            if monomial_reconstruction(factor, ell, basis) != expected:
                report.record("monomial_reconstruction", f"{label}: x^{ell} not recovered")


def run_identity_checks(
    ring: RingSpec, settings: VerificationSettings, seed: int | None = None
) -> IdentityReport:
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    report = IdentityReport(ring=str(ring))
    for _ in range(settings.cases):
        problem = random_problem(rng, ring, settings)
        report.cases += 1
        _check_problem(problem, report)
    logger.info(
        "identity_checks_finished",
        ring=str(ring),
        cases=report.cases,
        checks=report.checks,
        failures=report.failures,
    )
    return report
