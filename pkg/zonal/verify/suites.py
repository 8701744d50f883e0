"""Registry of named verification suites.

Each entry names its checks; ``all`` runs every suite in registry order.
Add new suites here as needed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import checks
from .checks import Check, RunContext
from .errata import errata_report, errata_rows
from .schemas import ComparisonReport, Discrepancy

logger = logging.getLogger(__name__)


SUITES = [
    {
        "name": "symbolic",
        "kind": "exact",
        "description": "partition identities, Jack polynomial structure, dual Cauchy",
        "checks": [
            checks.check_partition_identities,
            checks.check_complement_identities,
            checks.check_fbar_hooks,
            checks.check_power_sum_hooks,
            checks.check_bialternant,
            checks.check_jack_schur,
            checks.check_jack_structure,
            checks.check_det_inverse,
            checks.check_dual_cauchy,
            checks.check_ratio_forms,
            checks.check_real_identity_average,
            checks.check_identity_id,
        ],
    },
    {
        "name": "hyper",
        "kind": "numeric",
        "description": "hypergeometric series, duality quadrature, density limits",
        "checks": [
            checks.check_product_law,
            checks.check_termination,
            checks.check_duality,
            checks.check_muirhead,
            checks.check_closed_examples,
            checks.check_density_limits,
        ],
    },
    {"name": "schur-real", "kind": "mc", "description": "real Ginibre Schur averages", "checks": [checks.check_schur_real]},
    {"name": "schur-complex", "kind": "mc", "description": "complex Ginibre Schur pair averages", "checks": [checks.check_schur_complex]},
    {"name": "schur-quaternion", "kind": "mc", "description": "quaternion Ginibre Schur averages", "checks": [checks.check_schur_quaternion]},
    {"name": "group", "kind": "mc", "description": "Haar averages over O(N), U(N), Sp(2N)", "checks": [checks.check_group]},
    {"name": "splitting", "kind": "mc", "description": "factorization of <C(AXBX†)>", "checks": [checks.check_splitting]},
    {"name": "charpoly", "kind": "mc", "description": "characteristic polynomial moments and duality", "checks": [checks.check_charpoly]},
    {"name": "kaneko", "kind": "mc", "description": "Laguerre averages of zonal polynomials", "checks": [checks.check_kaneko]},
    {"name": "powersum", "kind": "mc", "description": "power-sum averages, derived and printed", "checks": [checks.check_power_sum]},
    {"name": "density", "kind": "mc", "description": "rank-one deformed complex Ginibre density", "checks": [checks.check_density]},
    {"name": "errata", "kind": "mc", "description": "printed forms that disagree with their derivation", "checks": []},
]

SUITE_NAMES = [s["name"] for s in SUITES] + ["all"]


@dataclass
class SuiteResult:
    name: str
    reports: list[ComparisonReport] = field(default_factory=list)
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(r.failed for r in self.reports)

    def extend(self, other: "SuiteResult") -> None:
        self.reports.extend(other.reports)
        self.discrepancies.extend(other.discrepancies)


def get_suite(name: str) -> dict:
    for suite in SUITES:
        if suite["name"] == name:
            return suite
    raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")


def _error_report(check: Check, e: Exception) -> ComparisonReport:
    return ComparisonReport(id=f"{check.__name__}", verdict="error", note=f"{type(e).__name__}: {e}")


def run_check(check: Check, ctx: RunContext) -> list[ComparisonReport]:
    """Run one check; an exception becomes a single ``error`` row."""
    try:
        reports = check(ctx)
    except Exception as e:
        logger.error(f"    ✗ {check.__name__} raised: {str(e)[:120]}")
        return [_error_report(check, e)]
    for r in reports:
        mark = "✗" if r.failed else "✓"
        z = f" z={r.z:.2f}" if r.z is not None else ""
        logger.info(f"    {mark} {r.id}: {r.verdict}{z}")
    return reports


def run_suite(name: str, ctx: RunContext | None = None) -> SuiteResult:
    ctx = ctx or RunContext()
    if name == "all":
        result = SuiteResult(name)
        for suite in SUITES:
            result.extend(run_suite(suite["name"], ctx))
        return result
    suite = get_suite(name)
    result = SuiteResult(name)
    if name == "errata":
        try:
            result.discrepancies = errata_report(ctx)
            result.reports = errata_rows(result.discrepancies)
        except Exception as e:
            logger.error(f"    ✗ errata report failed: {str(e)[:120]}")
            result.reports = [ComparisonReport(id="errata", verdict="error", note=f"{type(e).__name__}: {e}")]
        return result
    for check in suite["checks"]:
        result.reports.extend(run_check(check, ctx))
    return result
