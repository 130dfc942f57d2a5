"""
Instance Verification for regext

Runs every applicable checker on a module (or a pair of modules), collects
the reports with per-instance summaries and writes the report document
as canonical JSON and optionally as CSV. The document keeps claim reports
and consistency reports in separate sections.
"""

import csv
import json
import logging
import multiprocessing as mp
from functools import cached_property
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from regext import __version__
from regext.config import EngineSettings
from regext.tools.checks import (
    BoundReport,
    Check,
    CheckOptions,
    Claim,
    ConsistencyReport,
    Report,
    bound_hdeg,
    bound_reg_ext_MN,
    check_dual_complex,
    check_ext_ring,
    check_filter_regular_bounds,
    check_filter_regular_data,
    check_hdeg_identities,
    check_hilbert,
    check_linear_resolution,
    check_strand_oracle,
    check_tor,
    check_truncations,
    error_report,
    ext_pair_attainment,
    normalize_indeg,
)
from regext.utils.degrees import FilterRegularData, HdegCalculator, filter_regular_sequence, hdeg
from regext.utils.hilbert import hilbert_poly
from regext.utils.presentation import GradedModulePresentation
from regext.utils.presentation_io import emit_presentation, parse_presentation
from regext.utils.resolution import ModuleInvariants, betti_table, invariants, minimal_resolution

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "claim_id",
    "check_id",
    "instance_id",
    "index",
    "degree",
    "relation",
    "lhs",
    "rhs",
    "passed",
    "vacuous",
    "warning_only",
    "error",
)


class InstanceSummary(BaseModel):
    """Invariants of one module and the tally of its checks."""

    instance_id: str = Field(..., description="Identifier used in the reports")
    n: int = Field(..., description="Number of variables")
    invariants: Optional[ModuleInvariants] = Field(None, description="reg, indeg, pd, depth, dim, mu, gen")
    betti: Dict[int, Dict[int, int]] = Field(default_factory=dict, description="Graded Betti numbers")
    hilbert: Dict[str, Any] = Field(default_factory=dict, description="dim, degree, coefficients, polynomial")
    hdeg: Optional[int] = Field(None, description="Homological degree (None for M = 0)")
    shift: int = Field(0, description="Shift applied before the indeg-0 checks")
    checks: int = Field(0, description="Number of reports")
    failures: int = Field(0, description="Non-vacuous, non-warning failures")
    vacuous: int = Field(0, description="Reports about zero modules")
    warnings: int = Field(0, description="Failed warning-only reports")
    errors: int = Field(0, description="Checks that raised")

    def tally(self, reports: Sequence[Report]) -> "InstanceSummary":
        self.checks = len(reports)
        self.failures = sum(1 for r in reports if r.failed)
        self.vacuous = sum(1 for r in reports if r.vacuous)
        self.warnings = sum(1 for r in reports if r.warning_only and not r.passed)
        self.errors = sum(1 for r in reports if r.error is not None)
        return self


class ReportDocument(BaseModel):
    """Everything a verification run produced; identical inputs give identical documents."""

    tool_version: str = Field(__version__, description="regext version")
    seed: int = Field(..., description="Seed of every random choice")
    config: Dict[str, Any] = Field(default_factory=dict, description="Effective settings")
    summaries: List[InstanceSummary] = Field(default_factory=list, description="Per-instance summaries")
    reports: List[BoundReport] = Field(default_factory=list, description="Claim reports, sorted by claim and instance")
    consistency: List[ConsistencyReport] = Field(
        default_factory=list, description="Consistency reports, sorted by check and instance"
    )

    @property
    def failed(self) -> bool:
        return any(report.failed for report in self.reports) or any(report.failed for report in self.consistency)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def options_from_settings(settings: EngineSettings) -> CheckOptions:
    return CheckOptions(
        seed=settings.seed,
        retries=settings.retries,
        window_low=settings.window_low,
        window_high=settings.window_high,
    )


class InstanceAnalysis:
    """Lazily computed data shared by the checkers of one module."""

    def __init__(self, M: GradedModulePresentation, options: CheckOptions, instance_id: str):
        self.M = M
        self.options = options
        self.instance_id = instance_id
        self.calculator = HdegCalculator()
        self.logger = logging.getLogger(__name__)

    @cached_property
    def normalized(self) -> GradedModulePresentation:
        return normalize_indeg(self.M)

    @cached_property
    def shift(self) -> int:
        indeg = betti_table(self.M).indeg
        return -int(indeg) if betti_table(self.M).entries else 0

    @cached_property
    def filter_data(self) -> FilterRegularData:
        return filter_regular_sequence(self.normalized, self.options.seed, self.options.retries)

    @cached_property
    def strand_oracle_applies(self) -> bool:
        table = betti_table(self.M)
        return (
            self.M.ring.n <= self.options.strand_oracle_max_n
            and bool(table.entries)
            and table.reg <= self.options.strand_oracle_max_reg
        )

    def summary(self) -> InstanceSummary:
        M = self.M
        table = betti_table(M)
        data = hilbert_poly(M)
        return InstanceSummary(
            instance_id=self.instance_id,
            n=M.ring.n,
            invariants=invariants(M),
            betti=table.entries,
            hilbert={
                "dim": data.dim,
                "degree": data.degree,
                "coefficients": data.coefficients,
                "polynomial": data.polynomial,
            },
            hdeg=None if M.is_zero() else hdeg(M, self.calculator).value,
            shift=self.shift,
        )

    def run(self, claim: Union[Claim, Check], check: Callable[[], List[Report]]) -> List[Report]:
        """One group of checks; an exception becomes a failing report."""
        try:
            return check()
        except Exception as e:
            self.logger.error(f"{self.instance_id}: {claim.value} group raised {type(e).__name__}: {e}")
            return [error_report(claim, self.instance_id, e)]

    def filter_regular_reports(self) -> List[Report]:
        reports = check_filter_regular_data(self.normalized, self.filter_data, self.instance_id)
        reports += check_filter_regular_bounds(self.normalized, self.filter_data, self.instance_id, self.options.margin)
        for report in reports:
            report.context["shift"] = self.shift
        return reports


def sort_reports(reports: Sequence[Report]) -> List[Report]:
    return sorted(reports, key=lambda r: (r.identifier.value, r.instance_id))


def split_reports(reports: Sequence[Report]) -> Tuple[List[BoundReport], List[ConsistencyReport]]:
    """Claim reports and consistency reports, each sorted."""
    ordered = sort_reports(reports)
    claims = [r for r in ordered if isinstance(r, BoundReport)]
    checks = [r for r in ordered if isinstance(r, ConsistencyReport)]
    return claims, checks


def verify_instance(
    M: GradedModulePresentation,
    options: Optional[CheckOptions] = None,
    instance_id: str = "",
) -> List[Report]:
    """
    Run every applicable check on M.

    Args:
        M: The module
        options: Seed, retries and window margins
        instance_id: Identifier for the reports (defaults to the label)

    Returns:
        Reports sorted by (claim, instance); exceptions inside a check group
        are logged and turned into failing reports
    """
    return analyze_instance(M, options, instance_id)[1]


def analyze_instance(
    M: GradedModulePresentation,
    options: Optional[CheckOptions] = None,
    instance_id: str = "",
) -> Tuple[InstanceSummary, List[Report]]:
    """verify_instance plus the summary of M."""
    options = options or CheckOptions()
    instance_id = instance_id or M.label or "module"
    analysis = InstanceAnalysis(M, options, instance_id)
    logger.info(f"Verifying {instance_id}")

    reports = analysis.run(Claim.TOR_TOTAL_DIMS, lambda: check_tor(M, instance_id))
    if not M.is_zero():
        margin = options.margin
        reports += analysis.run(Check.BETTI_AGREEMENT, lambda: check_hilbert(M, instance_id, options))
        reports += analysis.run(Claim.COMPLEX_REG, lambda: check_dual_complex(M, instance_id, margin))
        reports += analysis.run(Check.EXT_RING_VANISHING, lambda: check_ext_ring(M, instance_id))
        reports += analysis.run(Claim.TRUNCATION_REG, lambda: check_truncations(M, instance_id, margin))
        reports += analysis.run(
            Claim.LINEAR_BETTI, lambda: check_linear_resolution(M, instance_id, options.seed, options.retries)
        )
        if analysis.strand_oracle_applies:
            reports += analysis.run(Check.EXT_RING_STRAND_ORACLE, lambda: check_strand_oracle(M, instance_id))
        reports += analysis.run(Check.FILTER_MONOTONE, analysis.filter_regular_reports)
        reports += analysis.run(Claim.HDEG_HILBERT_BOUND, lambda: bound_hdeg(M, instance_id, analysis.calculator))
        reports += analysis.run(
            Claim.HDEG_DEGREE_BOUND, lambda: check_hdeg_identities(M, instance_id, analysis.calculator)
        )

    reports = sort_reports(reports)
    try:
        summary = analysis.summary()
    except Exception as e:
        logger.error(f"{instance_id}: summary failed with {type(e).__name__}: {e}")
        summary = InstanceSummary(instance_id=instance_id, n=M.ring.n)
    summary.tally(reports)
    logger.info(f"{instance_id}: {summary.checks} checks, {summary.failures} failures, {summary.vacuous} vacuous")
    return summary, reports


def verify_pair(
    M: GradedModulePresentation,
    N: GradedModulePresentation,
    instance_id: str = "",
    margin: int = 2,
) -> List[Report]:
    """
    The bounds for Ext^i(M, N), 0 <= i <= pd(M), and the attainment of the indeg bound.

    Args:
        M: First module
        N: Second module over the same ring
        instance_id: Identifier for the reports
        margin: Degrees checked beyond the regularity of each Ext module

    Returns:
        Sorted reports; empty when n < 2 or one module is zero
    """
    instance_id = instance_id or f"{M.label or 'M'}|{N.label or 'N'}"
    if M.ring.n < 2 or M.is_zero() or N.is_zero():
        return []
    reports: List[Report] = []
    for i in range(0, minimal_resolution(M).length + 1):
        try:
            reports += bound_reg_ext_MN(M, N, i, instance_id, margin)
        except Exception as e:
            logger.error(f"{instance_id}: Ext^{i} checks raised {type(e).__name__}: {e}")
            reports.append(error_report(Claim.EXT_PAIR_REG, instance_id, e))
    try:
        reports.append(ext_pair_attainment(M, N, instance_id))
    except Exception as e:
        logger.error(f"{instance_id}: attainment check raised {type(e).__name__}: {e}")
        reports.append(error_report(Check.EXT_PAIR_INDEG_ATTAINED, instance_id, e))
    return sort_reports(reports)


# Corpus runs


def _instance_task(task: Tuple[str, str, Dict[str, Any]]) -> Tuple[InstanceSummary, List[Report]]:
    instance_id, text, options = task
    M = parse_presentation(text, label=instance_id)
    return analyze_instance(M, CheckOptions(**options), instance_id)


def _pair_task(task: Tuple[str, str, str, str, Dict[str, Any]]) -> List[Report]:
    first_id, first_text, second_id, second_text, options = task
    M = parse_presentation(first_text, label=first_id)
    N = parse_presentation(second_text, label=second_id)
    return verify_pair(M, N, f"{first_id}|{second_id}", options["margin"])


def pair_up(entries: Sequence[Tuple[str, GradedModulePresentation]]) -> List[Tuple[str, str]]:
    """Consecutive instances over the same ring, taken two at a time in sorted order."""
    by_ring: Dict[Tuple, List[str]] = {}
    for instance_id, M in sorted(entries, key=lambda entry: entry[0]):
        by_ring.setdefault((M.ring.p, M.ring.variables), []).append(instance_id)
    pairs: List[Tuple[str, str]] = []
    for ring_key in sorted(by_ring):
        ids = by_ring[ring_key]
        pairs.extend((ids[k], ids[k + 1]) for k in range(0, len(ids) - 1, 2))
    return pairs


def verify_corpus(
    entries: Sequence[Tuple[str, GradedModulePresentation]],
    options: Optional[CheckOptions] = None,
    jobs: int = 1,
    with_pairs: bool = True,
) -> Tuple[List[InstanceSummary], List[Report]]:
    """
    Verify many modules, optionally in worker processes.

    Args:
        entries: (instance id, module) pairs
        options: Check options shared by every instance
        jobs: Worker processes; 1 runs in this process
        with_pairs: Also check Ext between consecutive modules over the same ring

    Returns:
        Summaries in instance order and all reports sorted by (claim, instance);
        the result does not depend on jobs
    """
    options = options or CheckOptions()
    ordered = sorted(entries, key=lambda entry: entry[0])
    texts = {instance_id: emit_presentation(M) for instance_id, M in ordered}
    option_values = options.model_dump()
    instance_tasks = [(instance_id, texts[instance_id], option_values) for instance_id, _ in ordered]
    pair_tasks = []
    if with_pairs:
        pair_tasks = [
            (first, texts[first], second, texts[second], option_values) for first, second in pair_up(ordered)
        ]

    if jobs > 1:
        context = mp.get_context("spawn")
        with context.Pool(processes=jobs) as pool:
            instance_results = pool.map(_instance_task, instance_tasks)
            pair_results = pool.map(_pair_task, pair_tasks)
    else:
        instance_results = [_instance_task(task) for task in instance_tasks]
        pair_results = [_pair_task(task) for task in pair_tasks]

    summaries = [summary for summary, _ in instance_results]
    reports = [report for _, batch in instance_results for report in batch]
    reports += [report for batch in pair_results for report in batch]
    logger.info(f"Verified {len(summaries)} instances and {len(pair_tasks)} pairs")
    return summaries, sort_reports(reports)


def build_document(
    settings: EngineSettings, summaries: Sequence[InstanceSummary], reports: Sequence[Report]
) -> ReportDocument:
    claims, checks = split_reports(reports)
    return ReportDocument(
        seed=settings.seed,
        config=settings.snapshot(),
        summaries=list(summaries),
        reports=claims,
        consistency=checks,
    )


def write_report(document: ReportDocument, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(document.to_json(), encoding="utf-8")
    return path


def write_csv(reports: Sequence[Report], path: Union[str, Path]) -> Path:
    """One row per report, claim rows before consistency rows; lhs and rhs as decimal strings."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        claims, checks = split_reports(reports)
        for report in [*claims, *checks]:
            row = report.model_dump(mode="json")
            writer.writerow(["" if row.get(column) is None else row[column] for column in CSV_COLUMNS])
    return path
