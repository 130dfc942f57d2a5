"""
Bound Checks for regext

Each checker compares invariants computed by the engine against a formula
from regext.tools.bounds (or against an exact identity) and returns
reports. A BoundReport carries one of the enumerated Claim ids; checks that
compare two computations, or keep a stated form of a claim that does not hold
in general, produce a ConsistencyReport with a Check id instead. A report
passes when its relation holds; it is vacuous when the module it talks about
is zero, and warning-only reports never count as failures.

Checkers whose statement assumes indeg M = 0 expect the caller to pass the
shifted module; the shift is recorded in the report context.
"""

import logging
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, Field

from regext.tools import bounds
from regext.tools.bounds import ComplexShape, PreconditionError
from regext.utils.cohomology import (
    ExtModule,
    ext_into_ring,
    ext_module,
    local_cohomology_dims,
    shape_window,
    strand_ext_dimension,
    truncate,
)
from regext.utils.degrees import (
    DEFAULT_RETRIES,
    FilterRegularData,
    HdegCalculator,
    find_nonzerodivisor,
    hdeg,
    restrict_to_hyperplane,
)
from regext.utils.hilbert import delta_poly, evaluate_poly, hilbert_function_from_betti, hilbert_poly
from regext.utils.numbers import NEG_INF, POS_INF, DecimalInt, is_finite
from regext.utils.presentation import GradedModulePresentation
from regext.utils.resolution import betti_table, dual_complex, minimal_resolution
from regext.utils.saturation import saturate_h0

logger = logging.getLogger(__name__)

Extended = Union[int, float]


class Claim(str, Enum):
    """Fixed identifiers of the published statements a report verifies."""

    COMPLEX_INDEG = "Lemma2.1.1"
    COMPLEX_REG = "Lemma2.1.2"
    COMPLEX_GRADED_DIMS = "Lemma2.1.3"
    COMPLEX_TOR_DIMS = "Lemma2.1.4"
    EXT_PAIR_INDEG = "Thm2.3.1"
    EXT_PAIR_REG = "Thm2.3.2"
    EXT_PAIR_GRADED_DIMS = "Thm2.3.3"
    EXT_PAIR_TOR_DIMS = "Thm2.3.4"
    TOR_TOTAL_DIMS = "Lemma2.4"
    TRUNCATION_REG = "Rem3.1.i"
    TRUNCATION_EXT_LOW = "Rem3.1.ii"
    TRUNCATION_EXT_TOP_MINUS_ONE = "Rem3.1.iii"
    TRUNCATION_EXT_TOP = "Rem3.1.iv"
    EXT_TOP_FINITE_LENGTH = "Rem3.1.v"
    LINEAR_RECURSION = "Prop3.3"
    LINEAR_BETTI = "Cor3.4"
    EXT_RING_SMALL_DIM = "Thm3.5.1"
    EXT_RING_TOP = "Thm3.5.2a"
    EXT_RING_TOP_MINUS_ONE = "Thm3.5.2b"
    EXT_RING_LOWER = "Thm3.5.2c"
    GROTHENDIECK_SERRE = "EGS"
    POLYNOMIAL_AGREEMENT = "Lemma4.1.i"
    DEGREE_AT_REG = "Lemma4.1.ii"
    FILTER_EXT_DIMS = "Thm4.2"
    EXT_HILBERT_DIMS = "Cor4.3"
    HILBERT_FILTER_GROWTH = "Lemma4.4.i"
    HILBERT_GENERATOR_GROWTH = "Lemma4.4.ii"
    LOCAL_COHOMOLOGY_EXT_DIMS = "Thm4.5.i"
    LOCAL_COHOMOLOGY_DIMS = "Thm4.5.ii"
    HILBERT_COEFFICIENTS = "Thm4.6"
    HDEG_DEGREE_BOUND = "Def5.1.a"
    HDEG_SATURATION = "Def5.1.b"
    HDEG_REGULARITY_BOUND = "Thm5.2"
    HDEG_DEGREE_SUM = "Lemma5.3"
    HDEG_SMALL_DIM = "Lemma5.4.i"
    HDEG_EXT_TOP_MINUS_ONE = "Lemma5.4.ii"
    HDEG_HILBERT_BOUND = "Thm5.5"
    HDEG_CYCLIC_BOUND = "Cor5.6"
    HDEG_REG_BOUND = "DGV-reg"


class Check(str, Enum):
    """Identifiers of the consistency checks that accompany the claims."""

    PROJECTIVE_DIMENSION = "resolution.projective_dimension"
    BETTI_AGREEMENT = "hilbert.betti_agreement"
    H0_AGREEMENT = "local_cohomology.h0_agreement"
    TOR_GRADED_DIMS = "tor.graded_dims"
    COMPLEX_EQUAL_SHIFT_REG = "complex.equal_shift_reg"
    EXT_PAIR_INDEG_ATTAINED = "ext_pair.indeg_attained"
    TRUNCATION_GENERATORS = "truncation.generators"
    TRUNCATION_EXT_TOP_MINUS_ONE_PRINTED = "truncation.ext_top_minus_one_printed"
    EXT_RING_VANISHING = "ext_ring.vanishing"
    EXT_RING_STRAND_ORACLE = "ext_ring.strand_oracle"
    FILTER_MONOTONE = "filter_regular.monotone"
    FILTER_HILBERT_DIFFERENCE = "filter_regular.hilbert_difference"
    FILTER_LENGTH_BOUND = "filter_regular.length_bound"
    FILTER_LENGTH_BOUND_PRINTED = "filter_regular.length_bound_printed"
    FILTER_EXT_INDEG_PROOF = "ext_ring.filter_regular_indeg_proof"
    EXT_HILBERT_DIMS_SATURATED = "ext_ring.hilbert_dims_saturated"
    HDEG_COHEN_MACAULAY = "hdeg.cohen_macaulay"


class Relation(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "=="

    def holds(self, lhs: Extended, rhs: Extended) -> bool:
        if self is Relation.LE:
            return lhs <= rhs
        if self is Relation.GE:
            return lhs >= rhs
        return lhs == rhs


class Comparison(BaseModel):
    """Outcome of one comparison lhs <relation> rhs."""

    instance_id: str = Field(..., description="Module (or pair) the check ran on")
    lhs: DecimalInt = Field(..., description="Computed invariant")
    rhs: DecimalInt = Field(..., description="Bound or exact value")
    relation: Relation = Field(Relation.LE, description="Comparison that must hold")
    passed: bool = Field(..., description="Whether the relation holds")
    vacuous: bool = Field(False, description="The statement concerns a zero module")
    warning_only: bool = Field(False, description="A failure is reported but does not count")
    index: Optional[int] = Field(None, description="Cohomological or homological index")
    degree: Optional[int] = Field(None, description="Internal degree for componentwise checks")
    context: Dict[str, Any] = Field(default_factory=dict, description="Parameter snapshot")
    error: Optional[str] = Field(None, description="Exception raised while checking")

    @property
    def identifier(self) -> Union[Claim, Check]:
        raise NotImplementedError

    @property
    def failed(self) -> bool:
        return not self.passed and not self.vacuous and not self.warning_only


class BoundReport(Comparison):
    """A comparison for one of the enumerated claims."""

    claim_id: Claim = Field(..., description="Identifier of the checked statement")

    @property
    def identifier(self) -> Claim:
        return self.claim_id


class ConsistencyReport(Comparison):
    """A comparison between two computations, or a variant of a claim kept for reference."""

    check_id: Check = Field(..., description="Identifier of the consistency check")

    @property
    def identifier(self) -> Check:
        return self.check_id


Report = Union[BoundReport, ConsistencyReport]


class CheckOptions(BaseModel):
    """Parameters shared by the checkers of one run."""

    seed: int = Field(0, description="Seed for random linear forms")
    retries: int = Field(DEFAULT_RETRIES, description="Draws per filter-regular form")
    window_low: int = Field(2, description="Margin below indeg for Hilbert-function windows")
    window_high: int = Field(5, description="Margin above reg for Hilbert-function windows")
    margin: int = Field(2, description="Margin above reg for componentwise Ext windows")
    strand_oracle_max_reg: int = Field(4, description="Largest reg for which the strand oracle runs")
    strand_oracle_max_n: int = Field(3, description="Largest n for which the strand oracle runs")


def _jsonable(value: Any) -> Any:
    if isinstance(value, float):
        if value == POS_INF:
            return "+inf"
        if value == NEG_INF:
            return "-inf"
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if abs(value) < 2**53 else str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def make_report(
    claim: Union[Claim, Check],
    instance_id: str,
    lhs: Extended,
    rhs: Extended,
    relation: Relation = Relation.LE,
    *,
    vacuous: bool = False,
    warning_only: bool = False,
    index: Optional[int] = None,
    degree: Optional[int] = None,
    context: Optional[Dict[str, Any]] = None,
    error: Optional[str] = None,
) -> Report:
    """Build a BoundReport for a Claim or a ConsistencyReport for a Check, deciding pass/fail from the relation."""
    passed = error is None and (vacuous or relation.holds(lhs, rhs))
    fields = dict(
        instance_id=instance_id,
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        passed=passed,
        vacuous=vacuous,
        warning_only=warning_only,
        index=index,
        degree=degree,
        context=_jsonable(context or {}),
        error=error,
    )
    if isinstance(claim, Check):
        return ConsistencyReport(check_id=claim, **fields)
    return BoundReport(claim_id=claim, **fields)


def error_report(claim: Union[Claim, Check], instance_id: str, error: Exception) -> Report:
    return make_report(claim, instance_id, 0, 0, Relation.EQ, error=f"{type(error).__name__}: {error}")


def _ext_degrees(ext: ExtModule, margin: int) -> range:
    """indeg(ext) .. reg(ext) + margin; empty for the zero module."""
    if ext.is_zero():
        return range(0)
    return range(int(ext.indeg), int(ext.reg) + margin + 1)


def _label(M: GradedModulePresentation) -> str:
    return M.label or "module"


def normalize_indeg(M: GradedModulePresentation) -> GradedModulePresentation:
    """M shifted so that indeg = 0 (M itself when already normalized or zero)."""
    if "normalized" not in M.cache:
        indeg = betti_table(M).indeg
        if not is_finite(indeg) or indeg == 0:
            M.cache["normalized"] = M
        else:
            M.cache["normalized"] = M.shifted(-int(indeg))
    return M.cache["normalized"]


def _require_normalized(M: GradedModulePresentation) -> None:
    if betti_table(M).indeg != 0:
        raise PreconditionError(f"{_label(M)} must have indeg 0, got {betti_table(M).indeg}")


# Free complexes


def check_complex_homology(
    shape: ComplexShape,
    homology: Dict[int, GradedModulePresentation],
    instance_id: str,
    margin: int = 2,
) -> List[Report]:
    """
    indeg, reg, graded dimensions and graded Betti numbers of H^i(F) against the shape of F.

    Args:
        shape: Shape of the complex F
        homology: i -> presentation of H^i(F)
        instance_id: Identifier for the reports
        margin: Degrees checked beyond reg(H^i)

    Returns:
        Reports for every index in homology
    """
    reports: List[Report] = []
    for i in sorted(homology):
        H = homology[i]
        table = betti_table(H)
        zero = not table.entries
        context = {"f": shape.low(i), "b": shape.high(i), "T": shape.rank(i), "T_next": shape.rank(i + 1)}
        reports.append(make_report(
            Claim.COMPLEX_INDEG, instance_id, table.indeg, bounds.bound_indeg_homology(shape, i), Relation.GE,
            vacuous=zero, index=i, context=context,
        ))
        report = make_report(
            Claim.COMPLEX_REG, instance_id, table.reg, bounds.bound_reg_homology(shape, i),
            vacuous=zero, warning_only=not bounds.cokernel_bound_holds(shape.n), index=i, context=context,
        )
        if report.warning_only and not report.passed:
            logger.warning(f"{instance_id}: reg H^{i} = {report.lhs} exceeds the two-variable cokernel term {report.rhs}")
        reports.append(report)
        if zero:
            continue
        for mu in range(int(table.indeg), int(table.reg) + margin + 1):
            reports.append(make_report(
                Claim.COMPLEX_GRADED_DIMS, instance_id, H.hilbert_function(mu),
                bounds.bound_graded_dim_homology(shape, i, mu), index=i, degree=mu, context=context,
            ))
        for j, mu, beta in table.pairs():
            reports.append(make_report(
                Claim.COMPLEX_TOR_DIMS, instance_id, beta, bounds.bound_tor_homology(shape, i, j, mu),
                index=i, degree=mu, context={**context, "j": j},
            ))
    return reports


def check_dual_complex(M: GradedModulePresentation, instance_id: str, margin: int = 2) -> List[Report]:
    """The complex bounds on Hom(F, R) for the minimal resolution F of M; empty when n < 2."""
    if M.ring.n < 2:
        return []
    F = minimal_resolution(M)
    if "dual_complex" not in M.cache:
        M.cache["dual_complex"] = dual_complex(F)
    shape = ComplexShape.from_complex(M.cache["dual_complex"])
    homology = {i: ext_into_ring(M, i).presentation for i in range(0, F.length + 1)}
    return check_complex_homology(shape, homology, instance_id, margin)


# Ext between two modules


def _pair_parameters(M: GradedModulePresentation, N: GradedModulePresentation) -> Dict[str, int]:
    table_M, table_N = betti_table(M), betti_table(N)
    if not table_M.entries or not table_N.entries:
        raise PreconditionError("Ext bounds for a pair need nonzero modules")
    return {
        "reg_M": int(table_M.reg),
        "indeg_M": int(table_M.indeg),
        "reg_N": int(table_N.reg),
        "indeg_N": int(table_N.indeg),
        "r_M": int(table_M.reg - table_M.indeg),
        "r_N": int(table_N.reg - table_N.indeg),
        "delta": int(table_M.indeg - table_N.indeg),
    }


def bound_reg_ext_MN(
    M: GradedModulePresentation,
    N: GradedModulePresentation,
    i: int,
    instance_id: str = "",
    margin: int = 2,
) -> List[Report]:
    """
    indeg, reg, graded dimensions and graded Betti numbers of Ext^i(M, N).

    Args:
        M: First module
        N: Second module
        i: Cohomological index
        instance_id: Identifier for the reports
        margin: Degrees checked beyond reg(Ext^i)

    Returns:
        Reports for the four statements at index i

    Raises:
        PreconditionError: If M or N is zero or n < 2
    """
    instance_id = instance_id or f"{_label(M)}|{_label(N)}"
    n = M.ring.n
    params = _pair_parameters(M, N)
    table_M, table_N = betti_table(M), betti_table(N)
    T_i = bounds.hom_ranks(table_M, table_N, i)
    T_next = bounds.hom_ranks(table_M, table_N, i + 1)
    e_i = bounds.ext_pair_indeg(params["indeg_N"], params["reg_M"], i)
    context = {**params, "n": n, "T": T_i, "T_next": T_next, "e": e_i}

    ext = ext_module(M, N, i)
    zero = ext.is_zero()
    reports = [
        make_report(Claim.EXT_PAIR_INDEG, instance_id, ext.indeg, e_i, Relation.GE,
                    vacuous=zero, index=i, context=context),
        make_report(
            Claim.EXT_PAIR_REG, instance_id, ext.reg + i if not zero else NEG_INF,
            bounds.ext_pair_reg(n, params["r_M"], params["r_N"], T_i, T_next, params["delta"]),
            vacuous=zero, index=i, context=context,
        ),
    ]
    for mu in _ext_degrees(ext, margin):
        reports.append(make_report(
            Claim.EXT_PAIR_GRADED_DIMS, instance_id, ext.hilbert_function(mu),
            bounds.ext_pair_graded_dim(n, T_i, e_i, mu), index=i, degree=mu, context=context,
        ))
    if not zero:
        for j, mu, beta in betti_table(ext.presentation).pairs():
            reports.append(make_report(
                Claim.EXT_PAIR_TOR_DIMS, instance_id, beta, bounds.ext_pair_tor_dim(n, T_i, e_i, j, mu),
                index=i, degree=mu, context={**context, "j": j},
            ))
    return reports


def ext_pair_attainment(M: GradedModulePresentation, N: GradedModulePresentation, instance_id: str = "") -> Report:
    """Whether indeg Ext^i(M, N) = indeg(N) - reg(M) - i for some i with Ext^i != 0 (warning only)."""
    instance_id = instance_id or f"{_label(M)}|{_label(N)}"
    params = _pair_parameters(M, N)
    gaps = []
    for i in range(0, minimal_resolution(M).length + 1):
        ext = ext_module(M, N, i)
        if not ext.is_zero():
            gaps.append(int(ext.indeg) - bounds.ext_pair_indeg(params["indeg_N"], params["reg_M"], i))
    if not gaps:
        return make_report(Check.EXT_PAIR_INDEG_ATTAINED, instance_id, 0, 0, Relation.EQ,
                           vacuous=True, warning_only=True, context=params)
    report = make_report(Check.EXT_PAIR_INDEG_ATTAINED, instance_id, min(gaps), 0, Relation.EQ,
                         warning_only=True, context={**params, "gaps": gaps})
    if not report.passed:
        logger.warning(f"{instance_id}: indeg bound for Ext not attained, smallest gap {min(gaps)}")
    return report


# Tor


def bound_dim_tor(M: GradedModulePresentation, i: int) -> int:
    """mu(M) C(n, i) C(reg - indeg + n, n), an upper bound for dim Tor_i(M, k)."""
    table = betti_table(M)
    if not table.entries:
        return 0
    return bounds.tor_total_dim(M.ring.n, i, table.total(0), int(table.reg), int(table.indeg))


def check_tor(M: GradedModulePresentation, instance_id: str) -> List[Report]:
    """Total and graded Tor dimensions; graded degrees are taken after shifting indeg to 0."""
    table = betti_table(M)
    n = M.ring.n
    reports = [make_report(Check.PROJECTIVE_DIMENSION, instance_id, table.pd, n, context={"n": n})]
    if not table.entries:
        return reports
    mu, indeg = table.total(0), int(table.indeg)
    context = {"n": n, "mu": mu, "reg": table.reg, "indeg": indeg}
    for i in range(0, n + 1):
        reports.append(make_report(Claim.TOR_TOTAL_DIMS, instance_id, table.total(i), bound_dim_tor(M, i),
                                   index=i, context=context))
    for i, j, beta in table.pairs():
        reports.append(make_report(
            Check.TOR_GRADED_DIMS, instance_id, beta, bounds.tor_graded_dim(n, i, mu, j - indeg),
            index=i, degree=j, context={**context, "shift": -indeg},
        ))
    return reports


# Linear resolutions


def linear_truncation(M: GradedModulePresentation) -> GradedModulePresentation:
    """(M / H^0_m(M))_{>= rbar}: reg = indeg = rbar and no finite-length part."""
    if "linear_truncation" not in M.cache:
        quotient = saturate_h0(M).quotient
        rbar = betti_table(quotient).reg
        M.cache["linear_truncation"] = truncate(quotient, int(rbar)) if is_finite(rbar) else quotient
    return M.cache["linear_truncation"]


def _check_linear_hypotheses(M: GradedModulePresentation) -> int:
    table = betti_table(M)
    if not table.entries:
        raise PreconditionError("The module is zero")
    if table.reg != table.indeg:
        raise PreconditionError(f"Needs reg = indeg, got reg {table.reg} and indeg {table.indeg}")
    if saturate_h0(M).h0_length:
        raise PreconditionError("Needs H^0_m(M) = 0")
    return int(table.reg)


def betti_from_hilbert(M: GradedModulePresentation, i: int) -> int:
    """
    dim Tor_i(M, k) from the Hilbert polynomial of M.

    Args:
        M: A module with reg = indeg and H^0_m(M) = 0
        i: Homological degree

    Returns:
        sum over 0 <= l <= min(i, d - 1) of (-1)^l C(n - l - 1, i - l) Delta^l P_M(r + l)

    Raises:
        PreconditionError: If the hypotheses fail
    """
    r = _check_linear_hypotheses(M)
    data = hilbert_poly(M)
    return bounds.betti_from_hilbert_formula(M.ring.n, data.dim, i, r, data.delta_value)


def tortrunc_check(
    M: GradedModulePresentation,
    i: int,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
    instance_id: str = "",
) -> Report:
    """
    dim Tor_i(M, k) = C(n - 1, i) P_M(r) - dim Tor_{i-1}^{R/l}(M', k) with M' = (M / lM)_{>= r+1}.

    Raises:
        PreconditionError: If the hypotheses fail
        FilterRegularError: If no linear non-zero-divisor is found (depth 0)
    """
    instance_id = instance_id or _label(M)
    r = _check_linear_hypotheses(M)
    key = f"restricted_truncation:{seed}:{retries}"
    if key not in M.cache:
        coefficients = find_nonzerodivisor(M, seed, retries)
        restricted = restrict_to_hyperplane(M, coefficients)
        M.cache[key] = (coefficients, truncate(restricted, r + 1))
    coefficients, restricted = M.cache[key]
    tor_restricted = betti_table(restricted).total(i - 1)
    hilbert_at_r = hilbert_poly(M).evaluate(r)
    return make_report(
        Claim.LINEAR_RECURSION, instance_id, betti_table(M).total(i),
        bounds.linear_resolution_recursion(M.ring.n, i, hilbert_at_r, tor_restricted), Relation.EQ,
        index=i,
        context={"r": r, "P_r": hilbert_at_r, "form": coefficients, "tor_restricted": tor_restricted},
    )


def check_linear_resolution(
    M: GradedModulePresentation, instance_id: str, seed: int = 0, retries: int = DEFAULT_RETRIES
) -> List[Report]:
    """Betti numbers from the Hilbert polynomial, the Tor recursion and the equal-shift bound on (M/H^0)_{>=rbar}."""
    L = linear_truncation(M)
    table = betti_table(L)
    if not table.entries:
        return []
    n = M.ring.n
    r = int(table.reg)
    context = {"r": r, "d": hilbert_poly(L).dim}
    reports: List[Report] = []
    for i in range(0, n + 1):
        reports.append(make_report(Claim.LINEAR_BETTI, instance_id, table.total(i), betti_from_hilbert(L, i),
                                   Relation.EQ, index=i, context=context))
    for i in range(0, n + 1):
        reports.append(tortrunc_check(L, i, seed, retries, instance_id))
    if n >= 2:
        for i in range(0, table.pd + 1):
            ext = ext_into_ring(L, i)
            reports.append(make_report(
                Check.COMPLEX_EQUAL_SHIFT_REG, instance_id, ext.reg,
                bounds.bound_equal_shift_reg(n, r, i, table.total(i), table.total(i + 1)),
                vacuous=ext.is_zero(), index=i, context={**context, "T": table.total(i), "T_next": table.total(i + 1)},
            ))
    return reports


# Ext into the ring


def _rbar(M: GradedModulePresentation) -> Extended:
    return betti_table(saturate_h0(M).quotient).reg


def bound_reg_ext_MR(M: GradedModulePresentation, i: int, instance_id: str = "") -> Report:
    """
    reg Ext^i(M, R) against the bound for its position relative to n and d = dim M.

    Args:
        M: A nonzero module
        i: Cohomological index, 0 <= i <= n
        instance_id: Identifier for the report

    Returns:
        One report; vacuous when Ext^i(M, R) = 0
    """
    instance_id = instance_id or _label(M)
    n = M.ring.n
    table = betti_table(M)
    if not table.entries:
        raise PreconditionError("The module is zero")
    indeg = int(table.indeg)
    data = hilbert_poly(M)
    d = data.dim
    ext = ext_into_ring(M, i)
    zero = ext.is_zero()
    context: Dict[str, Any] = {"n": n, "d": d, "indeg": indeg}
    if d < 2:
        return make_report(Claim.EXT_RING_SMALL_DIM, instance_id, ext.reg, bounds.ext_ring_small_dim(indeg, i),
                           vacuous=zero, index=i, context=context)
    lhs = ext.reg + i if not zero else NEG_INF
    if i == n:
        return make_report(Claim.EXT_RING_TOP, instance_id, lhs, bounds.ext_ring_top(indeg),
                           vacuous=zero, index=i, context=context)
    rbar = int(_rbar(M))
    P_rbar = data.evaluate(rbar)
    context.update({"rbar": rbar, "P_rbar": P_rbar})
    if i == n - 1:
        delta = data.delta_value(1, rbar)
        return make_report(
            Claim.EXT_RING_TOP_MINUS_ONE, instance_id, lhs,
            bounds.ext_ring_top_minus_one(P_rbar, delta, rbar, indeg),
            vacuous=zero, index=i, context={**context, "delta_P_rbar": delta},
        )
    j = n - i
    if j > d:
        # Ext^{n-j} vanishes below n - d
        return make_report(Claim.EXT_RING_LOWER, instance_id, lhs, NEG_INF, vacuous=zero, index=i, context=context)
    return make_report(Claim.EXT_RING_LOWER, instance_id, lhs, bounds.ext_ring_lower(d, j, P_rbar, rbar),
                       vacuous=zero, index=i, context={**context, "C": bounds.C_dj(d, d - j)})


def check_ext_ring(M: GradedModulePresentation, instance_id: str) -> List[Report]:
    """Regularity bounds and vanishing of Ext^i(M, R) for 0 <= i <= n."""
    n = M.ring.n
    d = hilbert_poly(M).dim
    reports = [bound_reg_ext_MR(M, i, instance_id) for i in range(0, n + 1)]
    for j in range(0, n + 1):
        ext = ext_into_ring(M, n - j)
        if j <= d:
            reports.append(make_report(Check.EXT_RING_VANISHING, instance_id, ext.dim if not ext.is_zero() else 0,
                                       bounds.ext_ring_vanishing(d, j), vacuous=ext.is_zero(), index=n - j,
                                       context={"d": d, "j": j}))
        else:
            reports.append(make_report(Check.EXT_RING_VANISHING, instance_id, int(not ext.is_zero()), 0,
                                       Relation.EQ, index=n - j, context={"d": d, "j": j}))
    return reports


def check_strand_oracle(M: GradedModulePresentation, instance_id: str, margin: int = 1) -> List[Report]:
    """Hilbert functions of the Ext presentations against graded-strand linear algebra on Hom(F, R)."""
    reports: List[Report] = []
    for i in range(0, minimal_resolution(M).length + 1):
        ext = ext_into_ring(M, i)
        for mu in _ext_degrees(ext, margin):
            reports.append(make_report(Check.EXT_RING_STRAND_ORACLE, instance_id, ext.hilbert_function(mu),
                                       strand_ext_dimension(M, i, mu), Relation.EQ, index=i, degree=mu))
    return reports


# Hilbert functions and local cohomology


def check_hilbert(M: GradedModulePresentation, instance_id: str, options: CheckOptions) -> List[Report]:
    """Betti/standard-monomial agreement, Grothendieck-Serre, H^0 by duality, Hilbert polynomial near rbar."""
    bounds_window = shape_window(M, options.window_low, options.window_high)
    if bounds_window is None:
        return []
    window = range(bounds_window[0], bounds_window[1] + 1)
    n = M.ring.n
    table = betti_table(M)
    data = hilbert_poly(M)
    saturation = saturate_h0(M)
    local = local_cohomology_dims(M, (window.start, window.stop - 1))
    reports: List[Report] = []
    for t in window:
        reports.append(make_report(Check.BETTI_AGREEMENT, instance_id, M.hilbert_function(t),
                                   hilbert_function_from_betti(table, t), Relation.EQ, degree=t))
    for t in window:
        lhs = M.hilbert_function(t) - data.evaluate(t)
        rhs = sum((-1) ** i * local.dim(i, t) for i in range(local.top + 1))
        reports.append(make_report(Claim.GROTHENDIECK_SERRE, instance_id, lhs, rhs, Relation.EQ, degree=t,
                                   context={"H": M.hilbert_function(t), "P": data.evaluate(t)}))
    for t in window:
        reports.append(make_report(Check.H0_AGREEMENT, instance_id, local.dim(0, t), saturation.dim(t),
                                   Relation.EQ, degree=t))

    d = data.dim
    if d >= 1:
        quotient = saturation.quotient
        rbar = int(betti_table(quotient).reg)
        for t in range(rbar, rbar + 6):
            reports.append(make_report(Claim.POLYNOMIAL_AGREEMENT, instance_id, data.evaluate(t),
                                       quotient.hilbert_function(t), Relation.EQ, degree=t,
                                       context={"rbar": rbar}))
        for t in range(rbar - 1, rbar + 5):
            reports.append(make_report(Claim.POLYNOMIAL_AGREEMENT, instance_id, data.evaluate(t),
                                       data.evaluate(t + 1), Relation.LE, degree=t,
                                       context={"rbar": rbar, "increasing": True}))
        reports.append(make_report(Claim.DEGREE_AT_REG, instance_id, quotient.hilbert_function(rbar), data.degree,
                                   Relation.GE, degree=rbar, context={"rbar": rbar, "n": n}))
    return reports


# Truncations


def _hilbert_mismatch(
    first: ExtModule, second: ExtModule, margin: int, expected: Optional[Callable[[int, int], int]] = None
) -> Dict[str, Any]:
    degrees = set(_ext_degrees(first, margin)) | set(_ext_degrees(second, margin))
    mismatch = 0
    for mu in sorted(degrees):
        target = second.hilbert_function(mu)
        if expected is not None:
            target = expected(mu, target)
        mismatch += abs(first.hilbert_function(mu) - target)
    window = (min(degrees), max(degrees)) if degrees else None
    return {"mismatch": mismatch, "window": window}


def check_truncations(M: GradedModulePresentation, instance_id: str, margin: int = 2) -> List[Report]:
    """Regularity, Ext modules and generators of M_{>=t} for t in {indeg, reg, reg + 2}."""
    table = betti_table(M)
    if not table.entries:
        return []
    n = M.ring.n
    indeg, reg = int(table.indeg), int(table.reg)
    reports: List[Report] = []
    for t in sorted({indeg, reg, reg + 2}):
        Mt = truncate(M, t)
        table_t = betti_table(Mt)
        zero = not table_t.entries
        reports.append(make_report(Claim.TRUNCATION_REG, instance_id, table_t.reg, max(t, reg), Relation.EQ,
                                   vacuous=zero, degree=t))
        for i in range(0, n - 1):
            result = _hilbert_mismatch(ext_into_ring(Mt, i), ext_into_ring(M, i), margin)
            reports.append(make_report(Claim.TRUNCATION_EXT_LOW, instance_id, result["mismatch"], 0, Relation.EQ,
                                       index=i, degree=t, context={"window": result["window"]}))
        top_minus_one = ext_into_ring(M, n - 1)
        truncated_reg = ext_into_ring(Mt, n - 1).reg
        reports.append(make_report(
            Claim.TRUNCATION_EXT_TOP_MINUS_ONE, instance_id, top_minus_one.reg,
            bounds.truncation_ext_top_minus_one(truncated_reg, indeg, n),
            vacuous=top_minus_one.is_zero(), index=n - 1, degree=t,
        ))
        printed = make_report(
            Check.TRUNCATION_EXT_TOP_MINUS_ONE_PRINTED, instance_id, top_minus_one.reg,
            bounds.truncation_ext_top_minus_one(truncated_reg, indeg, n, printed=True),
            vacuous=top_minus_one.is_zero(), warning_only=True, index=n - 1, degree=t,
        )
        if not printed.passed:
            logger.warning(f"{instance_id}: reg Ext^{n - 1} = {printed.lhs} exceeds {printed.rhs} at t = {t}")
        reports.append(printed)
        cut = -n - t
        result = _hilbert_mismatch(
            ext_into_ring(Mt, n), ext_into_ring(M, n), 0, lambda mu, value: value if mu <= cut else 0
        )
        reports.append(make_report(Claim.TRUNCATION_EXT_TOP, instance_id, result["mismatch"], 0, Relation.EQ,
                                   index=n, degree=t, context={"window": result["window"]}))

    reports.append(make_report(Check.TRUNCATION_GENERATORS, instance_id, betti_table(truncate(M, reg)).total(0),
                               M.hilbert_function(reg), Relation.EQ, degree=reg))

    saturation = saturate_h0(M)
    top = ext_into_ring(M, n)
    if saturation.h0_length:
        reports.append(make_report(Claim.EXT_TOP_FINITE_LENGTH, instance_id, top.indeg,
                                   -saturation.h0_end - n, Relation.EQ, index=n,
                                   context={"quantity": "indeg", "h0_end": saturation.h0_end}))
        reports.append(make_report(Claim.EXT_TOP_FINITE_LENGTH, instance_id, top.reg,
                                   -saturation.h0_indeg - n, Relation.EQ, index=n,
                                   context={"quantity": "reg", "h0_indeg": saturation.h0_indeg}))
        reports.append(make_report(Claim.EXT_TOP_FINITE_LENGTH, instance_id, top.dim, 0, Relation.EQ, index=n,
                                   context={"quantity": "dim"}))
    else:
        reports.append(make_report(Claim.EXT_TOP_FINITE_LENGTH, instance_id, int(not top.is_zero()), 0,
                                   Relation.EQ, index=n, context={"quantity": "vanishing"}))
    return reports


# Filter-regular sequences


def _delta_at(M: GradedModulePresentation, order: int, t: Extended) -> int:
    """Delta^order P_M(t); a constant difference is evaluated anywhere."""
    poly = delta_poly(hilbert_poly(M).poly, order)
    if not is_finite(t):
        if not poly.is_zero and poly.degree() > 0:
            raise PreconditionError(f"Delta^{order} P is not constant but the evaluation point is {t}")
        return evaluate_poly(poly, 0)
    return evaluate_poly(poly, int(t))


def _saturated_hilbert(M: GradedModulePresentation, t: Extended) -> int:
    if not is_finite(t):
        return 0
    return saturate_h0(M).quotient.hilbert_function(int(t))


def check_filter_regular_data(M: GradedModulePresentation, data: FilterRegularData, instance_id: str) -> List[Report]:
    """Monotonicity of rbar_j, P_{M_j} = Delta^j P_M and the length bound for B."""
    n = M.ring.n
    d = data.dim
    P = hilbert_poly(M).poly
    context = {"seed": data.seed, "forms": data.forms, "rbar": data.rbar, "B": data.B}
    reports: List[Report] = []
    for j in range(d):
        reports.append(make_report(Check.FILTER_MONOTONE, instance_id, data.rbar[j + 1], data.rbar[j],
                                   index=j, context=context))
    for j, Mj in enumerate(data.quotients):
        differs = int(not (hilbert_poly(Mj).poly - delta_poly(P, j)).is_zero)
        reports.append(make_report(Check.FILTER_HILBERT_DIFFERENCE, instance_id, differs, 0, Relation.EQ,
                                   index=j, context={"P_Mj": hilbert_poly(Mj).polynomial}))
    if d >= 1:
        _require_normalized(M)
        table = betti_table(M)
        rbar, reg, mu = int(data.rbar[0]), int(table.reg), table.total(0)
        reports.append(make_report(Check.FILTER_LENGTH_BOUND, instance_id, data.B,
                                   bounds.filter_regular_length(mu, reg, n, d),
                                   context={**context, "mu": mu, "reg": reg}))
        printed = make_report(Check.FILTER_LENGTH_BOUND_PRINTED, instance_id, data.B,
                              bounds.filter_regular_length(mu, rbar, n, d), warning_only=True,
                              context={**context, "mu": mu})
        if not printed.passed:
            logger.warning(f"{instance_id}: B = {data.B} exceeds the length bound taken at rbar = {rbar}")
        reports.append(printed)
    return reports


def bound_dim_ext(
    M: GradedModulePresentation, i: int, mu: int, data: FilterRegularData, instance_id: str = ""
) -> List[Report]:
    """
    dim Ext^{n-i}(M, R)_mu against the filter-regular bound and its two Hilbert-function variants.

    Args:
        M: A module of dimension d >= 1
        i: 1 <= i <= d
        mu: Internal degree
        data: Filter-regular sequence on M

    Returns:
        Three reports
    """
    instance_id = instance_id or _label(M)
    n = M.ring.n
    if not 1 <= i <= data.dim:
        raise PreconditionError(f"Index must satisfy 1 <= i <= d = {data.dim}, got {i}")
    ext = ext_into_ring(M, n - i)
    lhs = ext.hilbert_function(mu)
    rbar_prev = int(data.rbar[i - 1])
    rbar = int(data.rbar[0])
    delta_value = _delta_at(M, i - 1, data.rbar[i] - 1 if is_finite(data.rbar[i]) else data.rbar[i])
    hilbert_prev = _saturated_hilbert(data.quotients[i - 1], rbar_prev)
    hilbert_bar = _saturated_hilbert(M, rbar)
    context = {"rbar_prev": rbar_prev, "rbar_i": data.rbar[i], "delta": delta_value}
    return [
        make_report(Claim.FILTER_EXT_DIMS, instance_id, lhs,
                    bounds.filter_regular_dim(mu, rbar_prev, n, i, delta_value),
                    index=n - i, degree=mu, context=context),
        make_report(Claim.EXT_HILBERT_DIMS, instance_id, lhs,
                    bounds.filter_regular_hilbert_dim(mu, rbar_prev, n, i, hilbert_prev),
                    index=n - i, degree=mu, context={"rbar_prev": rbar_prev, "H": hilbert_prev}),
        make_report(Check.EXT_HILBERT_DIMS_SATURATED, instance_id, lhs,
                    bounds.filter_regular_hilbert_dim(mu, rbar, n, i, hilbert_bar),
                    index=n - i, degree=mu, context={"rbar": rbar, "H": hilbert_bar}),
    ]


def bound_local_cohomology(
    M: GradedModulePresentation, i: int, mu: int, data: FilterRegularData, instance_id: str = ""
) -> List[Report]:
    """
    dim Ext^{n-i}(M, R)_{-mu-n} and dim H^i_m(M)_mu against B C(rbar_{i-1} + d - i, d - i) C(., i - 1).

    Args:
        M: A module with indeg 0 and dimension d >= 1
        i: 1 <= i <= d
        mu: Degree of the local cohomology module
        data: Filter-regular sequence on M

    Raises:
        PreconditionError: If indeg M != 0 or i is out of range
    """
    instance_id = instance_id or _label(M)
    _require_normalized(M)
    n, d = M.ring.n, data.dim
    if not 1 <= i <= d:
        raise PreconditionError(f"Index must satisfy 1 <= i <= d = {d}, got {i}")
    rbar_prev = int(data.rbar[i - 1])
    ext = ext_into_ring(M, n - i)
    nu = -mu - n
    context = {"B": data.B, "rbar_prev": rbar_prev, "d": d}
    local = local_cohomology_dims(M, (mu, mu))
    return [
        make_report(Claim.LOCAL_COHOMOLOGY_EXT_DIMS, instance_id, ext.hilbert_function(nu),
                    bounds.local_cohomology_ext_dim(data.B, rbar_prev, d, i, n, nu),
                    index=n - i, degree=nu, context=context),
        make_report(Claim.LOCAL_COHOMOLOGY_DIMS, instance_id, local.dim(i, mu),
                    bounds.local_cohomology_dim(data.B, rbar_prev, d, i, mu),
                    index=i, degree=mu, context=context),
    ]


def bound_hilbert_coeffs(M: GradedModulePresentation, data: FilterRegularData, instance_id: str = "") -> List[Report]:
    """|e_i(M)| <= B (reg(Mbar) + 1)^i for 0 <= i <= d - 1; M must have indeg 0."""
    instance_id = instance_id or _label(M)
    _require_normalized(M)
    coefficients = hilbert_poly(M).coefficients
    rbar = int(data.rbar[0])
    return [
        make_report(Claim.HILBERT_COEFFICIENTS, instance_id, abs(e), bounds.hilbert_coefficient(data.B, rbar, i),
                    index=i, context={"B": data.B, "rbar": rbar, "e": e})
        for i, e in enumerate(coefficients)
    ]


def check_filter_regular_bounds(
    M: GradedModulePresentation, data: FilterRegularData, instance_id: str, margin: int = 2
) -> List[Report]:
    """Ext and local cohomology dimensions, Hilbert growth and coefficients for indeg-normalized M."""
    n, d = M.ring.n, data.dim
    if d < 1:
        return []
    _require_normalized(M)
    reports: List[Report] = []
    for i in range(1, d + 1):
        ext = ext_into_ring(M, n - i)
        rbar_prev = int(data.rbar[i - 1])
        context = {"rbar_prev": rbar_prev}
        reports.append(make_report(Claim.FILTER_EXT_DIMS, instance_id, ext.indeg,
                                   bounds.filter_regular_indeg(rbar_prev, n), Relation.GE,
                                   vacuous=ext.is_zero(), index=n - i, context={**context, "quantity": "indeg"}))
        proof = make_report(Check.FILTER_EXT_INDEG_PROOF, instance_id, ext.indeg,
                            bounds.filter_regular_indeg_proof(rbar_prev, n, i), Relation.GE,
                            vacuous=ext.is_zero(), warning_only=True, index=n - i, context=context)
        if not proof.passed and not proof.vacuous:
            logger.warning(f"{instance_id}: sharper indeg bound for Ext^{n - i} fails ({ext.indeg} < {proof.rhs})")
        reports.append(proof)
        for mu in _ext_degrees(ext, margin):
            reports.extend(bound_dim_ext(M, i, mu, data, instance_id))
            reports.extend(bound_local_cohomology(M, i, -mu - n, data, instance_id))

    generators = betti_table(M).total(0)
    for mu in range(0, int(betti_table(M).reg) + margin + 1):
        H = M.hilbert_function(mu)
        reports.append(make_report(Claim.HILBERT_FILTER_GROWTH, instance_id, H,
                                   bounds.hilbert_growth(data.B, mu, d), degree=mu, context={"B": data.B}))
        reports.append(make_report(Claim.HILBERT_GENERATOR_GROWTH, instance_id, H,
                                   bounds.generator_growth(generators, mu, n), degree=mu, context={"mu": generators}))
    reports.extend(bound_hilbert_coeffs(M, data, instance_id))
    return reports


# Homological degree


def bound_hdeg(
    M: GradedModulePresentation, instance_id: str = "", calculator: Optional[HdegCalculator] = None
) -> List[Report]:
    """
    hdeg(M) against the regularity, Hilbert-polynomial and cyclic bounds, and hdeg(Ext^{n-1}(M, R)) for d >= 2.

    Args:
        M: A nonzero module
        instance_id: Identifier for the reports
        calculator: Shared memo for the hdeg recursion

    Returns:
        Reports; statements that need d >= 1 are skipped for finite length modules
    """
    instance_id = instance_id or _label(M)
    calculator = calculator or HdegCalculator()
    table = betti_table(M)
    if not table.entries:
        raise PreconditionError("The module is zero")
    n = M.ring.n
    data = hilbert_poly(M)
    d = data.dim
    value = hdeg(M, calculator).value
    reg, indeg, mu = int(table.reg), int(table.indeg), table.total(0)
    context = {"hdeg": value, "d": d, "n": n, "mu": mu, "reg": reg, "indeg": indeg}
    reports: List[Report] = []
    saturation = saturate_h0(M)
    if d >= 1:
        reports.append(make_report(Claim.HDEG_REGULARITY_BOUND, instance_id, value,
                                   bounds.hdeg_regularity(mu, reg, indeg, n, d), context=context))
        rbar = int(betti_table(saturation.quotient).reg)
        P_rbar = data.evaluate(rbar)
        reports.append(make_report(Claim.HDEG_HILBERT_BOUND, instance_id, value,
                                   bounds.hdeg_hilbert(saturation.h0_length, P_rbar, d),
                                   context={**context, "rbar": rbar, "P_rbar": P_rbar, "h0": saturation.h0_length}))
        if d >= 2:
            H = saturation.quotient.hilbert_function(rbar)
            ext = ext_into_ring(M, n - 1)
            reports.append(make_report(Claim.HDEG_EXT_TOP_MINUS_ONE, instance_id,
                                       hdeg(ext.presentation, calculator).value,
                                       bounds.hdeg_ext_top_minus_one(H, data.degree),
                                       vacuous=ext.is_zero(), index=n - 1,
                                       context={"H_rbar": H, "degree": data.degree, "rbar": rbar}))
    if M.minimalized().gens.twists == (0,):
        reports.append(make_report(Claim.HDEG_CYCLIC_BOUND, instance_id, value, bounds.hdeg_cyclic(reg, n, d),
                                   context=context))
    return reports


def check_hdeg_identities(
    M: GradedModulePresentation, instance_id: str, calculator: Optional[HdegCalculator] = None
) -> List[Report]:
    """Cohen-Macaulay characterization, the saturation identity, degree sums, small dimension and reg <= gen + hdeg - 1."""
    calculator = calculator or HdegCalculator()
    table = betti_table(M)
    if not table.entries:
        return []
    n = M.ring.n
    data = hilbert_poly(M)
    d = data.dim
    value = hdeg(M, calculator).value
    saturation = saturate_h0(M)
    reg, indeg, mu, gen = int(table.reg), int(table.indeg), table.total(0), int(table.b(0))
    depth = n - table.pd
    context = {"hdeg": value, "degree": data.degree, "d": d, "depth": depth}

    reports = [
        make_report(Claim.HDEG_DEGREE_BOUND, instance_id, value, data.degree, Relation.GE, context=context),
        make_report(Check.HDEG_COHEN_MACAULAY, instance_id, int(value == data.degree), int(depth == d),
                    Relation.EQ, context=context),
        make_report(Claim.HDEG_SATURATION, instance_id, value,
                    hdeg(saturation.quotient, calculator).value + saturation.h0_length, Relation.EQ,
                    context={"h0": saturation.h0_length}),
        make_report(Claim.HDEG_REG_BOUND, instance_id, reg, bounds.hdeg_reg(gen, value),
                    context={"gen": gen, "hdeg": value}),
    ]
    degree_sum = sum(M.hilbert_function(t) for t in range(indeg, reg + 1))
    if d >= 1:
        reports.append(make_report(Claim.HDEG_DEGREE_SUM, instance_id, data.degree + saturation.h0_length,
                                   degree_sum, index=1, context={"h0": saturation.h0_length}))
    reports.append(make_report(Claim.HDEG_DEGREE_SUM, instance_id, degree_sum,
                               bounds.degree_sum_upper(mu, reg, indeg, n), index=2, context={"mu": mu}))
    if d <= 1:
        rbar = betti_table(saturation.quotient).reg
        reports.append(make_report(Claim.HDEG_SMALL_DIM, instance_id, value,
                                   bounds.hdeg_small_dim(saturation.h0_length, _saturated_hilbert(M, rbar)),
                                   Relation.EQ, context={"rbar": rbar, "h0": saturation.h0_length}))
    return reports


def failures(reports: Sequence[Report]) -> List[Report]:
    return [report for report in reports if report.failed]
