"""
Filter-Regular Sequences and the Homological Degree for regext

Generic linear forms are drawn with uniformly random coefficients in F_p from
a seeded numpy generator and then certified: l is filter-regular on M_j when
the Hilbert polynomial of M_j / l M_j is the first difference of that of M_j,
which is equivalent to (0 :_{M_j} l) having finite length. A failed draw is
retried up to a configurable limit.

The homological degree follows its recursive definition over the deficiency
modules Ext^{n+i+1-d}(M, R), memoized on the canonical presentation key.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .cohomology import ext_into_ring
from .hilbert import delta_poly, hilbert_poly
from .numbers import NEG_INF, ExtendedInt, binomial
from .presentation import GradedModulePresentation
from .resolution import InternalConsistencyError, regularity
from .ring import AlgebraError, Polynomial, PolynomialRing
from .saturation import saturate_h0

logger = logging.getLogger(__name__)

DEFAULT_RETRIES = 32


class FilterRegularError(AlgebraError):
    """Raised when no certified linear form is found within the retry limit."""
    pass


class FilterRegularData(BaseModel):
    """A certified filter-regular sequence l_1..l_d and the quantities derived from it."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    seed: int = Field(..., description="Seed of the random generator")
    dim: int = Field(..., description="d = dim M, the length of the sequence")
    forms: List[List[int]] = Field(default_factory=list, description="Coefficient vectors of l_1..l_d")
    attempts: List[int] = Field(default_factory=list, description="Draws needed for each form")
    rbar: List[ExtendedInt] = Field(default_factory=list, description="rbar_j = reg(M_j / H^0_m(M_j)), j = 0..d")
    B: int = Field(0, description="Length of M_d = M / (l_1..l_d) M")
    quotients: List[Any] = Field(default_factory=list, exclude=True, description="M_0 = M, M_1, ..., M_d")


class HdegTerm(BaseModel):
    """One summand C(d-1, i) * hdeg(Ext^{n+i+1-d}(M, R)) of the recursion."""

    i: int = Field(..., description="Summation index")
    ext_index: int = Field(..., description="n + i + 1 - d")
    weight: int = Field(..., description="C(d-1, i)")
    ext_dim: int = Field(..., description="Dimension of the deficiency module")
    hdeg: int = Field(..., description="hdeg of the deficiency module")
    contribution: int = Field(..., description="weight * hdeg")


class HdegResult(BaseModel):
    """hdeg(M) with its breakdown."""

    value: int = Field(..., description="hdeg(M)")
    degree: int = Field(..., description="deg(M) (length when d = 0)")
    dim: int = Field(..., description="d = dim M")
    terms: List[HdegTerm] = Field(default_factory=list, description="Nonzero deficiency contributions")


def linear_form(ring: PolynomialRing, coefficients: Sequence[int]) -> Polynomial:
    terms = {}
    for index, c in enumerate(coefficients):
        exps = tuple(1 if k == index else 0 for k in range(ring.n))
        terms[exps] = int(c)
    return Polynomial(ring, terms)


def random_linear_form(ring: PolynomialRing, rng: np.random.Generator) -> List[int]:
    while True:
        coefficients = [int(c) for c in rng.integers(0, ring.p, size=ring.n)]
        if any(coefficients):
            return coefficients


def annihilator_dims(M: GradedModulePresentation, Q: GradedModulePresentation, degrees: Sequence[int]) -> Dict[int, int]:
    """dim (0 :_M l)_s for Q = M / lM, from 0 -> (0:l)(-1) -> M(-1) -> M -> Q -> 0."""
    return {
        s: M.hilbert_function(s) - M.hilbert_function(s + 1) + Q.hilbert_function(s + 1)
        for s in degrees
    }


def is_filter_regular(M: GradedModulePresentation, form: Polynomial) -> bool:
    """
    Certify that (0 :_M form) has finite length.

    Args:
        M: A nonzero module
        form: A linear form

    Returns:
        True iff P_{M/lM} = Delta P_M and (0 :_M l) vanishes just above the
        regularity of M and M/lM
    """
    Q = M.quotient_by_linear_form(form)
    if hilbert_poly(Q).poly != delta_poly(hilbert_poly(M).poly, 1):
        return False
    top = max(regularity(M), regularity(Q))
    if top == NEG_INF:
        return True
    start = int(top) + 1
    return all(v == 0 for v in annihilator_dims(M, Q, [start, start + 1]).values())


def is_nonzerodivisor(M: GradedModulePresentation, form: Polynomial) -> bool:
    """(0 :_M form) = 0, checked in every degree where it could be nonzero."""
    if M.is_zero():
        return True
    if not is_filter_regular(M, form):
        return False
    Q = M.quotient_by_linear_form(form)
    low = min(M.minimalized().gens.twists) - 1
    high = int(max(regularity(M), regularity(Q))) + 1
    return all(v == 0 for v in annihilator_dims(M, Q, range(low, high + 1)).values())


def find_nonzerodivisor(
    M: GradedModulePresentation, seed: int, retries: int = DEFAULT_RETRIES
) -> List[int]:
    """
    A random linear non-zero-divisor on M.

    Raises:
        FilterRegularError: If none is found within the retry limit (for
            instance when depth M = 0)
    """
    rng = np.random.default_rng(seed)
    for attempt in range(1, retries + 1):
        coefficients = random_linear_form(M.ring, rng)
        if is_nonzerodivisor(M, linear_form(M.ring, coefficients)):
            logger.debug(f"Non-zero-divisor found after {attempt} draws")
            return coefficients
    raise FilterRegularError(
        f"No linear non-zero-divisor on {M.label or 'module'} after {retries} draws "
        f"(p = {M.ring.p}); the module may have depth 0"
    )


def filter_regular_sequence(
    M: GradedModulePresentation, seed: int, retries: int = DEFAULT_RETRIES
) -> FilterRegularData:
    """
    Draw and certify a filter-regular sequence of d = dim M linear forms.

    Args:
        M: The module
        seed: Seed for numpy's default_rng
        retries: Draws allowed per form

    Returns:
        FilterRegularData with the forms, the quotients M_j, rbar_j and B

    Raises:
        FilterRegularError: If a form cannot be certified within the limit
    """
    cache_key = ("filter_regular", seed, retries)
    if cache_key in M.cache:
        return M.cache[cache_key]
    rng = np.random.default_rng(seed)
    d = hilbert_poly(M).dim if not M.is_zero() else 0
    quotients = [M]
    forms: List[List[int]] = []
    attempts: List[int] = []
    for j in range(d):
        current = quotients[-1]
        for attempt in range(1, retries + 1):
            coefficients = random_linear_form(M.ring, rng)
            form = linear_form(M.ring, coefficients)
            if is_filter_regular(current, form):
                logger.debug(f"l_{j + 1} accepted after {attempt} draws: {form}")
                forms.append(coefficients)
                attempts.append(attempt)
                quotients.append(current.quotient_by_linear_form(form))
                break
            logger.debug(f"l_{j + 1} draw {attempt} rejected: {form}")
        else:
            raise FilterRegularError(
                f"No filter-regular form l_{j + 1} on {M.label or 'module'} after {retries} draws "
                f"(p = {M.ring.p})"
            )

    rbar = [regularity(saturate_h0(Mj).quotient) for Mj in quotients]
    B = hilbert_poly(quotients[-1]).degree
    data = FilterRegularData(
        seed=seed, dim=d, forms=forms, attempts=attempts, rbar=rbar, B=B, quotients=quotients
    )
    M.cache[cache_key] = data
    return data


def restrict_to_hyperplane(M: GradedModulePresentation, coefficients: Sequence[int]) -> GradedModulePresentation:
    """
    M / lM as a module over the ring without the last variable x_k with c_k != 0.

    The ring map sends x_k to -(sum over i != k of c_i x_i) / c_k, which
    identifies R / l with a polynomial ring in n - 1 variables.
    """
    ring = M.ring
    field = ring.field
    k = max(index for index, c in enumerate(coefficients) if c % ring.p)
    target = PolynomialRing(p=ring.p, variables=tuple(v for index, v in enumerate(ring.variables) if index != k))
    scale = field.neg(field.inv(coefficients[k]))
    images: List[Polynomial] = []
    for index in range(ring.n):
        if index == k:
            terms = {}
            for other, c in enumerate(coefficients):
                if other == k or c % ring.p == 0:
                    continue
                position = other if other < k else other - 1
                exps = tuple(1 if m == position else 0 for m in range(target.n))
                terms[exps] = field.mul(c, scale)
            images.append(Polynomial(target, terms))
        else:
            images.append(target.var(index if index < k else index - 1))
    return M.change_ring(images, target)


class HdegCalculator:
    """hdeg with a memo shared across the recursion of one computation."""

    def __init__(self):
        self.memo: Dict[Any, HdegResult] = {}
        self.logger = logging.getLogger(__name__)

    def compute(self, M: GradedModulePresentation) -> HdegResult:
        if M.is_zero():
            return HdegResult(value=0, degree=0, dim=0)
        key = M.canonical_key()
        if key in self.memo:
            return self.memo[key]

        n = M.ring.n
        data = hilbert_poly(M)
        d = data.dim
        if d == 0:
            result = HdegResult(value=data.degree, degree=data.degree, dim=0)
        else:
            terms: List[HdegTerm] = []
            for i in range(d):
                ext = ext_into_ring(M, n + i + 1 - d)
                if ext.is_zero():
                    continue
                if ext.dim >= d:
                    raise InternalConsistencyError(
                        f"Deficiency module Ext^{n + i + 1 - d} has dimension {ext.dim} >= {d}"
                    )
                sub = self.compute(ext.presentation)
                weight = binomial(d - 1, i)
                terms.append(HdegTerm(
                    i=i,
                    ext_index=n + i + 1 - d,
                    weight=weight,
                    ext_dim=ext.dim,
                    hdeg=sub.value,
                    contribution=weight * sub.value,
                ))
            value = data.degree + sum(term.contribution for term in terms)
            result = HdegResult(value=value, degree=data.degree, dim=d, terms=terms)
        self.logger.debug(f"hdeg({M.label or 'module'}) = {result.value}")
        self.memo[key] = result
        return result


def hdeg(M: GradedModulePresentation, calculator: Optional[HdegCalculator] = None) -> HdegResult:
    """
    Homological degree of M.

    Args:
        M: The module
        calculator: Calculator whose memo should be reused

    Returns:
        HdegResult; length(M) when d = 0, otherwise
        deg(M) + sum_i C(d-1, i) hdeg(Ext^{n+i+1-d}(M, R))
    """
    if "hdeg" not in M.cache:
        M.cache["hdeg"] = (calculator or HdegCalculator()).compute(M)
    return M.cache["hdeg"]


def hdeg_saturation_identity(M: GradedModulePresentation) -> bool:
    """hdeg(M) == hdeg(M / H^0_m(M)) + length(H^0_m(M))."""
    saturation = saturate_h0(M)
    calculator = HdegCalculator()
    return hdeg(M, calculator).value == hdeg(saturation.quotient, calculator).value + saturation.h0_length
