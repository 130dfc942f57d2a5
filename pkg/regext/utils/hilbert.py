"""
Hilbert Functions, Series and Polynomials for regext

The Hilbert series of M is read off the Betti table as N(z)/(1-z)^n. After
cancelling the factors (1-z) the reduced numerator Q(z) gives the dimension d,
the degree Q(1) and the Hilbert polynomial, which is kept as an exact sympy
polynomial in t. The coefficients e_0..e_{d-1} are taken in the basis
C(t+d-1-i, d-1-i) with alternating signs.
"""

import logging
import math
from collections import defaultdict
from typing import TYPE_CHECKING, Dict, List, Optional

import sympy
from pydantic import BaseModel, Field, PrivateAttr

from .numbers import binomial
from .presentation import GradedModulePresentation
from .resolution import BettiTable, betti_table
from .ring import AlgebraError

if TYPE_CHECKING:
    from .cohomology import LocalCohomologyTable

logger = logging.getLogger(__name__)

T = sympy.Symbol("t")
Z = sympy.Symbol("z")


class WindowError(AlgebraError):
    """Raised when a degree lies outside a computed degree window."""
    pass


def binomial_poly(shift: int, k: int) -> sympy.Poly:
    """C(t + shift, k) as a polynomial in t."""
    poly = sympy.Poly(1, T, domain="QQ")
    for m in range(k):
        poly = poly * sympy.Poly(T + shift - m, T, domain="QQ")
    return poly.mul_ground(sympy.Rational(1, math.factorial(k)))


def delta_poly(P: sympy.Poly, i: int) -> sympy.Poly:
    """
    The i-fold difference, Delta P(t) = P(t) - P(t-1).

    Args:
        P: Polynomial in t
        i: Number of differences; Delta^0 P = P

    Returns:
        Delta^i P
    """
    if i < 0:
        raise AlgebraError(f"Difference order must be nonnegative, got {i}")
    result = P
    for _ in range(i):
        result = result - result.shift(-1)
    return result


def evaluate_poly(P: sympy.Poly, t: int) -> int:
    value = sympy.Rational(P.eval(t)) if not P.is_zero else sympy.Rational(0)
    if value.q != 1:
        raise AlgebraError(f"Hilbert polynomial takes the non-integer value {value} at t={t}")
    return int(value.p)


class HilbertData(BaseModel):
    """Hilbert series numerator, Hilbert polynomial, coefficients, dimension and degree."""

    n: int = Field(..., description="Number of variables")
    numerator: Dict[int, int] = Field(
        default_factory=dict, description="Series numerator over (1-z)^n, exponent -> coefficient"
    )
    reduced_numerator: Dict[int, int] = Field(
        default_factory=dict, description="Series numerator over (1-z)^d"
    )
    dim: int = Field(0, description="Krull dimension d (0 for finite length and for M = 0)")
    degree: int = Field(0, description="e_0 for d >= 1, length for d = 0")
    coefficients: List[int] = Field(default_factory=list, description="Hilbert coefficients e_0..e_{d-1}")
    polynomial: List[str] = Field(
        default_factory=list, description="Coefficients of P_M(t) from t^0 upwards, as exact rationals"
    )

    _poly: sympy.Poly = PrivateAttr(default=None)

    @property
    def poly(self) -> sympy.Poly:
        return self._poly

    def evaluate(self, t: int) -> int:
        """P_M(t)."""
        return evaluate_poly(self._poly, t)

    def delta(self, i: int) -> sympy.Poly:
        return delta_poly(self._poly, i)

    def delta_value(self, i: int, t: int) -> int:
        """Delta^i P_M(t)."""
        return evaluate_poly(self.delta(i), t)


def hilbert_function(M: GradedModulePresentation, t: int) -> int:
    """
    dim_k M_t, by counting standard monomials.

    Args:
        M: The module
        t: The degree

    Returns:
        The number of terms of degree t outside the lead-term module
    """
    return M.hilbert_function(t)


def hilbert_function_from_betti(table: BettiTable, t: int) -> int:
    """Sum over the Betti table of (-1)^i beta_{i,j} C(t-j+n-1, n-1)."""
    n = table.n
    return sum(
        (-1) ** i * beta * binomial(t - j + n - 1, n - 1)
        for i, j, beta in table.pairs()
    )


def _binomial_coefficients(P: sympy.Poly, d: int) -> List[int]:
    """e_0..e_{d-1} with P(t) = sum (-1)^i e_i C(t+d-1-i, d-1-i)."""
    remainder = P
    coefficients: List[int] = []
    for i in range(d):
        k = d - 1 - i
        top = remainder.coeff_monomial(T**k) if not remainder.is_zero else 0
        a_i = sympy.Rational(top) * math.factorial(k)
        if a_i.q != 1:
            raise AlgebraError(f"Non-integral Hilbert coefficient {a_i}")
        remainder = remainder - binomial_poly(d - 1 - i, k).mul_ground(a_i)
        coefficients.append((-1) ** i * int(a_i))
    if not remainder.is_zero:
        raise AlgebraError(f"Hilbert polynomial not spanned by the binomial basis: {remainder}")
    return coefficients


def hilbert_poly(M: GradedModulePresentation) -> HilbertData:
    """
    Hilbert series, polynomial, coefficients, dimension and degree of M.

    Args:
        M: The module

    Returns:
        HilbertData computed from the Betti table
    """
    if "hilbert" in M.cache:
        return M.cache["hilbert"]
    n = M.ring.n
    numerator: Dict[int, int] = defaultdict(int)
    for i, j, beta in betti_table(M).pairs():
        numerator[j] += (-1) ** i * beta
    numerator = {j: c for j, c in sorted(numerator.items()) if c}

    if not numerator:
        data = HilbertData(n=n)
        data._poly = sympy.Poly(0, T, domain="QQ")
        M.cache["hilbert"] = data
        return data

    shift = min(numerator)
    reduced = sympy.Poly(sum(c * Z ** (j - shift) for j, c in numerator.items()), Z, domain="ZZ")
    one_minus_z = sympy.Poly(1 - Z, Z, domain="ZZ")
    order = 0
    while reduced.eval(1) == 0:
        reduced = reduced.exquo(one_minus_z)
        order += 1
    d = n - order
    if d < 0:
        raise AlgebraError(f"Series numerator vanishes to order {order} > n = {n} at z = 1")

    reduced_numerator: Dict[int, int] = {}
    for (k,), c in reduced.terms():
        if c:
            reduced_numerator[k + shift] = int(c)
    reduced_numerator = dict(sorted(reduced_numerator.items()))

    P = sympy.Poly(0, T, domain="QQ")
    if d >= 1:
        for k, c in reduced_numerator.items():
            P = P + binomial_poly(d - 1 - k, d - 1).mul_ground(c)

    degree = int(reduced.eval(1))
    data = HilbertData(
        n=n,
        numerator=numerator,
        reduced_numerator=reduced_numerator,
        dim=d,
        degree=degree,
        coefficients=_binomial_coefficients(P, d),
        polynomial=[str(P.coeff_monomial(T**k)) for k in range(P.degree() + 1)] if not P.is_zero else [],
    )
    data._poly = P
    logger.debug(f"Hilbert data of {M.label or 'module'}: d={d}, degree={degree}, e={data.coefficients}")
    M.cache["hilbert"] = data
    return data


def grothendieck_serre_check(
    M: GradedModulePresentation,
    t: int,
    local_cohomology: Optional["LocalCohomologyTable"] = None,
) -> bool:
    """
    H_M(t) - P_M(t) == sum_i (-1)^i dim H^i_m(M)_t.

    Args:
        M: The module
        t: The degree
        local_cohomology: Precomputed table; computed for the single degree t
            when omitted

    Returns:
        True iff both sides agree

    Raises:
        WindowError: If the table does not cover t
    """
    if local_cohomology is None:
        from .cohomology import local_cohomology_dims

        local_cohomology = local_cohomology_dims(M, (t, t))
    if not local_cohomology.covers(t):
        raise WindowError(f"Degree {t} lies outside the local cohomology window {local_cohomology.window}")
    lhs = hilbert_function(M, t) - hilbert_poly(M).evaluate(t)
    rhs = sum((-1) ** i * local_cohomology.dim(i, t) for i in range(local_cohomology.top + 1))
    return lhs == rhs
