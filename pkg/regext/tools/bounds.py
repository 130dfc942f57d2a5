"""
Bound Formulas for regext

Right-hand sides of the regularity, Ext, Tor, Hilbert-coefficient and
homological-degree bounds, as pure functions of already computed integers.
Every value is an exact Python int (or an extended int for regularities of
possibly zero modules); exponents such as 2^((d-1)^2) are evaluated in
arbitrary precision.

Conventions: C(a, b) = 0 whenever a < b or b < 0, reg(0) = -inf and
indeg(0) = +inf.
"""

from typing import Callable, Dict, List, Union

from pydantic import BaseModel, Field

from regext.utils.free_modules import FreeComplex
from regext.utils.numbers import NEG_INF, POS_INF, ExtendedInt, binomial, extended_max
from regext.utils.resolution import BettiTable
from regext.utils.ring import AlgebraError

Extended = Union[int, float]


class PreconditionError(AlgebraError):
    """Raised when a bound or a checker is used outside its hypotheses."""
    pass


def _square_exponent(n: int) -> int:
    """2^(n-2), the exponent of the Castelnuovo-type bounds."""
    if n < 2:
        raise PreconditionError(f"Regularity bounds for complexes need n >= 2, got n = {n}")
    return 2 ** (n - 2)


def hdeg_exponent(d: int) -> int:
    """2^((d-1)^2)."""
    return 2 ** ((d - 1) ** 2)


# Complexes of free modules


class ComplexShape(BaseModel):
    """
    Shape of a cohomologically indexed complex of graded free modules.

    f^i and b^i are the smallest and largest generator degrees of F^i, T^i
    its rank. Indices absent from the maps stand for zero modules.
    """

    n: int = Field(..., description="Number of variables")
    f: Dict[int, ExtendedInt] = Field(default_factory=dict, description="i -> f^i = indeg(F^i)")
    b: Dict[int, ExtendedInt] = Field(default_factory=dict, description="i -> b^i = reg(F^i)")
    T: Dict[int, int] = Field(default_factory=dict, description="i -> T^i = rank(F^i)")

    @classmethod
    def from_complex(cls, C: FreeComplex) -> "ComplexShape":
        shape = cls(n=C.ring.n)
        for i in C.indices():
            twists = C.module(i).twists
            if twists:
                shape.f[i] = min(twists)
                shape.b[i] = max(twists)
                shape.T[i] = len(twists)
        return shape

    @classmethod
    def equal_shift(cls, n: int, r: int, ranks: Dict[int, int]) -> "ComplexShape":
        """F^i = R(r + i)^{T_i}: every generator of F^i sits in degree -r - i."""
        shape = cls(n=n)
        for i, rank in ranks.items():
            if rank:
                shape.f[i] = shape.b[i] = -r - i
                shape.T[i] = rank
        return shape

    def rank(self, i: int) -> int:
        return self.T.get(i, 0)

    def low(self, i: int) -> Extended:
        return self.f.get(i, POS_INF)

    def high(self, i: int) -> Extended:
        return self.b.get(i, NEG_INF)


def _cokernel_reg(shape: ComplexShape, j: int) -> Extended:
    """Castelnuovo-type bound for reg coker(d^j: F^j -> F^{j+1})."""
    if not shape.rank(j + 1):
        return NEG_INF
    if not shape.rank(j) or shape.high(j) < shape.low(j + 1):
        # d^j is zero, so its cokernel is F^{j+1}
        return shape.high(j + 1)
    exponent = _square_exponent(shape.n)
    base = shape.rank(j + 1) * int(shape.high(j) - shape.low(j + 1))
    return base**exponent + int(shape.low(j + 1))


def cokernel_bound_holds(n: int) -> bool:
    """
    Whether the cokernel term of bound_reg_homology is an upper bound in n variables.

    With n = 2 the exponent is 1 and the term can fall short: R(-1)/(x^3, y^3)
    has reg 4 - 7 = -3 for its top dual homology while the term gives 3 - 7 = -4.
    Reports computed with n = 2 are therefore warnings only.
    """
    return n >= 3


def bound_indeg_homology(shape: ComplexShape, i: int) -> Extended:
    """indeg H^i(F) >= f^i."""
    return shape.low(i)


def bound_reg_homology(shape: ComplexShape, i: int) -> Extended:
    """
    Upper bound for reg H^i(F).

    max{b^i, b^{i+1}, [T^{i+1}(b^i - f^{i+1})]^{2^{n-2}} + f^{i+1} + 2,
    [T^i(b^{i-1} - f^i)]^{2^{n-2}} + f^i}; terms standing for zero modules
    drop out, and a cokernel term of a map that must vanish for degree
    reasons is replaced by the regularity of its target.
    """
    _square_exponent(shape.n)
    terms: List[Extended] = [shape.high(i), shape.high(i + 1)]
    upper = _cokernel_reg(shape, i)
    if upper != NEG_INF:
        terms.append(upper + 2)
    terms.append(_cokernel_reg(shape, i - 1))
    return extended_max(terms)


def bound_graded_dim_homology(shape: ComplexShape, i: int, mu: int) -> int:
    """dim H^i(F)_mu <= T^i C(mu - f^i + n - 1, n - 1)."""
    if not shape.rank(i):
        return 0
    n = shape.n
    return shape.rank(i) * binomial(mu - int(shape.low(i)) + n - 1, n - 1)


def bound_tor_homology(shape: ComplexShape, i: int, j: int, mu: int) -> int:
    """dim Tor_j(H^i(F), k)_mu <= T^i C(n, j) C(mu - f^i - j + n - 1, n - 1)."""
    if not shape.rank(i):
        return 0
    n = shape.n
    return shape.rank(i) * binomial(n, j) * binomial(mu - int(shape.low(i)) - j + n - 1, n - 1)


def bound_equal_shift_reg(n: int, r: int, i: int, T_i: int, T_next: int) -> int:
    """reg H^i(F) <= max{T_{i+1}^{2^{n-2}} + 1, T_i^{2^{n-2}}} - r - i for F^i = R(r+i)^{T_i}."""
    exponent = _square_exponent(n)
    return max(T_next**exponent + 1, T_i**exponent) - r - i


# Ext between two modules


def hom_ranks(table_M: BettiTable, table_N: BettiTable, i: int) -> int:
    """T^i = sum over p - q = i of T_p^M T_q^N."""
    return sum(table_M.total(q + i) * table_N.total(q) for q in range(0, table_N.pd + 1))


def ext_pair_indeg(indeg_N: int, reg_M: int, i: int) -> int:
    """e_i = indeg(N) - reg(M) - i, a lower bound for indeg Ext^i(M, N)."""
    return indeg_N - reg_M - i


def ext_pair_reg(n: int, r_M: int, r_N: int, T_i: int, T_next: int, delta: int) -> int:
    """(r_M + r_N + 1)^{2^{n-2}} max{T^i, T^{i+1}}^{2^{n-2}} + 1 - delta, bounding reg Ext^i(M, N) + i."""
    exponent = _square_exponent(n)
    return (r_M + r_N + 1) ** exponent * max(T_i, T_next) ** exponent + 1 - delta


def ext_pair_graded_dim(n: int, T_i: int, e_i: int, mu: int) -> int:
    """dim Ext^i(M, N)_mu <= T^i C(mu - e_i + n - 1, n - 1)."""
    return T_i * binomial(mu - e_i + n - 1, n - 1)


def ext_pair_tor_dim(n: int, T_i: int, e_i: int, j: int, mu: int) -> int:
    """dim Tor_j(Ext^i(M, N), k)_mu <= T^i C(n, j) C(mu - e_i - j + n - 1, n - 1)."""
    return T_i * binomial(n, j) * binomial(mu - e_i - j + n - 1, n - 1)


# Tor of a single module


def tor_total_dim(n: int, i: int, mu: int, reg: int, indeg: int) -> int:
    """dim Tor_i(M, k) <= mu(M) C(n, i) C(reg - indeg + n, n)."""
    return mu * binomial(n, i) * binomial(reg - indeg + n, n)


def tor_graded_dim(n: int, i: int, mu: int, degree: int) -> int:
    """For indeg M >= 0: dim Tor_i(M, k)_degree <= C(n, i) mu(M) C(degree - i + n - 1, n - 1)."""
    return binomial(n, i) * mu * binomial(degree - i + n - 1, n - 1)


def betti_from_hilbert_formula(n: int, d: int, i: int, r: int, delta_value: Callable[[int, int], int]) -> int:
    """
    dim Tor_i(M, k) for M with reg = indeg = r and H^0_m(M) = 0.

    Args:
        n: Number of variables
        d: dim M
        i: Homological degree
        r: The common value of reg and indeg
        delta_value: (l, t) -> Delta^l P_M(t)

    Returns:
        sum over 0 <= l <= min(i, d - 1) of (-1)^l C(n - l - 1, i - l) Delta^l P_M(r + l)
    """
    return sum(
        (-1) ** l * binomial(n - l - 1, i - l) * delta_value(l, r + l)
        for l in range(0, min(i, d - 1) + 1)
    )


def linear_resolution_recursion(n: int, i: int, hilbert_at_r: int, tor_restricted: int) -> int:
    """C(n - 1, i) P_M(r) - dim Tor_{i-1}^{R/l}(M', k)."""
    return binomial(n - 1, i) * hilbert_at_r - tor_restricted


# Ext into the ring


def C_dj(d: int, j: int) -> int:
    """C_{d,j} = max{C(d-1, j), C(d-1, j+1)}."""
    return max(binomial(d - 1, j), binomial(d - 1, j + 1))


def truncation_ext_top_minus_one(truncated_reg: Extended, indeg: int, n: int, printed: bool = False) -> Extended:
    """
    reg Ext^{n-1}(M, R) <= max{reg Ext^{n-1}(M_{>=t}, R), -indeg(M) - n + 1}.

    Ext^{n-1}(M, R) embeds in Ext^{n-1}(M_{>=t}, R) with cokernel inside
    Ext^n(M/M_{>=t}, R), whose regularity is at most -indeg(M) - n. The
    cokernel term therefore moves the bound by one. printed=True drops that
    shift; R/(x) over k[x, y] with t = 2 gives -1 against -2.
    """
    floor = -indeg - n if printed else -indeg - n + 1
    return extended_max([truncated_reg, floor])


def ext_ring_small_dim(indeg: int, i: int) -> int:
    """For d < 2: reg Ext^i(M, R) <= -indeg(M) - i."""
    return -indeg - i


def ext_ring_top(indeg: int) -> int:
    """reg Ext^n(M, R) + n <= -indeg(M)."""
    return -indeg


def ext_ring_top_minus_one(P_rbar: int, delta_P_rbar: int, rbar: int, indeg: int) -> int:
    """reg Ext^{n-1}(M, R) + n - 1 <= max{P_M(rbar) - Delta P_M(rbar) - rbar, -indeg(M) - 1}."""
    return max(P_rbar - delta_P_rbar - rbar, -indeg - 1)


def ext_ring_lower(d: int, i: int, P_rbar: int, rbar: int) -> int:
    """For i > 1: reg Ext^{n-i}(M, R) + n - i <= [C_{d,d-i} P_M(rbar)]^{2^{d-2}} - rbar + 1."""
    if d < 2 or i <= 1:
        raise PreconditionError(f"Lower Ext bound needs d >= 2 and i > 1, got d = {d}, i = {i}")
    return (C_dj(d, d - i) * P_rbar) ** (2 ** (d - 2)) - rbar + 1


def ext_ring_vanishing(d: int, j: int) -> int:
    """dim Ext^{n-j}(M, R) <= j; the module vanishes for j > d."""
    return j


# Filter-regular sequences


def filter_regular_indeg(rbar_prev: int, n: int) -> int:
    """indeg Ext^{n-i}(M, R) >= -rbar_{i-1} - n + 1."""
    return -rbar_prev - n + 1


def filter_regular_indeg_proof(rbar_prev: int, n: int, i: int) -> int:
    """The sharper -rbar_{i-1} - n + i shown along the way."""
    return -rbar_prev - n + i


def filter_regular_dim(mu: int, rbar_prev: int, n: int, i: int, delta_value: int) -> int:
    """dim Ext^{n-i}(M, R)_mu <= C(mu + rbar_{i-1} + n - 1, i - 1) Delta^{i-1} P_M(rbar_i - 1)."""
    return binomial(mu + rbar_prev + n - 1, i - 1) * delta_value


def filter_regular_hilbert_dim(mu: int, rbar: int, n: int, i: int, hilbert_value: int) -> int:
    """C(mu + rbar + n - 1, i - 1) H(rbar) for rbar = rbar_{i-1} or rbar = reg(Mbar)."""
    return binomial(mu + rbar + n - 1, i - 1) * hilbert_value


def filter_regular_length(mu: int, reg: int, n: int, d: int) -> int:
    """
    B <= mu(M) C(reg + n - d, n - d) for indeg M = 0.

    M/(l_1, ..., l_d)M is generated by mu(M) elements of degree >= 0 over
    n - d variables and vanishes above reg(M). Passing reg(Mbar) in place of
    reg(M) gives the stated form, which R/(x^2, xy) violates: B = 2 > 1.
    """
    return mu * binomial(reg + n - d, n - d)


def hilbert_growth(B: int, mu: int, d: int) -> int:
    """For indeg M = 0: H_M(mu) <= B C(mu + d - 1, d - 1)."""
    return B * binomial(mu + d - 1, d - 1)


def generator_growth(generators: int, mu: int, n: int) -> int:
    """For indeg M = 0: H_M(mu) <= mu(M) C(mu + n - 1, n - 1)."""
    return generators * binomial(mu + n - 1, n - 1)


def local_cohomology_ext_dim(B: int, rbar_prev: int, d: int, i: int, n: int, mu: int) -> int:
    """dim Ext^{n-i}(M, R)_mu <= B C(rbar_{i-1} + d - i, d - i) C(mu + rbar_{i-1} + n - 1, i - 1)."""
    return B * binomial(rbar_prev + d - i, d - i) * binomial(mu + rbar_prev + n - 1, i - 1)


def local_cohomology_dim(B: int, rbar_prev: int, d: int, i: int, mu: int) -> int:
    """dim H^i_m(M)_mu <= B C(rbar_{i-1} + d - i, d - i) C(-mu + rbar_{i-1} - 1, i - 1)."""
    return B * binomial(rbar_prev + d - i, d - i) * binomial(-mu + rbar_prev - 1, i - 1)


def hilbert_coefficient(B: int, rbar: int, i: int) -> int:
    """|e_i(M)| <= B (reg(Mbar) + 1)^i."""
    return B * (rbar + 1) ** i


# Homological degree


def hdeg_regularity(mu: int, reg: int, indeg: int, n: int, d: int) -> int:
    """hdeg(M) <= [mu(M) C(reg - indeg + n, n)]^{2^{(d-1)^2}}."""
    return (mu * binomial(reg - indeg + n, n)) ** hdeg_exponent(d)


def hdeg_hilbert(h0_length: int, P_rbar: int, d: int) -> int:
    """hdeg(M) <= dim H^0_m(M) + P_M(rbar)^{2^{(d-1)^2}}."""
    return h0_length + P_rbar ** hdeg_exponent(d)


def hdeg_cyclic(reg: int, n: int, d: int) -> int:
    """hdeg(R/I) <= C(reg(R/I) + n, n)^{2^{(d-1)^2}}."""
    return binomial(reg + n, n) ** hdeg_exponent(d)


def hdeg_small_dim(h0_length: int, hilbert_rbar: int) -> int:
    """For d <= 1: hdeg(M) = dim H^0_m(M) + H_Mbar(rbar)."""
    return h0_length + hilbert_rbar


def hdeg_ext_top_minus_one(hilbert_rbar: int, degree: int) -> int:
    """For d >= 2: hdeg(Ext^{n-1}(M, R)) <= (H_Mbar(rbar) - deg M) H_Mbar(rbar)."""
    return (hilbert_rbar - degree) * hilbert_rbar


def degree_sum_upper(mu: int, reg: int, indeg: int, n: int) -> int:
    """sum of H_M over [indeg, reg] <= mu(M) C(reg - indeg + n, n)."""
    return mu * binomial(reg - indeg + n, n)


def hdeg_reg(gen: int, hdeg_value: int) -> int:
    """reg(M) <= gen(M) + hdeg(M) - 1."""
    return gen + hdeg_value - 1


