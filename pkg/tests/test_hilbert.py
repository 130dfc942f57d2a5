"""
Tests for Hilbert series, polynomials and coefficients.
"""

import pytest

from regext.utils.hilbert import (
    binomial_poly,
    delta_poly,
    evaluate_poly,
    grothendieck_serre_check,
    hilbert_function_from_betti,
    hilbert_poly,
)
from regext.utils.presentation import GradedModulePresentation
from regext.utils.resolution import betti_table
from regext.utils.ring import AlgebraError


@pytest.mark.unit
def test_binomial_polynomials():
    assert evaluate_poly(binomial_poly(0, 2), 4) == 6
    assert evaluate_poly(binomial_poly(1, 1), 3) == 4
    assert evaluate_poly(binomial_poly(0, 0), -7) == 1


@pytest.mark.unit
def test_differences():
    P = binomial_poly(2, 2)
    assert evaluate_poly(delta_poly(P, 1), 5) == 6
    assert evaluate_poly(delta_poly(P, 2), 5) == 1
    assert delta_poly(P, 3).is_zero
    with pytest.raises(AlgebraError):
        delta_poly(P, -1)


@pytest.mark.unit
def test_polynomial_ring_in_two_variables(reference):
    data = hilbert_poly(reference("free_xy"))
    assert data.dim == 2
    assert data.degree == 1
    assert data.polynomial == ["1", "1"]
    assert data.coefficients == [1, 0]
    assert data.numerator == {0: 1}
    assert data.evaluate(10) == 11
    assert data.delta_value(1, 4) == 1


@pytest.mark.unit
def test_twisted_cubic_polynomial(reference):
    """P(t) = 3t + 1, so e_0 = 3 and e_1 = 2."""
    data = hilbert_poly(reference("twisted_cubic"))
    assert data.dim == 2
    assert data.degree == 3
    assert data.polynomial == ["1", "3"]
    assert data.coefficients == [3, 2]
    assert data.reduced_numerator == {0: 1, 1: 2}


@pytest.mark.unit
def test_line_with_embedded_point(reference):
    M = reference("x2_xy")
    data = hilbert_poly(M)
    assert data.dim == 1
    assert data.degree == 1
    assert data.polynomial == ["1"]
    assert data.numerator == {0: 1, 2: -2, 3: 1}
    assert [M.hilbert_function(t) for t in range(5)] == [1, 2, 1, 1, 1]


@pytest.mark.unit
def test_finite_length_modules(reference, maximal_power, ring2):
    data = hilbert_poly(reference("x2_y2"))
    assert data.dim == 0
    assert data.degree == 4
    assert data.polynomial == []
    assert data.evaluate(10) == 0
    assert hilbert_poly(maximal_power(ring2, 3)).degree == 6


@pytest.mark.unit
def test_zero_module(ring2):
    data = hilbert_poly(GradedModulePresentation.zero(ring2))
    assert data.dim == 0
    assert data.degree == 0
    assert data.numerator == {}


@pytest.mark.unit
@pytest.mark.parametrize("name", ["x2_xy", "maximal_ideal_xy", "mixed_twists_xy", "line_xyz"])
def test_betti_table_gives_the_hilbert_function(reference, name):
    M = reference(name)
    table = betti_table(M)
    for t in range(-2, 7):
        assert hilbert_function_from_betti(table, t) == M.hilbert_function(t)


@pytest.mark.integration
@pytest.mark.parametrize("name", ["x2_xy", "maximal_ideal_xy", "x2_y2"])
def test_grothendieck_serre_formula(reference, name):
    M = reference(name)
    for t in range(-3, 5):
        assert grothendieck_serre_check(M, t)
