"""
Tests for H^0_m(M) and the saturation M / H^0_m(M).
"""

import math

import pytest

from regext.utils.presentation import GradedModulePresentation
from regext.utils.saturation import saturate_h0, socle_vectors


@pytest.mark.unit
def test_embedded_point_is_the_finite_part(reference):
    """H^0_m(R/(x^2, xy)) is spanned by the class of x."""
    result = saturate_h0(reference("x2_xy"))
    assert result.h0_dims == {1: 1}
    assert result.h0_length == 1
    assert result.h0_end == 1
    assert result.h0_indeg == 1
    assert result.dim(1) == 1
    assert result.dim(2) == 0
    assert [result.quotient.hilbert_function(t) for t in range(5)] == [1, 1, 1, 1, 1]


@pytest.mark.unit
def test_finite_length_module_saturates_to_zero(reference):
    result = saturate_h0(reference("x2_y2"))
    assert result.h0_dims == {0: 1, 1: 2, 2: 1}
    assert result.h0_length == 4
    assert result.quotient.is_zero()


@pytest.mark.unit
def test_saturated_modules_are_unchanged(reference):
    M = reference("twisted_cubic")
    result = saturate_h0(M)
    assert result.h0_dims == {}
    assert result.h0_length == 0
    assert result.h0_end == -math.inf
    assert result.h0_indeg == math.inf
    assert result.quotient is M


@pytest.mark.unit
def test_zero_module(ring2):
    M = GradedModulePresentation.zero(ring2)
    assert saturate_h0(M).h0_length == 0
    assert saturate_h0(M).quotient is M


@pytest.mark.unit
def test_socle_of_square_of_maximal_ideal(maximal_power, ring2):
    """The socle of R/m^2 is m/m^2, in degree 1."""
    socle = socle_vectors(maximal_power(ring2, 2), 0, 3)
    assert list(socle) == [1]
    assert len(socle[1]) == 2


@pytest.mark.unit
def test_result_is_cached(reference):
    M = reference("x2_xy")
    assert saturate_h0(M) is saturate_h0(M)
    assert "saturation" in M.cache
