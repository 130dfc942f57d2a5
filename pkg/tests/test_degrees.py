"""
Tests for filter-regular sequences and the homological degree.
"""

import pytest

from regext.utils.degrees import (
    FilterRegularError,
    HdegCalculator,
    filter_regular_sequence,
    find_nonzerodivisor,
    hdeg,
    hdeg_saturation_identity,
    is_filter_regular,
    is_nonzerodivisor,
    linear_form,
    restrict_to_hyperplane,
)
from regext.utils.presentation import GradedModulePresentation


@pytest.mark.unit
def test_linear_form(ring3):
    x, y, z = ring3.gens()
    assert linear_form(ring3, [1, 0, -2]) == x - 2 * z


@pytest.mark.unit
def test_filter_regular_versus_nonzerodivisor(reference):
    """On R/(x^2, xy), y kills only the finite part: filter-regular but a zero-divisor."""
    M = reference("x2_xy")
    x, y = M.ring.gens()
    assert is_filter_regular(M, y)
    assert not is_nonzerodivisor(M, y)
    assert not is_filter_regular(M, x)


@pytest.mark.unit
def test_nonzerodivisor_on_a_line(reference):
    M = reference("line_xy")
    assert is_nonzerodivisor(M, M.ring.var("y"))
    assert not is_filter_regular(M, M.ring.var("x"))


@pytest.mark.unit
def test_depth_zero_has_no_nonzerodivisor(reference):
    with pytest.raises(FilterRegularError):
        find_nonzerodivisor(reference("residue_field_xy"), seed=0, retries=3)


@pytest.mark.unit
def test_filter_regular_sequence_on_a_plane(reference):
    M = reference("line_xyz")
    data = filter_regular_sequence(M, seed=0)
    assert data.dim == 2
    assert len(data.forms) == 2
    assert len(data.quotients) == 3
    assert len(data.rbar) == 3
    assert data.B == 1
    assert all(any(c for c in form) for form in data.forms)
    assert all(attempts >= 1 for attempts in data.attempts)


@pytest.mark.unit
def test_filter_regular_sequence_is_seeded(reference):
    first = filter_regular_sequence(reference("twisted_cubic"), seed=11)
    second = filter_regular_sequence(reference("twisted_cubic"), seed=11)
    assert first.forms == second.forms
    assert first.B == second.B == 3


@pytest.mark.unit
def test_finite_length_needs_no_forms(reference):
    data = filter_regular_sequence(reference("x2_y2"), seed=0)
    assert data.dim == 0
    assert data.forms == []
    assert data.B == 4


@pytest.mark.unit
def test_restriction_to_a_hyperplane(reference):
    M = reference("line_xyz")
    restricted = restrict_to_hyperplane(M, [0, 0, 1])
    assert restricted.ring.variables == ("x", "y")
    assert [restricted.hilbert_function(t) for t in range(4)] == [1, 1, 1, 1]


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, expected",
    [
        ("free_xy", 1),
        ("residue_field_xy", 1),
        ("line_xy", 1),
        ("x2_xy", 2),
        ("x2_y2", 4),
        ("maximal_ideal_xy", 2),
        ("twisted_cubic", 3),
    ],
)
def test_homological_degree(reference, name, expected):
    assert hdeg(reference(name)).value == expected


@pytest.mark.unit
def test_hdeg_breakdown_of_maximal_ideal(reference):
    result = hdeg(reference("maximal_ideal_xy"))
    assert result.degree == 1
    assert result.dim == 2
    assert len(result.terms) == 1
    term = result.terms[0]
    assert (term.i, term.ext_index, term.weight, term.hdeg, term.contribution) == (0, 1, 1, 1, 1)


@pytest.mark.unit
def test_hdeg_of_zero_module_and_memo(ring2, reference):
    calculator = HdegCalculator()
    assert calculator.compute(GradedModulePresentation.zero(ring2)).value == 0
    M = reference("x2_xy")
    assert calculator.compute(M).value == 2
    assert M.canonical_key() in calculator.memo


@pytest.mark.integration
@pytest.mark.parametrize("name", ["x2_xy", "x2_y2", "maximal_ideal_xy", "line_xyz"])
def test_hdeg_splits_off_the_finite_part(reference, name):
    assert hdeg_saturation_identity(reference(name))
