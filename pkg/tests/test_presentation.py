"""
Tests for module presentations.
"""

import pytest

from regext.utils.free_modules import GradedFreeModule
from regext.utils.presentation import GradedModulePresentation, PresentationError
from regext.utils.presentation_io import parse_presentation


@pytest.mark.unit
def test_free_and_zero_modules(ring2):
    R = GradedModulePresentation.free(ring2)
    assert [R.hilbert_function(t) for t in range(4)] == [1, 2, 3, 4]
    assert not R.is_zero()
    assert GradedModulePresentation.zero(ring2).is_zero()
    assert GradedModulePresentation.cyclic(ring2, [ring2.one()]).is_zero()


@pytest.mark.unit
def test_inhomogeneous_relations_are_rejected(ring2):
    x, y = ring2.gens()
    with pytest.raises(PresentationError):
        GradedModulePresentation.from_relations(ring2, GradedFreeModule([0, 0]), [(x, y**2)])


@pytest.mark.unit
def test_quotient_by_linear_form(reference):
    M = reference("free_xy")
    Q = M.quotient_by_linear_form(M.ring.var("x"))
    assert [Q.hilbert_function(t) for t in range(4)] == [1, 1, 1, 1]
    assert [M.hilbert_function(t) for t in range(4)] == [1, 2, 3, 4]


@pytest.mark.unit
def test_shift_moves_every_degree(reference):
    M = reference("maximal_ideal_xy")
    shifted = M.shifted(-1)
    assert shifted.gens.twists == (0, 0)
    for t in range(4):
        assert shifted.hilbert_function(t) == M.hilbert_function(t + 1)


@pytest.mark.unit
def test_direct_sum_adds_hilbert_functions(reference):
    M, N = reference("line_xy"), reference("x2_y2")
    S = M.direct_sum(N)
    assert S.gens.rank == 2
    for t in range(5):
        assert S.hilbert_function(t) == M.hilbert_function(t) + N.hilbert_function(t)


@pytest.mark.unit
def test_minimalized_drops_redundant_generators():
    """A generator equal to x times another one is redundant."""
    M = parse_presentation("RING 32003 x y\nGENS -1 0\nREL 1 | x\n")
    minimal = M.minimalized()
    assert minimal.gens.twists == (0,)
    for t in range(4):
        assert minimal.hilbert_function(t) == M.hilbert_function(t) == t + 1


@pytest.mark.unit
def test_change_ring_substitutes_variables(reference):
    M = reference("line_xy")
    x, y = M.ring.gens()
    swapped = M.change_ring([y, x], M.ring)
    assert swapped.relation_gb().contains((y,))
    assert not swapped.relation_gb().contains((x,))


@pytest.mark.unit
def test_canonical_key_ignores_generating_set(ring2):
    x, y = ring2.gens()
    first = GradedModulePresentation.cyclic(ring2, [x**2, x * y])
    second = GradedModulePresentation.cyclic(ring2, [x**2 + x * y, x * y])
    assert first.canonical_key() == second.canonical_key()
