"""
Tests for graded free modules, module Groebner bases and syzygies.
"""

import pytest

from regext.utils.free_modules import GradedFreeModule, GradedMap, ShapeError, compose, map_is_homogeneous
from regext.utils.groebner import GroebnerError, groebner_basis, syzygy_module


@pytest.mark.unit
def test_free_module_twists():
    F = GradedFreeModule([0, 1, 1])
    assert F.rank == 3
    assert F.dual().twists == (0, -1, -1)
    assert F.shifted(2).twists == (2, 3, 3)
    assert GradedFreeModule.zero().is_zero()
    assert repr(GradedFreeModule([1])) == "R(-1)"


@pytest.mark.unit
def test_maps_check_shapes_and_degrees(ring2):
    x, y = ring2.gens()
    source, target = GradedFreeModule([1, 1]), GradedFreeModule([0])
    f = GradedMap(ring2, source, target, [[x], [y]])
    assert map_is_homogeneous(f)
    assert not map_is_homogeneous(GradedMap(ring2, source, target, [[x**2], [y]]))
    with pytest.raises(ShapeError):
        GradedMap(ring2, source, target, [[x]])
    assert f.transpose().source.twists == (0,)
    assert f.transpose().target.twists == (-1, -1)


@pytest.mark.unit
def test_ideal_membership_and_standard_monomials(ring2):
    x, y = ring2.gens()
    gb = groebner_basis([(x**2,), (x * y,)], GradedFreeModule([0]), ring2)
    assert gb.contains((x**3 + x * y**2,))
    assert not gb.contains((y**3,))
    assert gb.normal_form((x**2 + y**2,)) == (y**2,)
    assert [gb.hilbert_function(t) for t in range(5)] == [1, 2, 1, 1, 1]


@pytest.mark.unit
def test_groebner_basis_completes_the_ideal(ring2):
    """x^2 - y^2 and x*y: the S-vector adds y^3."""
    x, y = ring2.gens()
    gb = groebner_basis([(x**2 - y**2,), (x * y,)], GradedFreeModule([0]), ring2)
    assert gb.contains((y**3,))
    assert [gb.hilbert_function(t) for t in range(5)] == [1, 2, 1, 0, 0]


@pytest.mark.unit
def test_module_basis_mixes_positions(ring2):
    x, y = ring2.gens()
    ambient = GradedFreeModule([0, 1])
    gb = groebner_basis([(x**2, y)], ambient, ring2)
    assert gb.contains((x**3, x * y))
    assert not gb.contains((x**2, ring2.zero()))
    assert gb.hilbert_function(1) == 3


@pytest.mark.unit
def test_inhomogeneous_vectors_are_rejected(ring2):
    x, y = ring2.gens()
    with pytest.raises(GroebnerError):
        groebner_basis([(x**2 + y,)], GradedFreeModule([0]), ring2)


@pytest.mark.unit
def test_koszul_syzygy(ring2):
    """ker(x, y) is generated by one vector of degree 2."""
    x, y = ring2.gens()
    f = GradedMap(ring2, GradedFreeModule([1, 1]), GradedFreeModule([0]), [[x], [y]])
    kernel = syzygy_module(f)
    assert kernel.source.twists == (2,)
    assert compose(f, kernel).is_zero()
    assert map_is_homogeneous(kernel)


@pytest.mark.unit
def test_syzygies_of_three_generators(ring3):
    x, y, z = ring3.gens()
    f = GradedMap(ring3, GradedFreeModule([1, 1, 1]), GradedFreeModule([0]), [[x], [y], [z]])
    kernel = syzygy_module(f)
    assert set(kernel.source.twists) == {2}
    assert kernel.source.rank >= 3
    assert compose(f, kernel).is_zero()
