"""
Tests for Ext modules, local cohomology and truncations.
"""

import math

import pytest

from regext.utils.cohomology import (
    ext_into_ring,
    ext_module,
    local_cohomology_dims,
    shape_window,
    strand_ext_dimension,
    truncate,
)
from regext.utils.presentation import GradedModulePresentation
from regext.utils.resolution import betti_table


@pytest.mark.unit
@pytest.mark.parametrize("name, n", [("residue_field_xy", 2), ("residue_field_xyz", 3)])
def test_top_ext_of_residue_field(reference, name, n):
    """Ext^n(k, R) = k(n), a single copy of k in degree -n."""
    M = reference(name)
    top = ext_into_ring(M, n)
    assert top.hilbert_function(-n) == 1
    assert top.hilbert_function(-n + 1) == 0
    assert top.indeg == -n
    assert top.reg == -n
    assert top.dim == 0
    for i in range(n):
        assert ext_into_ring(M, i).is_zero()


@pytest.mark.unit
def test_ext_of_the_ring(reference):
    M = reference("free_xy")
    hom = ext_into_ring(M, 0)
    assert [hom.hilbert_function(t) for t in range(3)] == [1, 2, 3]
    assert ext_into_ring(M, 1).is_zero()
    assert ext_into_ring(M, -1).is_zero()
    assert ext_into_ring(M, 5).is_zero()


@pytest.mark.unit
def test_ext_of_a_hypersurface(reference):
    """Ext^1(R/(x), R) = R/(x)(1)."""
    ext = ext_into_ring(reference("line_xy"), 1)
    assert ext.indeg == -1
    assert ext.dim == 1
    assert ext.dims((-2, 2)) == {-2: 0, -1: 1, 0: 1, 1: 1, 2: 1}


@pytest.mark.unit
def test_deficiency_module_of_maximal_ideal(reference):
    """Ext^1(m, R) = k(2): m is not Cohen-Macaulay."""
    ext = ext_into_ring(reference("maximal_ideal_xy"), 1)
    assert ext.dim == 0
    assert ext.hilbert_function(-2) == 1
    assert sum(ext.dims((-5, 3)).values()) == 1


@pytest.mark.integration
def test_ext_between_residue_fields(reference):
    """Ext^i(k, k) = k^C(2, i) in degree -i."""
    k = reference("residue_field_xy")
    for i, rank in enumerate([1, 2, 1]):
        ext = ext_module(k, reference("residue_field_xy"), i)
        assert ext.hilbert_function(-i) == rank
        assert sum(ext.dims((-4, 2)).values()) == rank
    assert ext_module(k, k, 3).is_zero()


@pytest.mark.integration
def test_ext_into_free_module_matches_ext_into_ring(reference):
    M = reference("x2_xy")
    R = reference("free_xy")
    for i in range(3):
        pair = ext_module(M, R, i)
        ring = ext_into_ring(M, i)
        assert pair.dims((-5, 2)) == ring.dims((-5, 2))


@pytest.mark.integration
def test_local_cohomology_of_embedded_point(reference):
    M = reference("x2_xy")
    table = local_cohomology_dims(M, (-3, 3))
    assert table.top == 1
    assert table.dims[0] == {1: 1}
    assert table.dim(1, -1) == 1
    assert table.dim(1, -3) == 1
    assert table.dim(1, 0) == 0
    assert table.covers(3)
    assert not table.covers(4)


@pytest.mark.unit
def test_truncation_of_embedded_point(reference):
    M = reference("x2_xy")
    T = truncate(M, 2)
    table = betti_table(T)
    assert table.total(0) == 1
    assert table.indeg == 2
    assert table.reg == 2
    assert [T.hilbert_function(t) for t in range(1, 6)] == [0, 1, 1, 1, 1]


@pytest.mark.unit
def test_truncation_edge_cases(reference, maximal_power, ring2):
    M = reference("maximal_ideal_xy")
    assert truncate(M, 1) is M
    assert truncate(M, -3) is M
    assert truncate(maximal_power(ring2, 2), 2).is_zero()


@pytest.mark.unit
def test_strand_dimensions_agree_with_presentations(reference):
    M = reference("maximal_ideal_xy")
    assert strand_ext_dimension(M, 1, -2) == 1
    assert strand_ext_dimension(M, 1, -1) == 0
    assert strand_ext_dimension(M, 0, 1) == ext_into_ring(M, 0).hilbert_function(1)
    assert strand_ext_dimension(M, 4, 0) == 0


@pytest.mark.unit
def test_shape_window(reference, ring2):
    assert shape_window(reference("x2_xy"), 2, 5) == (-2, 6)
    assert shape_window(GradedModulePresentation.zero(ring2), 2, 5) is None
    assert betti_table(GradedModulePresentation.zero(ring2)).reg == -math.inf
