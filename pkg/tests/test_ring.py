"""
Tests for prime field and polynomial arithmetic.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regext.utils.ring import (
    DEFAULT_PRIME,
    AlgebraError,
    Monomial,
    Polynomial,
    PolynomialRing,
    PrimeField,
    monomial_compare,
    monomials_of_degree,
)

RING = PolynomialRing.standard(2)

polynomials = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-50, 50),
    max_size=4,
).map(lambda terms: Polynomial(RING, terms))


@pytest.mark.unit
def test_field_inverse_and_symmetric_representative():
    """Every nonzero residue has an inverse; p - 1 prints as -1."""
    field = PrimeField(DEFAULT_PRIME)
    for a in (1, 2, 12345, DEFAULT_PRIME - 1):
        assert field.mul(a, field.inv(a)) == 1
    assert field.symmetric(DEFAULT_PRIME - 1) == -1
    assert field.normalize(-1) == DEFAULT_PRIME - 1


@pytest.mark.unit
def test_ring_validation():
    """Composite moduli and repeated variable names are rejected."""
    with pytest.raises(ValueError):
        PolynomialRing(p=32004, variables=("x",))
    with pytest.raises(ValueError):
        PolynomialRing(p=7, variables=("x", "x"))
    assert PolynomialRing.standard(3).variables == ("x", "y", "z")
    assert PolynomialRing.standard(5).variables == ("x1", "x2", "x3", "x4", "x5")


@pytest.mark.unit
def test_binomial_square_prints_in_degrevlex_order(ring2):
    x, y = ring2.gens()
    square = (x - y) ** 2
    assert square == x**2 - 2 * x * y + y**2
    assert str(square) == "x^2 - 2*x*y + y^2"
    assert str(ring2.zero()) == "0"


@pytest.mark.unit
def test_degrevlex_prefers_small_last_exponent():
    """y^2 > x*z in k[x,y,z] under degrevlex."""
    assert monomial_compare(Monomial((0, 2, 0)), Monomial((1, 0, 1))) == 1
    assert monomial_compare(Monomial((2, 0, 0)), Monomial((0, 2, 0))) == 1
    assert monomial_compare(Monomial((1, 1)), Monomial((1, 1))) == 0


@pytest.mark.unit
def test_coefficients_reduce_mod_p(ring2):
    x = ring2.var("x")
    assert (x * DEFAULT_PRIME).is_zero()
    assert x.scale(DEFAULT_PRIME + 2) == x * 2
    assert Polynomial.constant(ring2, -1) == DEFAULT_PRIME - 1


@pytest.mark.unit
def test_homogeneity_and_leading_term(ring2):
    x, y = ring2.gens()
    assert (x * y + y**2).leading_term() == ((1, 1), 1)
    assert not (x**2 + y).is_homogeneous()
    assert (x**2 + y).degree() == 2
    assert (x**3 - x * y**2).homogeneous_degree() == 3
    with pytest.raises(AlgebraError):
        ring2.zero().leading_term()


@pytest.mark.unit
def test_substitution_swaps_variables(ring2):
    x, y = ring2.gens()
    assert (x**2 + y).substitute([y, x]) == y**2 + x


@pytest.mark.unit
def test_invalid_operations_raise(ring2, ring3):
    x = ring2.var(0)
    with pytest.raises(AlgebraError):
        x ** -1
    with pytest.raises(AlgebraError):
        Monomial((1, -1))
    with pytest.raises(AlgebraError):
        x + ring3.var(0)
    with pytest.raises(AlgebraError):
        ring2.var("q")


@pytest.mark.unit
def test_monomials_of_degree_counts():
    assert len(monomials_of_degree(2, 2)) == 3
    assert len(monomials_of_degree(3, 2)) == 6
    assert set(monomials_of_degree(2, 1)) == {(1, 0), (0, 1)}


@given(polynomials, polynomials, polynomials)
@settings(max_examples=50, deadline=None)
def test_ring_axioms(a, b, c):
    """Multiplication distributes over addition and both operations commute."""
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert (a - a).is_zero()
