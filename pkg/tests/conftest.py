"""
Shared fixtures for the regext test suite.
"""

import os

import pytest

from regext.data.corpus import get_reference_module
from regext.utils.presentation import GradedModulePresentation
from regext.utils.ring import Polynomial, PolynomialRing, monomials_of_degree


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Tests never see REGEXT_* variables from the calling shell."""
    for name in list(os.environ):
        if name.startswith("REGEXT_"):
            monkeypatch.delenv(name, raising=False)


@pytest.fixture
def ring2():
    return PolynomialRing.standard(2)


@pytest.fixture
def ring3():
    return PolynomialRing.standard(3)


@pytest.fixture
def reference():
    """Fresh reference module by name; caches are never shared between tests."""
    return get_reference_module


@pytest.fixture
def maximal_power():
    """R / m^t over the given ring."""

    def build(ring: PolynomialRing, t: int) -> GradedModulePresentation:
        generators = [Polynomial.monomial(ring, exps) for exps in monomials_of_degree(ring.n, t)]
        return GradedModulePresentation.cyclic(ring, generators, label=f"m^{t}")

    return build
