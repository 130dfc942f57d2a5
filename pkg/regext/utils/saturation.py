"""
Saturation by the Maximal Ideal for regext

H^0_m(M) = (0 :_M m^infinity) is computed as an increasing union of socles:
the socle (0 :_M m) is found degree by degree by linear algebra on standard
monomial bases, its lifts are added as relations, and the process repeats on
the quotient until the socle vanishes. Every socle lives in degrees at most
reg(M), which bounds the search window.
"""

import logging
from collections import defaultdict
from typing import Any, Dict, List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .free_modules import Column
from .groebner import vector_from_element
from .linalg import nullspace_mod_p
from .numbers import NEG_INF, POS_INF, ExtendedInt
from .presentation import GradedModulePresentation
from .resolution import regularity

logger = logging.getLogger(__name__)


class SaturationResult(BaseModel):
    """H^0_m(M) by degree and the presentation of M / H^0_m(M)."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    h0_dims: Dict[int, int] = Field(default_factory=dict, description="degree -> dim H^0_m(M)_t (nonzero only)")
    h0_length: int = Field(0, description="Length of H^0_m(M)")
    h0_end: ExtendedInt = Field(NEG_INF, description="end(H^0_m(M))")
    h0_indeg: ExtendedInt = Field(POS_INF, description="indeg(H^0_m(M))")
    quotient: Any = Field(None, exclude=True, description="Presentation of M / H^0_m(M)")

    def dim(self, t: int) -> int:
        return self.h0_dims.get(t, 0)


def socle_vectors(M: GradedModulePresentation, low: int, high: int) -> Dict[int, List[Column]]:
    """
    Lifts to the generators' free module of a basis of (0 :_M m), per degree.

    Args:
        M: The module
        low: First degree to search
        high: Last degree to search

    Returns:
        Mapping degree -> socle vectors of that degree
    """
    gb = M.relation_gb()
    ring = M.ring
    n, p = ring.n, ring.p
    result: Dict[int, List[Column]] = {}
    for t in range(low, high + 1):
        basis = gb.standard_terms(t)
        if not basis:
            continue
        upper = gb.standard_terms(t + 1)
        index = {term: k for k, term in enumerate(upper)}
        matrix = np.zeros((n * len(upper), len(basis)), dtype=np.int64)
        for col, (position, exps) in enumerate(basis):
            for variable in range(n):
                shifted = tuple(e + (1 if k == variable else 0) for k, e in enumerate(exps))
                remainder = gb.normal_form_element({(position, shifted): 1})
                for term, coeff in remainder.items():
                    matrix[variable * len(upper) + index[term], col] = coeff
        kernel = nullspace_mod_p(matrix, p)
        if kernel:
            vectors = []
            for v in kernel:
                element = {basis[k]: int(c) for k, c in enumerate(v) if c}
                vectors.append(vector_from_element(element, M.gens.rank, ring))
            result[t] = vectors
    return result


def saturate_h0(M: GradedModulePresentation) -> SaturationResult:
    """
    Compute H^0_m(M) and M / H^0_m(M).

    Args:
        M: The module

    Returns:
        SaturationResult with the graded dimensions, end, indeg and length of
        H^0_m(M) and the presentation of the quotient (same generators as M)
    """
    if "saturation" in M.cache:
        return M.cache["saturation"]
    if M.is_zero():
        result = SaturationResult(quotient=M)
        M.cache["saturation"] = result
        return result

    low = min(M.gens.twists)
    high = regularity(M)
    dims: Dict[int, int] = defaultdict(int)
    current = M
    rounds = 0
    while True:
        socle = socle_vectors(current, low, high)
        if not socle:
            break
        rounds += 1
        for t, vectors in socle.items():
            dims[t] += len(vectors)
        current = current.with_relations([v for t in sorted(socle) for v in socle[t]])

    nonzero = {t: d for t, d in sorted(dims.items()) if d}
    quotient = current if rounds else M
    result = SaturationResult(
        h0_dims=nonzero,
        h0_length=sum(nonzero.values()),
        h0_end=max(nonzero) if nonzero else NEG_INF,
        h0_indeg=min(nonzero) if nonzero else POS_INF,
        quotient=quotient,
    )
    logger.debug(f"H^0 of {M.label or 'module'}: {nonzero} after {rounds} socle rounds")
    M.cache["saturation"] = result
    return result
