"""
Linear Algebra mod p for regext

Gaussian elimination over F_p on numpy int64 arrays, and the graded strands
f_mu : F_mu -> G_mu of a homogeneous map written in monomial bases. Strands
give an oracle for syzygies and Ext that is independent of Groebner bases,
and the socle computations of the saturation engine run on them.

Entries stay in [0, p) with p < 2^31, so every product fits in int64.
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from .free_modules import GradedFreeModule, GradedMap
from .ring import Exponents, monomials_of_degree

logger = logging.getLogger(__name__)

Term = Tuple[int, Exponents]


def row_reduce(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form over F_p.

    Args:
        matrix: Integer matrix (any integer dtype)
        p: Prime modulus below 2^31

    Returns:
        Tuple of (reduced matrix, pivot column indices)
    """
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix, p)[1])


def nullspace_mod_p(matrix: np.ndarray, p: int) -> List[np.ndarray]:
    """Basis of {v : matrix @ v = 0 mod p}, one vector per free column."""
    rows, cols = matrix.shape
    if cols == 0:
        return []
    if rows == 0:
        return [np.eye(cols, dtype=np.int64)[k] for k in range(cols)]
    reduced, pivots = row_reduce(matrix, p)
    pivot_set = set(pivots)
    basis: List[np.ndarray] = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[free] = 1
        for k, c in enumerate(pivots):
            v[c] = (-reduced[k, free]) % p
        basis.append(v)
    return basis


def strand_basis(module: GradedFreeModule, n: int, degree: int) -> List[Term]:
    """Monomial basis (position, exponents) of F_degree."""
    basis: List[Term] = []
    for position, twist in enumerate(module.twists):
        for exps in monomials_of_degree(n, degree - twist):
            basis.append((position, exps))
    return basis


def strand_matrix(f: GradedMap, degree: int) -> np.ndarray:
    """
    The k-linear map f_degree in monomial bases.

    Args:
        f: A homogeneous map F -> G
        degree: The degree mu of the strand

    Returns:
        Matrix of shape (dim G_mu, dim F_mu); columns follow
        strand_basis(f.source, n, degree), rows strand_basis(f.target, n, degree)
    """
    n = f.ring.n
    source_basis = strand_basis(f.source, n, degree)
    target_basis = strand_basis(f.target, n, degree)
    index: Dict[Term, int] = {term: k for k, term in enumerate(target_basis)}
    matrix = np.zeros((len(target_basis), len(source_basis)), dtype=np.int64)
    for col, (position, exps) in enumerate(source_basis):
        for row_position, entry in enumerate(f.columns[position]):
            for e, c in entry.terms.items():
                term = (row_position, tuple(x + y for x, y in zip(e, exps)))
                matrix[index[term], col] = (matrix[index[term], col] + c) % f.ring.p
    return matrix


def strand_kernel_dimension(f: GradedMap, degree: int) -> int:
    source_dim = len(strand_basis(f.source, f.ring.n, degree))
    return source_dim - rank_mod_p(strand_matrix(f, degree), f.ring.p)


def strand_homology_dimension(incoming: GradedMap, outgoing: GradedMap, degree: int) -> int:
    """dim of ker(outgoing_mu) / im(incoming_mu) for a composable pair with zero composite."""
    kernel = strand_kernel_dimension(outgoing, degree)
    image = rank_mod_p(strand_matrix(incoming, degree), incoming.ring.p)
    return kernel - image
