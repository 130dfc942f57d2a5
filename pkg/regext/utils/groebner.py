"""
Groebner Bases for Graded Submodules for regext

Buchberger's algorithm for homogeneous submodules of a graded free module,
with the normal selection strategy (lowest-degree pair first), the chain
criterion, and the product criterion when the ambient module has rank one.

Module elements are sparse dicts {(position, exponents): coefficient}. The
term order compares total degree (monomial degree plus basis twist) first,
then position (lower index is larger), then degrevlex on the monomial.
Kernels of graded maps are computed by elimination on the graph of the map.
"""

import heapq
import logging
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .free_modules import Column, GradedFreeModule, GradedMap, map_is_homogeneous
from .ring import (
    AlgebraError,
    Exponents,
    Polynomial,
    PolynomialRing,
    divides,
    monomial_lcm,
    monomial_quotient,
    monomials_of_degree,
)

logger = logging.getLogger(__name__)

Term = Tuple[int, Exponents]
Element = Dict[Term, int]


class GroebnerError(AlgebraError):
    """Custom exception for inhomogeneous Groebner input."""
    pass


def term_order_key(ambient: GradedFreeModule) -> Callable[[Term], Tuple[int, ...]]:
    """Sort key for terms of the ambient module; larger key means larger term."""
    twists = ambient.twists

    def key(term: Term) -> Tuple[int, ...]:
        position, exps = term
        return (sum(exps) + twists[position], -position) + tuple(-e for e in reversed(exps))

    return key


def element_from_vector(vector: Sequence[Polynomial]) -> Element:
    element: Element = {}
    for position, entry in enumerate(vector):
        for exps, coeff in entry.terms.items():
            element[(position, exps)] = coeff
    return element


def vector_from_element(element: Element, rank: int, ring: PolynomialRing) -> Column:
    buckets: List[Dict[Exponents, int]] = [{} for _ in range(rank)]
    for (position, exps), coeff in element.items():
        buckets[position][exps] = coeff
    return tuple(Polynomial(ring, bucket, normalize=False) for bucket in buckets)


def element_degree(element: Element, ambient: GradedFreeModule) -> Optional[int]:
    """Common degree of the terms, None if the element is not homogeneous."""
    degrees = {sum(exps) + ambient.twists[position] for position, exps in element}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def _reduce(
    element: Element,
    basis: Sequence[Element],
    leads: Sequence[Term],
    by_position: Dict[int, List[int]],
    key: Callable[[Term], Tuple[int, ...]],
    p: int,
    skip: int = -1,
) -> Element:
    """Full reduction of a homogeneous element; basis elements are monic."""
    remainder: Element = {}
    work = dict(element)
    while work:
        term = max(work, key=key)
        coeff = work.pop(term)
        position, exps = term
        divisor = -1
        for index in by_position.get(position, ()):
            if index != skip and divides(leads[index][1], exps):
                divisor = index
                break
        if divisor < 0:
            remainder[term] = coeff
            continue
        shift = monomial_quotient(exps, leads[divisor][1])
        for (g_position, g_exps), g_coeff in basis[divisor].items():
            shifted = (g_position, tuple(a + b for a, b in zip(g_exps, shift)))
            if shifted == term:
                continue
            value = (work.get(shifted, 0) - coeff * g_coeff) % p
            if value:
                work[shifted] = value
            else:
                work.pop(shifted, None)
    return remainder


def _make_monic(element: Element, lead: Term, p: int) -> Element:
    inverse = pow(element[lead], -1, p)
    return {term: coeff * inverse % p for term, coeff in element.items()}


class ModuleGB:
    """
    Reduced Groebner basis of a homogeneous submodule.

    Generators are monic and sorted by increasing lead term. The basis also
    answers standard-monomial questions about the quotient ambient/submodule.
    """

    def __init__(self, ring: PolynomialRing, ambient: GradedFreeModule, elements: Sequence[Element]):
        self.ring = ring
        self.ambient = ambient
        self._key = term_order_key(ambient)
        ordered = sorted(elements, key=lambda e: self._key(max(e, key=self._key)))
        self.elements: Tuple[Element, ...] = tuple(ordered)
        self.lead_terms: Tuple[Term, ...] = tuple(max(e, key=self._key) for e in ordered)
        self._by_position: Dict[int, List[int]] = defaultdict(list)
        for index, (position, _) in enumerate(self.lead_terms):
            self._by_position[position].append(index)
        self._standard_cache: Dict[int, List[Term]] = {}

    @property
    def generators(self) -> List[Column]:
        return [vector_from_element(e, self.ambient.rank, self.ring) for e in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def normal_form_element(self, element: Element) -> Element:
        return _reduce(element, self.elements, self.lead_terms, self._by_position, self._key, self.ring.p)

    def normal_form(self, vector: Sequence[Polynomial]) -> Column:
        """
        Remainder of a vector modulo the submodule.

        Args:
            vector: Coordinates in the ambient module

        Returns:
            The unique remainder with no term divisible by a lead term
        """
        if len(vector) != self.ambient.rank:
            raise GroebnerError(f"Vector of length {len(vector)} in ambient of rank {self.ambient.rank}")
        remainder = self.normal_form_element(element_from_vector(vector))
        return vector_from_element(remainder, self.ambient.rank, self.ring)

    def contains(self, vector: Sequence[Polynomial]) -> bool:
        return all(entry.is_zero() for entry in self.normal_form(vector))

    def is_standard(self, term: Term) -> bool:
        position, exps = term
        return not any(divides(self.lead_terms[i][1], exps) for i in self._by_position.get(position, ()))

    def standard_terms(self, degree: int) -> List[Term]:
        """Terms of the given degree outside the lead-term module, by position then degrevlex."""
        if degree not in self._standard_cache:
            terms: List[Term] = []
            n = self.ring.n
            for position, twist in enumerate(self.ambient.twists):
                for exps in monomials_of_degree(n, degree - twist):
                    if self.is_standard((position, exps)):
                        terms.append((position, exps))
            self._standard_cache[degree] = terms
        return self._standard_cache[degree]

    def hilbert_function(self, degree: int) -> int:
        return len(self.standard_terms(degree))

    def quotient_is_zero(self) -> bool:
        """True iff the submodule is the whole ambient module."""
        units = {position for position, exps in self.lead_terms if not any(exps)}
        return len(units) == self.ambient.rank

    def canonical_key(self) -> Tuple:
        return (
            self.ambient.twists,
            tuple(tuple(sorted(e.items())) for e in self.elements),
        )


def _buchberger(elements: List[Element], ambient: GradedFreeModule, ring: PolynomialRing) -> List[Element]:
    key = term_order_key(ambient)
    p = ring.p
    twists = ambient.twists
    single_position = ambient.rank == 1

    inputs = sorted(elements, key=lambda e: element_degree(e, ambient))
    basis: List[Element] = []
    leads: List[Term] = []
    by_position: Dict[int, List[int]] = defaultdict(list)
    pairs: List[Tuple[int, int, int]] = []
    processed = set()
    stats = {"pairs": 0, "zero": 0, "chain": 0, "product": 0}

    def add(element: Element) -> None:
        lead = max(element, key=key)
        index = len(basis)
        basis.append(_make_monic(element, lead, p))
        leads.append(lead)
        position, exps = lead
        for other in by_position[position]:
            other_exps = leads[other][1]
            if single_position and not any(a and b for a, b in zip(exps, other_exps)):
                processed.add((other, index))
                stats["product"] += 1
                continue
            lcm = monomial_lcm(exps, other_exps)
            heapq.heappush(pairs, (sum(lcm) + twists[position], other, index))
        by_position[position].append(index)

    def chain_criterion(i: int, j: int) -> bool:
        position, exps_i = leads[i]
        lcm = monomial_lcm(exps_i, leads[j][1])
        for k in by_position[position]:
            if k in (i, j) or not divides(leads[k][1], lcm):
                continue
            if (min(i, k), max(i, k)) in processed and (min(j, k), max(j, k)) in processed:
                return True
        return False

    def s_vector(i: int, j: int) -> Element:
        lcm = monomial_lcm(leads[i][1], leads[j][1])
        result: Element = {}
        for index, sign in ((i, 1), (j, -1)):
            shift = monomial_quotient(lcm, leads[index][1])
            for (position, exps), coeff in basis[index].items():
                term = (position, tuple(a + b for a, b in zip(exps, shift)))
                value = (result.get(term, 0) + sign * coeff) % p
                if value:
                    result[term] = value
                else:
                    result.pop(term, None)
        return result

    cursor = 0
    while cursor < len(inputs) or pairs:
        input_degree = element_degree(inputs[cursor], ambient) if cursor < len(inputs) else None
        if pairs and (input_degree is None or pairs[0][0] <= input_degree):
            _, i, j = heapq.heappop(pairs)
            stats["pairs"] += 1
            if chain_criterion(i, j):
                stats["chain"] += 1
                continue
            processed.add((i, j))
            candidate = s_vector(i, j)
        else:
            candidate = inputs[cursor]
            cursor += 1
        remainder = _reduce(candidate, basis, leads, by_position, key, p)
        if remainder:
            add(remainder)
        else:
            stats["zero"] += 1

    # interreduce tails; leads are already pairwise non-divisible
    reduced: List[Element] = []
    for index, element in enumerate(basis):
        lead = leads[index]
        tail = {term: coeff for term, coeff in element.items() if term != lead}
        tail = _reduce(tail, basis, leads, by_position, key, p, skip=index)
        tail[lead] = 1
        reduced.append(tail)

    logger.debug(
        f"Groebner basis: {len(reduced)} elements, {stats['pairs']} pairs, "
        f"{stats['zero']} zero reductions, {stats['chain']} chain and "
        f"{stats['product']} product criterion skips"
    )
    return reduced


def groebner_basis(
    rels: Sequence[Sequence[Polynomial]],
    ambient: GradedFreeModule,
    ring: PolynomialRing,
) -> ModuleGB:
    """
    Reduced Groebner basis of the submodule generated by rels.

    Args:
        rels: Homogeneous vectors of the ambient module
        ambient: The graded free module containing them
        ring: The polynomial ring

    Returns:
        ModuleGB of the generated submodule

    Raises:
        GroebnerError: If a vector is not homogeneous or has the wrong length
    """
    elements: List[Element] = []
    for vector in rels:
        if len(vector) != ambient.rank:
            raise GroebnerError(f"Vector of length {len(vector)} in ambient of rank {ambient.rank}")
        element = element_from_vector(vector)
        if not element:
            continue
        if element_degree(element, ambient) is None:
            raise GroebnerError(f"Inhomogeneous vector: {[str(entry) for entry in vector]}")
        elements.append(element)
    return ModuleGB(ring, ambient, _buchberger(elements, ambient, ring))


def normal_form(vector: Sequence[Polynomial], gb: ModuleGB) -> Column:
    return gb.normal_form(vector)


def syzygy_module(f: GradedMap) -> GradedMap:
    """
    Generators of ker(f) as a submodule of f.source.

    The graph vectors (f(e_j), e_j) live in target + source; a Groebner basis
    with the target positions first eliminates them, and the basis elements
    whose lead lies in the source part generate the kernel.

    Args:
        f: A homogeneous map

    Returns:
        A map K -> f.source whose columns generate ker(f); the twists of K
        are the degrees of the generators

    Raises:
        GroebnerError: If f is not homogeneous
    """
    ring = f.ring
    r, s = f.target.rank, f.source.rank
    if s == 0:
        return GradedMap(ring, GradedFreeModule.zero(), f.source, [])
    if r == 0 or f.is_zero():
        return GradedMap.identity(ring, f.source)
    if not map_is_homogeneous(f):
        raise GroebnerError(f"Cannot compute syzygies of a non-homogeneous map {f!r}")

    ambient = GradedFreeModule(f.target.twists + f.source.twists)
    one, zero = ring.one(), ring.zero()
    graph = [
        tuple(column) + tuple(one if k == j else zero for k in range(s))
        for j, column in enumerate(f.columns)
    ]
    gb = groebner_basis(graph, ambient, ring)

    degrees: List[int] = []
    columns: List[Column] = []
    for element, (position, exps) in zip(gb.elements, gb.lead_terms):
        if position < r:
            continue
        shifted = {(pos - r, e): c for (pos, e), c in element.items()}
        columns.append(vector_from_element(shifted, s, ring))
        degrees.append(sum(exps) + ambient.twists[position])
    logger.debug(f"Kernel of {f!r}: {len(columns)} generators")
    return GradedMap(ring, GradedFreeModule(degrees), f.source, columns)
