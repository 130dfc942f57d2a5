"""
Graded Module Presentations for regext

A finitely generated graded module M = coker(rels: F_1 -> F_0) is stored by
the twists of F_0 (the generator degrees) and the homogeneous relation map.
The Groebner basis of the relation submodule is computed on first use and
cached on the instance, together with other derived data (resolution,
Hilbert data, saturation) that the engines store in `cache`.
"""

import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .free_modules import (
    Column,
    GradedFreeModule,
    GradedMap,
    map_is_homogeneous,
)
from .groebner import ModuleGB, Term, groebner_basis
from .ring import AlgebraError, Polynomial, PolynomialRing

logger = logging.getLogger(__name__)


class PresentationError(AlgebraError):
    """Custom exception for invalid module presentations."""
    pass


def vector_degree(vector: Sequence[Polynomial], module: GradedFreeModule) -> Optional[int]:
    """Degree of a homogeneous vector of module, None for the zero vector."""
    degree: Optional[int] = None
    for entry, twist in zip(vector, module.twists):
        if entry.is_zero():
            continue
        entry_degree = entry.homogeneous_degree()
        if entry_degree is None:
            raise PresentationError(f"Inhomogeneous entry {entry}")
        if degree is None:
            degree = entry_degree + twist
        elif degree != entry_degree + twist:
            raise PresentationError(
                f"Vector entries have degrees {degree} and {entry_degree + twist} in {module!r}"
            )
    return degree


def map_from_vectors(
    ring: PolynomialRing,
    target: GradedFreeModule,
    vectors: Iterable[Sequence[Polynomial]],
) -> GradedMap:
    """Map whose columns are the nonzero vectors, each with its own degree as twist."""
    degrees: List[int] = []
    columns: List[Column] = []
    for vector in vectors:
        if len(vector) != target.rank:
            raise PresentationError(f"Vector of length {len(vector)} in a module of rank {target.rank}")
        degree = vector_degree(vector, target)
        if degree is None:
            continue
        degrees.append(degree)
        columns.append(tuple(vector))
    return GradedMap(ring, GradedFreeModule(degrees), target, columns)


def eliminate_unit_entries(f: GradedMap) -> Tuple[GradedMap, List[int]]:
    """
    Cancel every nonzero constant entry of f by change of basis.

    A unit u in row a and column b removes target generator a and source
    generator b; every other column c becomes c - (c[a] / u) * f[:, b].
    Columns that vanish are dropped.

    Args:
        f: A homogeneous map

    Returns:
        Tuple of (map without unit entries, removed target rows in the
        original numbering)
    """
    ring = f.ring
    field = ring.field
    columns = [list(column) for column in f.columns]
    column_twists = list(f.source.twists)
    alive_rows = list(range(f.target.rank))
    removed_rows: List[int] = []

    while True:
        pivot: Optional[Tuple[int, int]] = None
        for j, column in enumerate(columns):
            for i, entry in enumerate(column):
                if not entry.is_zero() and entry.is_constant():
                    pivot = (j, i)
                    break
            if pivot is not None:
                break
        if pivot is None:
            break
        j, i = pivot
        pivot_column = columns[j]
        inverse = field.inv(pivot_column[i].constant_term())
        for k, column in enumerate(columns):
            if k == j or column[i].is_zero():
                continue
            factor = column[i].scale(inverse)
            columns[k] = [a - factor * b for a, b in zip(column, pivot_column)]
        del columns[j]
        del column_twists[j]
        removed_rows.append(alive_rows.pop(i))
        columns = [column[:i] + column[i + 1:] for column in columns]

    kept = [k for k, column in enumerate(columns) if any(not entry.is_zero() for entry in column)]
    target = GradedFreeModule(f.target.twists[r] for r in alive_rows)
    source = GradedFreeModule(column_twists[k] for k in kept)
    return GradedMap(ring, source, target, [columns[k] for k in kept]), removed_rows


class GradedModulePresentation:
    """
    M = coker(rels) with rels: F_1 -> gens homogeneous.

    Attributes:
        ring: The polynomial ring R
        gens: Free module whose twists are the generator degrees of M
        rels: Relation map into gens
        label: Optional instance name used in reports
        cache: Derived data owned by this instance
    """

    def __init__(
        self,
        ring: PolynomialRing,
        gens: GradedFreeModule,
        rels: Optional[GradedMap] = None,
        label: str = "",
    ):
        if rels is None:
            rels = GradedMap(ring, GradedFreeModule.zero(), gens, [])
        if rels.target != gens:
            raise PresentationError(f"Relations map into {rels.target!r}, generators are {gens!r}")
        if not map_is_homogeneous(rels):
            raise PresentationError("Relation matrix is not homogeneous")
        self.ring = ring
        self.gens = gens
        self.rels = rels
        self.label = label
        self.cache: Dict[str, Any] = {}

    @classmethod
    def free(cls, ring: PolynomialRing, twists: Iterable[int] = (0,), label: str = "") -> "GradedModulePresentation":
        return cls(ring, GradedFreeModule(twists), label=label)

    @classmethod
    def from_relations(
        cls,
        ring: PolynomialRing,
        gens: GradedFreeModule,
        vectors: Iterable[Sequence[Polynomial]],
        label: str = "",
    ) -> "GradedModulePresentation":
        return cls(ring, gens, map_from_vectors(ring, gens, vectors), label=label)

    @classmethod
    def cyclic(
        cls,
        ring: PolynomialRing,
        generators: Iterable[Polynomial],
        twist: int = 0,
        label: str = "",
    ) -> "GradedModulePresentation":
        """R/I shifted so that its generator sits in degree twist."""
        return cls.from_relations(ring, GradedFreeModule([twist]), [(g,) for g in generators], label=label)

    @classmethod
    def zero(cls, ring: PolynomialRing, label: str = "") -> "GradedModulePresentation":
        return cls(ring, GradedFreeModule.zero(), label=label)

    def relation_gb(self) -> ModuleGB:
        if "gb" not in self.cache:
            self.cache["gb"] = groebner_basis(self.rels.columns, self.gens, self.ring)
        return self.cache["gb"]

    def hilbert_function(self, t: int) -> int:
        return self.relation_gb().hilbert_function(t)

    def standard_basis(self, t: int) -> List[Term]:
        return self.relation_gb().standard_terms(t)

    def is_zero(self) -> bool:
        return self.gens.is_zero() or self.relation_gb().quotient_is_zero()

    def relation_vectors(self) -> List[Column]:
        return list(self.rels.columns)

    def with_relations(self, vectors: Iterable[Sequence[Polynomial]], label: Optional[str] = None) -> "GradedModulePresentation":
        """M / (submodule generated by the images of vectors)."""
        extra = map_from_vectors(self.ring, self.gens, vectors)
        combined = GradedMap(
            self.ring,
            self.rels.source.direct_sum(extra.source),
            self.gens,
            list(self.rels.columns) + list(extra.columns),
        )
        return GradedModulePresentation(self.ring, self.gens, combined, label=self.label if label is None else label)

    def quotient_by_linear_form(self, form: Polynomial) -> "GradedModulePresentation":
        """M / lM."""
        zero = self.ring.zero()
        vectors = [
            tuple(form if k == j else zero for k in range(self.gens.rank))
            for j in range(self.gens.rank)
        ]
        return self.with_relations(vectors)

    def shifted(self, delta: int) -> "GradedModulePresentation":
        """The module with every degree raised by delta (indeg grows by delta)."""
        rels = GradedMap(self.ring, self.rels.source.shifted(delta), self.gens.shifted(delta), self.rels.columns)
        return GradedModulePresentation(self.ring, self.gens.shifted(delta), rels, label=self.label)

    def direct_sum(self, other: "GradedModulePresentation") -> "GradedModulePresentation":
        zero = self.ring.zero()
        r, s = self.gens.rank, other.gens.rank
        columns = [tuple(c) + (zero,) * s for c in self.rels.columns]
        columns += [(zero,) * r + tuple(c) for c in other.rels.columns]
        rels = GradedMap(
            self.ring,
            self.rels.source.direct_sum(other.rels.source),
            self.gens.direct_sum(other.gens),
            columns,
        )
        return GradedModulePresentation(self.ring, self.gens.direct_sum(other.gens), rels)

    def change_ring(self, images: Sequence[Polynomial], target: PolynomialRing) -> "GradedModulePresentation":
        """Apply the linear ring map x_i -> images[i] to every relation."""
        columns = [tuple(entry.substitute(images, target) for entry in column) for column in self.rels.columns]
        return GradedModulePresentation.from_relations(target, self.gens, columns, label=self.label)

    def minimalized(self) -> "GradedModulePresentation":
        """Equivalent presentation without unit entries: its generators are minimal."""
        if "minimal" not in self.cache:
            if self.rels.source.is_zero():
                self.cache["minimal"] = self
            else:
                pruned, removed = eliminate_unit_entries(self.rels)
                if not removed and pruned.source == self.rels.source:
                    self.cache["minimal"] = self
                else:
                    minimal = GradedModulePresentation(self.ring, pruned.target, pruned, label=self.label)
                    logger.debug(f"Pruned {len(removed)} redundant generators from {self.label or 'module'}")
                    self.cache["minimal"] = minimal
        return self.cache["minimal"]

    def canonical_key(self) -> Tuple:
        """Equal for presentations with the same generators and relation submodule."""
        return (self.ring.p, self.ring.variables) + self.relation_gb().canonical_key()

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"GradedModulePresentation{name}(gens={self.gens!r}, relations={self.rels.source.rank})"
