"""
Graded Free Modules and Homogeneous Maps for regext

A graded free module F = R(-a_1) + ... + R(-a_s) is stored by the degrees
a_j of its basis elements. A GradedMap is a matrix of polynomials with one
column per source generator; entry (i, j) is zero or homogeneous of degree
source.twists[j] - target.twists[i]. FreeComplex holds a cohomologically
indexed complex of such maps (dualized resolutions, Hom complexes).
"""

import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from .ring import AlgebraError, Polynomial, PolynomialRing

logger = logging.getLogger(__name__)

Column = Tuple[Polynomial, ...]


class ShapeError(AlgebraError):
    """Custom exception for mismatched free modules and non-homogeneous maps."""
    pass


class GradedFreeModule:
    """Twists a_1..a_s of F = R(-a_1) + ... + R(-a_s); the empty list is the zero module."""

    __slots__ = ("twists",)

    def __init__(self, twists: Iterable[int] = ()):
        self.twists: Tuple[int, ...] = tuple(int(a) for a in twists)

    @classmethod
    def zero(cls) -> "GradedFreeModule":
        return cls(())

    @property
    def rank(self) -> int:
        return len(self.twists)

    def is_zero(self) -> bool:
        return not self.twists

    def direct_sum(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule(self.twists + other.twists)

    def shifted(self, delta: int) -> "GradedFreeModule":
        """Every basis element moved up by delta degrees."""
        return GradedFreeModule(a + delta for a in self.twists)

    def dual(self) -> "GradedFreeModule":
        """Hom(F, R): R(-a) becomes R(a)."""
        return GradedFreeModule(-a for a in self.twists)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradedFreeModule) and other.twists == self.twists

    def __hash__(self) -> int:
        return hash(self.twists)

    def __repr__(self) -> str:
        if not self.twists:
            return "0"
        return " + ".join(f"R({-a})" for a in self.twists)


class GradedMap:
    """
    Homogeneous matrix between graded free modules.

    columns[j][i] is the entry in row i (target generator) and column j
    (source generator).
    """

    __slots__ = ("ring", "source", "target", "columns")

    def __init__(
        self,
        ring: PolynomialRing,
        source: GradedFreeModule,
        target: GradedFreeModule,
        columns: Sequence[Sequence[Polynomial]],
    ):
        if len(columns) != source.rank:
            raise ShapeError(f"Expected {source.rank} columns, got {len(columns)}")
        for j, column in enumerate(columns):
            if len(column) != target.rank:
                raise ShapeError(f"Column {j} has {len(column)} entries, target rank is {target.rank}")
        self.ring = ring
        self.source = source
        self.target = target
        self.columns: Tuple[Column, ...] = tuple(tuple(column) for column in columns)

    @classmethod
    def from_rows(
        cls,
        ring: PolynomialRing,
        source: GradedFreeModule,
        target: GradedFreeModule,
        rows: Sequence[Sequence[Polynomial]],
    ) -> "GradedMap":
        if len(rows) != target.rank:
            raise ShapeError(f"Expected {target.rank} rows, got {len(rows)}")
        columns = [[rows[i][j] for i in range(target.rank)] for j in range(source.rank)]
        return cls(ring, source, target, columns)

    @classmethod
    def identity(cls, ring: PolynomialRing, module: GradedFreeModule) -> "GradedMap":
        one, zero = ring.one(), ring.zero()
        columns = [[one if i == j else zero for i in range(module.rank)] for j in range(module.rank)]
        return cls(ring, module, module, columns)

    @classmethod
    def zero_map(cls, ring: PolynomialRing, source: GradedFreeModule, target: GradedFreeModule) -> "GradedMap":
        zero = ring.zero()
        return cls(ring, source, target, [[zero] * target.rank for _ in range(source.rank)])

    def entry(self, i: int, j: int) -> Polynomial:
        return self.columns[j][i]

    def rows(self) -> List[List[Polynomial]]:
        return [[self.columns[j][i] for j in range(self.source.rank)] for i in range(self.target.rank)]

    def is_zero(self) -> bool:
        return all(entry.is_zero() for column in self.columns for entry in column)

    def transpose(self) -> "GradedMap":
        """The dual map Hom(target, R) -> Hom(source, R)."""
        return GradedMap.from_rows(
            self.ring, self.target.dual(), self.source.dual(), [list(column) for column in self.columns]
        )

    def scale(self, factor: int) -> "GradedMap":
        return GradedMap(
            self.ring, self.source, self.target,
            [[entry.scale(factor) for entry in column] for column in self.columns],
        )

    def apply(self, vector: Sequence[Polynomial]) -> Column:
        """Image of a source vector given by its coordinates."""
        if len(vector) != self.source.rank:
            raise ShapeError(f"Vector of length {len(vector)} for a source of rank {self.source.rank}")
        result = [self.ring.zero() for _ in range(self.target.rank)]
        for coeff, column in zip(vector, self.columns):
            if coeff.is_zero():
                continue
            for i, entry in enumerate(column):
                if not entry.is_zero():
                    result[i] = result[i] + coeff * entry
        return tuple(result)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GradedMap)
            and other.source == self.source
            and other.target == self.target
            and other.columns == self.columns
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.columns))

    def __repr__(self) -> str:
        return f"GradedMap({self.source!r} -> {self.target!r}, {self.target.rank}x{self.source.rank})"


def map_is_homogeneous(f: GradedMap) -> bool:
    """
    Check the degree-0 map convention.

    Args:
        f: The map to check

    Returns:
        True if every nonzero entry (i, j) is homogeneous of degree
        source.twists[j] - target.twists[i]
    """
    for j, column in enumerate(f.columns):
        for i, entry in enumerate(column):
            if entry.is_zero():
                continue
            if entry.homogeneous_degree() != f.source.twists[j] - f.target.twists[i]:
                return False
    return True


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """
    The composite f o g.

    Args:
        f: Outer map
        g: Inner map, with g.target equal to f.source

    Returns:
        The matrix product, a map g.source -> f.target

    Raises:
        ShapeError: If g.target differs from f.source
    """
    if f.source != g.target:
        raise ShapeError(f"Cannot compose: {g.target!r} is not {f.source!r}")
    return GradedMap(f.ring, g.source, f.target, [f.apply(column) for column in g.columns])


def block_map(
    ring: PolynomialRing,
    source: GradedFreeModule,
    target: GradedFreeModule,
    entries: Dict[Tuple[int, int], Polynomial],
) -> GradedMap:
    """Map from a sparse dict {(row, col): entry}."""
    zero = ring.zero()
    columns = [[zero] * target.rank for _ in range(source.rank)]
    for (i, j), entry in entries.items():
        columns[j][i] = entry
    return GradedMap(ring, source, target, columns)


class FreeComplex:
    """
    Cohomologically indexed complex of graded free modules.

    modules[i] is C^i and differentials[i] is d^i: C^i -> C^{i+1}. Indices
    without an entry hold the zero module.
    """

    def __init__(
        self,
        ring: PolynomialRing,
        modules: Dict[int, GradedFreeModule],
        differentials: Dict[int, GradedMap],
    ):
        self.ring = ring
        self.modules = {i: m for i, m in modules.items() if not m.is_zero()}
        self.differentials = dict(differentials)
        for i, d in self.differentials.items():
            if d.source != self.module(i) or d.target != self.module(i + 1):
                raise ShapeError(f"Differential d^{i} does not match C^{i} -> C^{i + 1}")

    def module(self, i: int) -> GradedFreeModule:
        return self.modules.get(i, GradedFreeModule.zero())

    def differential(self, i: int) -> GradedMap:
        if i in self.differentials:
            return self.differentials[i]
        return GradedMap.zero_map(self.ring, self.module(i), self.module(i + 1))

    def indices(self) -> List[int]:
        return sorted(self.modules)

    def is_complex(self) -> bool:
        """d^{i+1} o d^i = 0 everywhere."""
        for i in self.indices():
            if not compose(self.differential(i + 1), self.differential(i)).is_zero():
                return False
        return True

    def __repr__(self) -> str:
        ranks = {i: self.modules[i].rank for i in self.indices()}
        return f"FreeComplex({ranks})"


def direct_sum_modules(modules: Sequence[GradedFreeModule]) -> Tuple[GradedFreeModule, List[int]]:
    """Direct sum and the offset of each summand in it."""
    offsets: List[int] = []
    twists: List[int] = []
    for module in modules:
        offsets.append(len(twists))
        twists.extend(module.twists)
    return GradedFreeModule(twists), offsets


def concatenate_maps(ring: PolynomialRing, maps: Sequence[GradedMap], target: GradedFreeModule) -> GradedMap:
    """[f_1 | f_2 | ...]: the map from the direct sum of the sources into the common target."""
    for f in maps:
        if f.target != target:
            raise ShapeError("Concatenated maps must share their target")
    source, _ = direct_sum_modules([f.source for f in maps])
    columns = [column for f in maps for column in f.columns]
    return GradedMap(ring, source, target, columns)
