"""
Minimal Graded Free Resolutions for regext

Resolutions are built by iterated syzygies: after each kernel computation
the unit entries of the new map are cancelled, which removes the matching
columns of the previous differential. The result is minimal, so the graded
Betti numbers are read off the twists.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, Field

from .free_modules import FreeComplex, GradedFreeModule, GradedMap, compose
from .groebner import syzygy_module
from .numbers import NEG_INF, POS_INF, ExtendedInt
from .presentation import GradedModulePresentation, eliminate_unit_entries
from .ring import AlgebraError

logger = logging.getLogger(__name__)


class InternalConsistencyError(AlgebraError):
    """Raised when an identity that must hold for a correct engine fails."""
    pass


class FreeResolution:
    """
    F_pd -> ... -> F_1 -> F_0 with maps[i - 1] = d_i: F_i -> F_{i-1}.

    A resolution of the zero module has no modules at all.
    """

    def __init__(self, ring, modules: List[GradedFreeModule], maps: List[GradedMap]):
        self.ring = ring
        self.modules = tuple(modules)
        self.maps = tuple(maps)

    @property
    def length(self) -> int:
        """Projective dimension; -1 for the zero module."""
        return len(self.modules) - 1

    def differential(self, i: int) -> GradedMap:
        """d_i: F_i -> F_{i-1}."""
        return self.maps[i - 1]

    def is_complex(self) -> bool:
        return all(compose(self.maps[i], self.maps[i + 1]).is_zero() for i in range(len(self.maps) - 1))

    def is_minimal(self) -> bool:
        return not any(
            entry.is_constant() and not entry.is_zero()
            for d in self.maps for column in d.columns for entry in column
        )

    def __repr__(self) -> str:
        return f"FreeResolution({[m.rank for m in self.modules]})"


class BettiTable(BaseModel):
    """Graded Betti numbers beta_{i,j} = dim Tor_i(M, k)_j."""

    n: int = Field(..., description="Number of variables of the ring")
    entries: Dict[int, Dict[int, int]] = Field(
        default_factory=dict, description="Homological degree i -> internal degree j -> beta_{i,j}"
    )

    def beta(self, i: int, j: int) -> int:
        return self.entries.get(i, {}).get(j, 0)

    def total(self, i: int) -> int:
        """T_i."""
        return sum(self.entries.get(i, {}).values())

    def f(self, i: int) -> ExtendedInt:
        row = self.entries.get(i)
        return min(row) if row else POS_INF

    def b(self, i: int) -> ExtendedInt:
        row = self.entries.get(i)
        return max(row) if row else NEG_INF

    @property
    def pd(self) -> int:
        return max(self.entries) if self.entries else -1

    @property
    def reg(self) -> ExtendedInt:
        if not self.entries:
            return NEG_INF
        return max(max(row) - i for i, row in self.entries.items())

    @property
    def indeg(self) -> ExtendedInt:
        return self.f(0)

    def pairs(self) -> List[Tuple[int, int, int]]:
        return [(i, j, self.entries[i][j]) for i in sorted(self.entries) for j in sorted(self.entries[i])]


class ModuleInvariants(BaseModel):
    """Numerical invariants of a graded module."""

    reg: ExtendedInt = Field(..., description="Castelnuovo-Mumford regularity")
    indeg: ExtendedInt = Field(..., description="Initial degree")
    end_finite_part: ExtendedInt = Field(..., description="end(H^0_m(M)), -inf when H^0_m(M) = 0")
    pd: int = Field(..., description="Projective dimension (-1 for the zero module)")
    depth: int = Field(..., description="n - pd")
    dim: int = Field(..., description="Krull dimension (0 for finite length)")
    mu: int = Field(..., description="Minimal number of generators")
    gen: ExtendedInt = Field(..., description="Largest degree of a minimal generator")


def minimal_resolution(M: GradedModulePresentation) -> FreeResolution:
    """
    Minimal graded free resolution of M.

    Args:
        M: The module

    Returns:
        FreeResolution whose F_0 twists are the degrees of a minimal
        generating set of M

    Raises:
        InternalConsistencyError: If the resolution is longer than n
    """
    if "resolution" in M.cache:
        return M.cache["resolution"]
    ring = M.ring
    minimal = M.minimalized()
    if minimal.gens.is_zero():
        resolution = FreeResolution(ring, [], [])
        M.cache["resolution"] = resolution
        return resolution

    modules: List[GradedFreeModule] = [minimal.gens]
    maps: List[GradedMap] = []
    current = minimal.rels
    while not current.source.is_zero():
        if len(maps) >= ring.n:
            raise InternalConsistencyError(f"Resolution of {M!r} is longer than n = {ring.n}")
        kernel = syzygy_module(current)
        kernel, removed = eliminate_unit_entries(kernel)
        if removed:
            keep = [j for j in range(current.source.rank) if j not in set(removed)]
            current = GradedMap(
                ring,
                GradedFreeModule(current.source.twists[j] for j in keep),
                current.target,
                [current.columns[j] for j in keep],
            )
        maps.append(current)
        modules.append(current.source)
        if current.source.is_zero():
            maps.pop()
            modules.pop()
            break
        current = kernel

    resolution = FreeResolution(ring, modules, maps)
    logger.debug(f"Resolution of {M.label or 'module'}: ranks {[m.rank for m in modules]}")
    M.cache["resolution"] = resolution
    return resolution


def betti_table(M: GradedModulePresentation) -> BettiTable:
    if "betti" not in M.cache:
        entries: Dict[int, Dict[int, int]] = {}
        for i, module in enumerate(minimal_resolution(M).modules):
            row: Dict[int, int] = defaultdict(int)
            for twist in module.twists:
                row[twist] += 1
            if row:
                entries[i] = dict(sorted(row.items()))
        M.cache["betti"] = BettiTable(n=M.ring.n, entries=entries)
    return M.cache["betti"]


def regularity(M: GradedModulePresentation) -> Union[int, float]:
    return betti_table(M).reg


def initial_degree(M: GradedModulePresentation) -> Union[int, float]:
    return betti_table(M).indeg


def invariants(M: GradedModulePresentation) -> ModuleInvariants:
    """
    reg, indeg, end of the finite part, pd, depth, dim, mu and gen of M.

    depth comes from Auslander-Buchsbaum and dim from the Hilbert
    polynomial, so the zero module gets dim 0 and depth n + 1.
    """
    from .hilbert import hilbert_poly
    from .saturation import saturate_h0

    table = betti_table(M)
    pd = table.pd
    return ModuleInvariants(
        reg=table.reg,
        indeg=table.indeg,
        end_finite_part=saturate_h0(M).h0_end,
        pd=pd,
        depth=M.ring.n - pd,
        dim=hilbert_poly(M).dim,
        mu=table.total(0),
        gen=table.b(0),
    )


def dual_complex(F: FreeResolution) -> FreeComplex:
    """
    Hom(F, R): C^i = F_i^* and d^i = transpose(d_{i+1}): C^i -> C^{i+1}.

    Args:
        F: A minimal free resolution

    Returns:
        The cohomologically indexed dual complex
    """
    modules = {i: module.dual() for i, module in enumerate(F.modules)}
    differentials = {i: F.maps[i].transpose() for i in range(len(F.maps))}
    return FreeComplex(F.ring, modules, differentials)

