"""
Ext Modules, Local Cohomology and Truncation for regext

Ext^i(M, N) is the i-th cohomology of the total Hom complex of the minimal
resolutions of M and N; Ext^i(M, R) is the cohomology of the dualized
resolution of M. Cohomology of a free complex is presented as a subquotient:
the kernel of d^i comes from syzygies, and the image of d^{i-1} is adjoined
as relations through a second syzygy computation.

Local cohomology dimensions come from graded local duality,
dim H^i_m(M)_mu = dim Ext^{n-i}(M, R)_{-mu-n}.
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from .free_modules import (
    FreeComplex,
    GradedFreeModule,
    GradedMap,
    block_map,
    concatenate_maps,
)
from .groebner import syzygy_module
from .hilbert import hilbert_poly
from .presentation import GradedModulePresentation
from .resolution import FreeResolution, betti_table, dual_complex, minimal_resolution

logger = logging.getLogger(__name__)

Window = Tuple[int, int]


class ExtModule:
    """
    Ext^index(M, against) as a graded module.

    Attributes:
        presentation: Minimal presentation of the Ext module
        index: Cohomological index i
        against: "R" for Ext into the ring, otherwise the label of N
    """

    def __init__(self, presentation: GradedModulePresentation, index: int, against: str = "R"):
        self.presentation = presentation
        self.index = index
        self.against = against

    def is_zero(self) -> bool:
        return self.presentation.is_zero()

    @property
    def reg(self) -> Union[int, float]:
        return betti_table(self.presentation).reg

    @property
    def indeg(self) -> Union[int, float]:
        return betti_table(self.presentation).indeg

    @property
    def dim(self) -> int:
        return hilbert_poly(self.presentation).dim

    def hilbert_function(self, mu: int) -> int:
        return self.presentation.hilbert_function(mu)

    def dims(self, window: Window) -> Dict[int, int]:
        low, high = window
        return {mu: self.hilbert_function(mu) for mu in range(low, high + 1)}

    def __repr__(self) -> str:
        return f"ExtModule(i={self.index}, against={self.against}, {self.presentation!r})"


class LocalCohomologyTable(BaseModel):
    """dim H^i_m(M)_mu over a degree window, for 0 <= i <= dim M."""

    n: int = Field(..., description="Number of variables")
    top: int = Field(..., description="Largest i with possibly nonzero H^i (the dimension of M)")
    window: Tuple[int, int] = Field(..., description="Inclusive degree window")
    dims: Dict[int, Dict[int, int]] = Field(
        default_factory=dict, description="i -> degree -> dim H^i_m(M)_degree (nonzero only)"
    )

    def covers(self, mu: int) -> bool:
        return self.window[0] <= mu <= self.window[1]

    def dim(self, i: int, mu: int) -> int:
        return self.dims.get(i, {}).get(mu, 0)


def cohomology_presentation(C: FreeComplex, i: int, label: str = "") -> GradedModulePresentation:
    """
    Present ker(d^i) / im(d^{i-1}) of a free complex.

    Args:
        C: The complex
        i: Cohomological index
        label: Label of the resulting presentation

    Returns:
        Minimal presentation of H^i(C)
    """
    ring = C.ring
    module = C.module(i)
    if module.is_zero():
        return GradedModulePresentation.zero(ring, label=label)
    kernel = syzygy_module(C.differential(i))
    if kernel.source.is_zero():
        return GradedModulePresentation.zero(ring, label=label)
    incoming = C.differential(i - 1)
    combined = concatenate_maps(ring, [kernel, incoming], module)
    relations = syzygy_module(combined)
    rank = kernel.source.rank
    vectors = [column[:rank] for column in relations.columns]
    presentation = GradedModulePresentation.from_relations(ring, kernel.source, vectors, label=label)
    return presentation.minimalized()


def hom_complex(FM: FreeResolution, FN: FreeResolution) -> FreeComplex:
    """
    Total complex Hom(F^M, F^N).

    C^i is the sum over p of Hom(F_p, G_{p-i}); the basis element E(t, s)
    sends the s-th basis element of F_p to the t-th basis element of G_q and
    has degree twist(G_q, t) - twist(F_p, s). The differential is
    D(phi) = d^N phi - (-1)^i phi d^M.
    """
    ring = FM.ring
    pd_m, pd_n = FM.length, FN.length
    layout: Dict[int, Dict[Tuple[int, int, int], int]] = {}
    modules: Dict[int, GradedFreeModule] = {}
    for i in range(-pd_n, pd_m + 1):
        index: Dict[Tuple[int, int, int], int] = {}
        twists: List[int] = []
        for p in range(0, pd_m + 1):
            q = p - i
            if not 0 <= q <= pd_n:
                continue
            for t, b in enumerate(FN.modules[q].twists):
                for s, a in enumerate(FM.modules[p].twists):
                    index[(p, t, s)] = len(twists)
                    twists.append(b - a)
        layout[i] = index
        modules[i] = GradedFreeModule(twists)

    differentials: Dict[int, GradedMap] = {}
    for i in range(-pd_n, pd_m):
        sign = -1 if i % 2 == 0 else 1
        entries = {}
        target_index = layout.get(i + 1, {})
        for (p, t, s), column in layout[i].items():
            q = p - i
            if q >= 1:
                d_n = FN.differential(q)
                for u, entry in enumerate(d_n.columns[t]):
                    if not entry.is_zero():
                        row = target_index[(p, u, s)]
                        entries[(row, column)] = entries.get((row, column), ring.zero()) + entry
            if p + 1 <= pd_m:
                d_m = FM.differential(p + 1)
                for w, m_column in enumerate(d_m.columns):
                    entry = m_column[s]
                    if not entry.is_zero():
                        row = target_index[(p + 1, t, w)]
                        entries[(row, column)] = entries.get((row, column), ring.zero()) + entry.scale(sign)
        if not modules[i].is_zero() and not modules[i + 1].is_zero():
            differentials[i] = block_map(ring, modules[i], modules[i + 1], entries)
    return FreeComplex(ring, modules, differentials)


def _zero_ext(M: GradedModulePresentation, i: int, against: str) -> ExtModule:
    return ExtModule(GradedModulePresentation.zero(M.ring, label=f"Ext^{i}"), i, against)


def ext_module(M: GradedModulePresentation, N: GradedModulePresentation, i: int) -> ExtModule:
    """
    Ext^i(M, N) from the Hom complex of the minimal resolutions.

    Args:
        M: First argument
        N: Second argument
        i: Cohomological index

    Returns:
        ExtModule; zero for i < 0 and i > pd(M)
    """
    against = N.label or "N"
    FM = minimal_resolution(M)
    if i < 0 or i > FM.length:
        return _zero_ext(M, i, against)
    complexes = M.cache.setdefault("hom_complex", {})
    key = N.canonical_key()
    if key not in complexes:
        complexes[key] = hom_complex(FM, minimal_resolution(N))
    presentation = cohomology_presentation(complexes[key], i, label=f"Ext^{i}({M.label or 'M'},{against})")
    logger.debug(f"Computed {presentation.label}")
    return ExtModule(presentation, i, against)


def ext_into_ring(M: GradedModulePresentation, i: int) -> ExtModule:
    """
    Ext^i(M, R) as the cohomology of the dual of the minimal resolution.

    Args:
        M: The module
        i: Cohomological index

    Returns:
        ExtModule; zero for i < 0 and i > pd(M)
    """
    cache = M.cache.setdefault("ext_ring", {})
    if i in cache:
        return cache[i]
    F = minimal_resolution(M)
    if i < 0 or i > F.length:
        ext = _zero_ext(M, i, "R")
    else:
        if "dual_complex" not in M.cache:
            M.cache["dual_complex"] = dual_complex(F)
        presentation = cohomology_presentation(
            M.cache["dual_complex"], i, label=f"Ext^{i}({M.label or 'M'},R)"
        )
        ext = ExtModule(presentation, i, "R")
    cache[i] = ext
    return ext


def local_cohomology_dims(M: GradedModulePresentation, window: Window) -> LocalCohomologyTable:
    """
    dim H^i_m(M)_mu for 0 <= i <= dim M and mu in the window.

    Args:
        M: The module
        window: Inclusive degree range (low, high)

    Returns:
        LocalCohomologyTable built from Ext^{n-i}(M, R) by graded duality
    """
    n = M.ring.n
    low, high = window
    top = hilbert_poly(M).dim if not M.is_zero() else -1
    dims: Dict[int, Dict[int, int]] = {}
    for i in range(0, top + 1):
        ext = ext_into_ring(M, n - i)
        if ext.is_zero():
            continue
        row = {mu: ext.hilbert_function(-mu - n) for mu in range(low, high + 1)}
        row = {mu: value for mu, value in row.items() if value}
        if row:
            dims[i] = row
    return LocalCohomologyTable(n=n, top=max(top, 0), window=(low, high), dims=dims)


def truncate(M: GradedModulePresentation, t: int) -> GradedModulePresentation:
    """
    Presentation of the truncation M_{>=t}.

    Its generators are a basis of M_t together with the generators of M of
    degree > t; the relations are the syzygies of these elements modulo the
    relations of M.

    Args:
        M: The module
        t: Truncation degree

    Returns:
        Minimal presentation of M_{>=t}; M itself when t <= indeg(M)
    """
    ring = M.ring
    label = f"{M.label}>={t}" if M.label else ""
    if M.is_zero():
        return M
    minimal = M.minimalized()
    if t <= min(minimal.gens.twists):
        return M

    zero = ring.zero()
    rank = minimal.gens.rank
    vectors = []
    twists: List[int] = []
    for position, exps in minimal.standard_basis(t):
        vectors.append(tuple(
            ring.one().multiply_monomial(exps) if k == position else zero for k in range(rank)
        ))
        twists.append(t)
    for position, twist in enumerate(minimal.gens.twists):
        if twist > t:
            vectors.append(tuple(ring.one() if k == position else zero for k in range(rank)))
            twists.append(twist)
    if not vectors:
        return GradedModulePresentation.zero(ring, label=label)

    new_gens = GradedFreeModule(twists)
    inclusion = GradedMap(ring, new_gens, minimal.gens, vectors)
    combined = concatenate_maps(ring, [inclusion, minimal.rels], minimal.gens)
    syzygies = syzygy_module(combined)
    relations = [column[: new_gens.rank] for column in syzygies.columns]
    truncated = GradedModulePresentation.from_relations(ring, new_gens, relations, label=label)
    return truncated.minimalized()


def strand_ext_dimension(M: GradedModulePresentation, i: int, mu: int) -> int:
    """dim Ext^i(M, R)_mu by linear algebra on the strands of the dual complex."""
    from .linalg import strand_homology_dimension

    F = minimal_resolution(M)
    if i < 0 or i > F.length:
        return 0
    if "dual_complex" not in M.cache:
        M.cache["dual_complex"] = dual_complex(F)
    C: FreeComplex = M.cache["dual_complex"]
    return strand_homology_dimension(C.differential(i - 1), C.differential(i), mu)


def shape_window(M: GradedModulePresentation, low_margin: int, high_margin: int) -> Optional[Window]:
    """[indeg - low_margin, reg + high_margin], None for the zero module."""
    table = betti_table(M)
    if not table.entries:
        return None
    return (int(table.indeg) - low_margin, int(table.reg) + high_margin)
