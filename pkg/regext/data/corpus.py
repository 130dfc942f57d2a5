"""
Corpus Data for regext

Named reference modules in the presentation text format, and a seeded
generator of random homogeneous presentations with forced strata (cyclic
monomial quotients, complete intersections, finite length quotients, modules
with nonzero H^0_m, truncations). All randomness comes from one seed.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from regext.utils.cohomology import truncate
from regext.utils.free_modules import GradedFreeModule
from regext.utils.presentation import GradedModulePresentation
from regext.utils.presentation_io import parse_presentation, read_presentation, write_presentation
from regext.utils.ring import DEFAULT_PRIME, Polynomial, PolynomialRing, monomials_of_degree

logger = logging.getLogger(__name__)

PRESENTATION_SUFFIX = ".pres"

REFERENCE_MODULES: Dict[str, Dict[str, Any]] = {
    "free_xy": {
        "description": "The ring k[x,y] itself",
        "text": "RING 32003 x y\nGENS 0\n",
        "values": {"reg": 0, "dim": 2, "hdeg": 1},
    },
    "residue_field_xy": {
        "description": "k = R/(x,y), resolved by the Koszul complex",
        "text": "RING 32003 x y\nREL x\nREL y\n",
        "values": {"reg": 0, "dim": 0, "hdeg": 1},
    },
    "line_xy": {
        "description": "R/(x) over k[x,y]",
        "text": "RING 32003 x y\nREL x\n",
        "values": {"reg": 0, "dim": 1, "hdeg": 1},
    },
    "x2_xy": {
        "description": "R/(x^2, xy): a line with an embedded point",
        "text": "RING 32003 x y\nGENS 0\nREL x^2\nREL x*y\n",
        "values": {"reg": 1, "dim": 1, "hdeg": 2},
    },
    "x2_y2": {
        "description": "The complete intersection R/(x^2, y^2)",
        "text": "RING 32003 x y\nREL x^2\nREL y^2\n",
        "values": {"reg": 2, "dim": 0, "hdeg": 4},
    },
    "maximal_ideal_xy": {
        "description": "m = (x, y) as a module: two generators of degree 1, one Koszul relation",
        "text": "RING 32003 x y\nGENS -1 -1\nREL y | -x\n",
        "values": {"reg": 1, "dim": 2, "hdeg": 2},
    },
    "mixed_twists_xy": {
        "description": "Generators in degrees 0 and 1 tied by x^2 e_0 + y e_1",
        "text": "RING 32003 x y\nGENS 0 -1\nREL x^2 | y\n",
        "values": {"dim": 2},
    },
    "line_xyz": {
        "description": "R/(x) over k[x,y,z], Hilbert polynomial t + 1",
        "text": "RING 32003 x y z\nREL x\n",
        "values": {"reg": 0, "dim": 2, "hdeg": 1},
    },
    "residue_field_xyz": {
        "description": "k = R/(x,y,z)",
        "text": "RING 32003 x y z\nREL x\nREL y\nREL z\n",
        "values": {"reg": 0, "dim": 0, "hdeg": 1},
    },
    "twisted_cubic": {
        "description": "The twisted cubic curve in P^3: arithmetically Cohen-Macaulay of degree 3",
        "text": "RING 32003 x y z w\nREL x*z - y^2\nREL x*w - y*z\nREL y*w - z^2\n",
        "values": {"reg": 1, "dim": 2, "hdeg": 3},
    },
}


def list_reference_modules() -> List[str]:
    return sorted(REFERENCE_MODULES)


def get_reference_module(name: str) -> GradedModulePresentation:
    """
    Parse a named reference module.

    Raises:
        KeyError: If the name is unknown
    """
    if name not in REFERENCE_MODULES:
        raise KeyError(f"Unknown reference module {name!r}; available: {', '.join(list_reference_modules())}")
    return parse_presentation(REFERENCE_MODULES[name]["text"], label=name)


class CorpusParams(BaseModel):
    """Shape of a generated corpus."""

    n: int = Field(2, ge=2, le=4, description="Number of variables")
    max_deg: int = Field(3, ge=1, le=4, description="Largest degree of a relation entry")
    num_gens: int = Field(2, ge=1, le=3, description="Generators of the random presentations")
    num_rels: int = Field(3, ge=1, le=5, description="Relations of the random presentations")
    count: int = Field(20, ge=0, description="Number of modules")
    prime: int = Field(DEFAULT_PRIME, description="Coefficient prime")


class CorpusGenerator:
    """Draws presentations from numpy's default_rng, one child generator per instance."""

    STRATA = ("complete_intersection", "cyclic_monomial", "finite_length", "embedded_point", "truncation")

    def __init__(self, params: CorpusParams, seed: int):
        self.params = params
        self.seed = seed
        self.ring = PolynomialRing.standard(params.n, params.prime)
        self.rng = np.random.default_rng(seed)
        self.logger = logging.getLogger(__name__)

    def _child(self) -> np.random.Generator:
        return np.random.default_rng(int(self.rng.integers(0, 2**31)))

    def _coefficient(self, rng: np.random.Generator) -> int:
        return int(rng.integers(1, self.ring.p))

    def _monomial(self, rng: np.random.Generator, degree: int) -> Polynomial:
        candidates = monomials_of_degree(self.ring.n, degree)
        return Polynomial.monomial(self.ring, candidates[int(rng.integers(0, len(candidates)))])

    def random_form(self, rng: np.random.Generator, degree: int, terms: int = 2) -> Polynomial:
        """A homogeneous polynomial of the given degree with at most `terms` terms."""
        if degree < 0:
            return self.ring.zero()
        candidates = monomials_of_degree(self.ring.n, degree)
        size = min(terms, len(candidates))
        chosen = rng.choice(len(candidates), size=size, replace=False)
        return Polynomial(self.ring, {candidates[int(k)]: self._coefficient(rng) for k in sorted(chosen)})

    def complete_intersection(self, rng: np.random.Generator) -> GradedModulePresentation:
        c = int(rng.integers(1, self.ring.n + 1))
        powers = [int(rng.integers(1, self.params.max_deg + 1)) for _ in range(c)]
        return GradedModulePresentation.cyclic(self.ring, [self.ring.var(k) ** a for k, a in enumerate(powers)])

    def cyclic_monomial(self, rng: np.random.Generator) -> GradedModulePresentation:
        count = int(rng.integers(1, self.params.num_rels + 1))
        generators = [self._monomial(rng, int(rng.integers(1, self.params.max_deg + 1))) for _ in range(count)]
        return GradedModulePresentation.cyclic(self.ring, generators)

    def finite_length(self, rng: np.random.Generator) -> GradedModulePresentation:
        """R / m^t with t kept small for four variables."""
        cap = 2 if self.ring.n == 4 else min(self.params.max_deg, 3)
        t = int(rng.integers(1, cap + 1))
        generators = [Polynomial.monomial(self.ring, exps) for exps in monomials_of_degree(self.ring.n, t)]
        return GradedModulePresentation.cyclic(self.ring, generators)

    def embedded_point(self, rng: np.random.Generator) -> GradedModulePresentation:
        """R / x_1 m, plus a monomial in the other variables: H^0_m contains the class of x_1."""
        x = self.ring.var(0)
        generators = [x * v for v in self.ring.gens()]
        if rng.integers(0, 2):
            degree = int(rng.integers(2, self.params.max_deg + 2))
            exps = [0] * self.ring.n
            exps[int(rng.integers(1, self.ring.n))] = degree
            generators.append(Polynomial.monomial(self.ring, exps))
        return GradedModulePresentation.cyclic(self.ring, generators)

    def truncation(self, rng: np.random.Generator) -> GradedModulePresentation:
        base = self.cyclic_monomial(rng)
        return truncate(base, int(rng.integers(1, 3)))

    def random_presentation(self, rng: np.random.Generator) -> GradedModulePresentation:
        """num_gens generators in degrees 0 or 1 and num_rels random homogeneous relations."""
        degrees = sorted(int(rng.integers(0, 2)) for _ in range(self.params.num_gens))
        gens = GradedFreeModule(degrees)
        relations = []
        for _ in range(self.params.num_rels):
            target = max(degrees) + int(rng.integers(1, self.params.max_deg + 1))
            column = []
            for degree in degrees:
                entry_degree = target - degree
                keep = entry_degree <= self.params.max_deg and rng.integers(0, 3) > 0
                column.append(self.random_form(rng, entry_degree) if keep else self.ring.zero())
            if all(entry.is_zero() for entry in column):
                column[0] = self.random_form(rng, target - degrees[0])
            relations.append(column)
        return GradedModulePresentation.from_relations(self.ring, gens, relations)

    def forced(self) -> List[Tuple[str, GradedModulePresentation]]:
        """The (x^2, y^2) complete intersection, then one instance of each stratum."""
        x, y = self.ring.var(0), self.ring.var(1)
        result = [("complete_intersection", GradedModulePresentation.cyclic(self.ring, [x**2, y**2]))]
        for stratum in self.STRATA:
            result.append((stratum, getattr(self, stratum)(self._child())))
        return result

    def generate(self) -> List[GradedModulePresentation]:
        if self.params.count == 0:
            return []
        entries = self.forced()
        while len(entries) < self.params.count:
            rng = self._child()
            if rng.integers(0, 4) == 0:
                stratum = self.STRATA[int(rng.integers(0, len(self.STRATA)))]
                entries.append((stratum, getattr(self, stratum)(rng)))
            else:
                entries.append(("random", self.random_presentation(rng)))
        modules = []
        for index, (stratum, M) in enumerate(entries[: self.params.count]):
            M.label = f"n{self.ring.n}-{index:04d}-{stratum}"
            modules.append(M)
        self.logger.info(f"Generated {len(modules)} modules over {self.ring.variables} with seed {self.seed}")
        return modules


def generate_corpus(params: CorpusParams, seed: int) -> List[GradedModulePresentation]:
    """
    Deterministic pseudo-random corpus.

    Args:
        params: Ring size, degree limits and count
        seed: Seed for numpy's default_rng

    Returns:
        Labelled presentations; the same (params, seed) always gives the same list
    """
    return CorpusGenerator(params, seed).generate()


def save_corpus(modules: List[GradedModulePresentation], directory: Union[str, Path]) -> List[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    return [write_presentation(M, directory / f"{M.label}{PRESENTATION_SUFFIX}") for M in modules]


def load_corpus(directory: Union[str, Path]) -> List[Tuple[str, GradedModulePresentation]]:
    """(instance id, module) for every presentation file, sorted by file name."""
    directory = Path(directory)
    paths = sorted(directory.glob(f"*{PRESENTATION_SUFFIX}"))
    logger.debug(f"Loading {len(paths)} presentations from {directory}")
    return [(path.stem, read_presentation(path)) for path in paths]
