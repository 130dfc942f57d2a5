"""
Prime Field and Polynomial Arithmetic for regext

This module provides exact arithmetic over a prime field F_p, the standard
graded polynomial ring k[x_1..x_n] with its degrevlex monomial order, and an
immutable sparse Polynomial type. Every other engine builds on these types.
"""

import logging
import re
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 32003
MAX_PRIME = 2**31
MAX_EXPONENT = 2**31 - 1

Exponents = Tuple[int, ...]

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class AlgebraError(Exception):
    """Custom exception for ring, field and polynomial errors."""
    pass


class PrimeField:
    """Arithmetic in F_p with representatives in [0, p)."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p >= MAX_PRIME or not sympy.isprime(p):
            raise AlgebraError(f"Modulus {p} is not a prime below 2^31")
        self.p = p

    def normalize(self, value: int) -> int:
        return value % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p

    def symmetric(self, a: int) -> int:
        """Representative of a in (-p/2, p/2], used for printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


@lru_cache(maxsize=None)
def _prime_field(p: int) -> PrimeField:
    return PrimeField(p)


class PolynomialRing(BaseModel):
    """The standard graded ring k[x_1..x_n] over F_p; m is the ideal of the variables."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(DEFAULT_PRIME, description="Prime modulus of the coefficient field")
    variables: Tuple[str, ...] = Field(..., description="Variable names, highest first")

    @field_validator("p")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        if value >= MAX_PRIME or not sympy.isprime(value):
            raise ValueError(f"modulus {value} is not a prime below 2^31")
        return value

    @field_validator("variables")
    @classmethod
    def _check_variables(cls, value: Tuple[str, ...]) -> Tuple[str, ...]:
        if len(value) < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(value)) != len(value):
            raise ValueError(f"variable names are not distinct: {value}")
        for name in value:
            if not _IDENTIFIER.match(name):
                raise ValueError(f"invalid variable name: {name!r}")
        return value

    @classmethod
    def standard(cls, n: int, p: int = DEFAULT_PRIME) -> "PolynomialRing":
        """x, y, z, w for n <= 4, otherwise x1..xn."""
        if n <= 4:
            names = ("x", "y", "z", "w")[:n]
        else:
            names = tuple(f"x{i + 1}" for i in range(n))
        return cls(p=p, variables=names)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def field(self) -> PrimeField:
        return _prime_field(self.p)

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise AlgebraError(f"Unknown variable {name!r} in ring {self.variables}")

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial.constant(self, 1)

    def var(self, which: Union[int, str]) -> "Polynomial":
        index = self.index_of(which) if isinstance(which, str) else which
        if not 0 <= index < self.n:
            raise AlgebraError(f"Variable index {index} out of range for n={self.n}")
        exps = tuple(1 if k == index else 0 for k in range(self.n))
        return Polynomial(self, {exps: 1})

    def gens(self) -> List["Polynomial"]:
        return [self.var(i) for i in range(self.n)]

    def drop_last_variable(self) -> "PolynomialRing":
        """The ring on the first n-1 variables."""
        if self.n < 2:
            raise AlgebraError("Cannot drop a variable from a ring in one variable")
        return PolynomialRing(p=self.p, variables=self.variables[:-1])


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

def degrevlex_key(exps: Exponents) -> Tuple[int, ...]:
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(exps),) + tuple(-e for e in reversed(exps))


class Monomial:
    """An exponent vector together with its cached total degree."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        for e in exps:
            if e < 0:
                raise AlgebraError(f"Negative exponent in {exps}")
            if e > MAX_EXPONENT:
                raise AlgebraError(f"Exponent overflow in {exps}")
        self.exponents: Exponents = exps
        self.degree: int = sum(exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_lengths(self.exponents, other.exponents)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        _check_lengths(self.exponents, other.exponents)
        return divides(self.exponents, other.exponents)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and other.exponents == self.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise AlgebraError(f"Exponent vectors of different lengths: {len(a)} vs {len(b)}")


def monomial_compare(a: Monomial, b: Monomial, order: str = "degrevlex") -> int:
    """
    Compare two monomials.

    Args:
        a: First monomial
        b: Second monomial
        order: Monomial order; only "degrevlex" is supported

    Returns:
        -1, 0 or 1 as a is smaller than, equal to or larger than b

    Raises:
        AlgebraError: If the exponent vectors have different lengths or the
            order is unknown
    """
    if order != "degrevlex":
        raise AlgebraError(f"Unsupported monomial order: {order}")
    _check_lengths(a.exponents, b.exponents)
    ka, kb = degrevlex_key(a.exponents), degrevlex_key(b.exponents)
    return (ka > kb) - (ka < kb)


def divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(b: Exponents, a: Exponents) -> Exponents:
    return tuple(y - x for x, y in zip(a, b))


def monomial_product(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomials_of_degree(n: int, degree: int) -> List[Exponents]:
    """All exponent vectors of the given total degree, in decreasing degrevlex order."""
    if degree < 0:
        return []
    result: List[Exponents] = []

    def build(prefix: List[int], remaining: int, slots: int) -> None:
        if slots == 1:
            result.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            build(prefix + [e], remaining - e, slots - 1)

    build([], degree, n)
    result.sort(key=degrevlex_key, reverse=True)
    return result


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """
    Sparse polynomial over F_p.

    Terms map exponent tuples to coefficients in [1, p). Instances are never
    mutated after construction.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Exponents, int], normalize: bool = True):
        self.ring = ring
        if normalize:
            p = ring.p
            cleaned: Dict[Exponents, int] = {}
            for exps, coeff in terms.items():
                if len(exps) != ring.n:
                    raise AlgebraError(f"Monomial {exps} does not live in a ring with n={ring.n}")
                c = coeff % p
                if c:
                    cleaned[tuple(exps)] = c
            self._terms = cleaned
        else:
            self._terms = dict(terms)

    @classmethod
    def constant(cls, ring: PolynomialRing, value: int) -> "Polynomial":
        return cls(ring, {(0,) * ring.n: value})

    @classmethod
    def monomial(cls, ring: PolynomialRing, exps: Iterable[int], coeff: int = 1) -> "Polynomial":
        return cls(ring, {Monomial(exps).exponents: coeff})

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.ring.n, 0)

    def degree(self) -> Optional[int]:
        """Total degree, None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_degree(self) -> Optional[int]:
        degrees = {sum(e) for e in self._terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def leading_term(self) -> Tuple[Exponents, int]:
        if not self._terms:
            raise AlgebraError("The zero polynomial has no leading term")
        exps = max(self._terms, key=degrevlex_key)
        return exps, self._terms[exps]

    def _check_ring(self, other: "Polynomial") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise AlgebraError("Polynomials live in different rings")

    def _coerce(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        raise TypeError(f"Cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = self._coerce(other)
        p = self.ring.p
        result = dict(self._terms)
        for exps, coeff in other._terms.items():
            c = (result.get(exps, 0) + coeff) % p
            if c:
                result[exps] = c
            else:
                result.pop(exps, None)
        return Polynomial(self.ring, result, normalize=False)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self._terms.items()}, normalize=False)

    def __sub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, factor: int) -> "Polynomial":
        p = self.ring.p
        factor %= p
        if factor == 0:
            return Polynomial(self.ring, {}, normalize=False)
        return Polynomial(self.ring, {e: c * factor % p for e, c in self._terms.items()}, normalize=False)

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return Polynomial(self.ring, {}, normalize=False)
        if self.degree() + other.degree() > MAX_EXPONENT:
            raise AlgebraError("Exponent overflow in polynomial product")
        p = self.ring.p
        result: Dict[Exponents, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                result[exps] = (result.get(exps, 0) + ca * cb) % p
        return Polynomial(self.ring, {e: c for e, c in result.items() if c}, normalize=False)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise AlgebraError("Negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def multiply_monomial(self, exps: Exponents, coeff: int = 1) -> "Polynomial":
        p = self.ring.p
        coeff %= p
        if coeff == 0:
            return Polynomial(self.ring, {}, normalize=False)
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(e, exps)): c * coeff % p for e, c in self._terms.items()},
            normalize=False,
        )

    def substitute(self, images: Sequence["Polynomial"], target: Optional[PolynomialRing] = None) -> "Polynomial":
        """
        Ring map sending x_i to images[i].

        Args:
            images: One polynomial per variable of this ring
            target: Ring of the images; defaults to this ring

        Returns:
            The image of this polynomial in the target ring
        """
        if len(images) != self.ring.n:
            raise AlgebraError(f"Expected {self.ring.n} images, got {len(images)}")
        target = target or self.ring
        result = target.zero()
        powers: Dict[Tuple[int, int], Polynomial] = {}
        for exps, coeff in self._terms.items():
            term = Polynomial.constant(target, coeff)
            for index, e in enumerate(exps):
                if e:
                    key = (index, e)
                    if key not in powers:
                        powers[key] = images[index] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def sorted_terms(self) -> List[Tuple[Exponents, int]]:
        """Terms in decreasing degrevlex order."""
        return sorted(self._terms.items(), key=lambda item: degrevlex_key(item[0]), reverse=True)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        field = self.ring.field
        pieces: List[Tuple[str, str]] = []
        for exps, coeff in self.sorted_terms():
            c = field.symmetric(coeff)
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.variables, exps) if e
            ]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self})"
