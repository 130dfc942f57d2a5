"""
Presentation File Format for regext

Line-based text format for a graded module over a polynomial ring:

    # comment
    RING 32003 x y
    GENS 0 -1
    REL x^2 | y
    REL x | 0

GENS lists twists in the R(a) sense, so a generator written as a sits in
degree -a. Each REL line holds one relation with one entry per generator,
separated by '|'. Polynomials are written as c*x^e*y^f +/- ...; coefficients
are reduced mod p. Every relation must be homogeneous.
"""

import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .free_modules import GradedFreeModule
from .presentation import GradedModulePresentation, PresentationError, vector_degree
from .ring import AlgebraError, Polynomial, PolynomialRing

logger = logging.getLogger(__name__)


class PresentationParseError(AlgebraError):
    """Raised for malformed presentation text; carries line and column (1-based)."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class PolynomialParser:
    """Recursive-descent parser for sums of products of integers and powers of variables."""

    TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))")

    def __init__(self, ring: PolynomialRing):
        self.ring = ring

    def _tokenize(self, text: str, line: int, offset: int) -> List[Tuple[str, str, int]]:
        tokens: List[Tuple[str, str, int]] = []
        position = 0
        stripped = text.rstrip()
        while position < len(stripped):
            match = self.TOKEN.match(stripped, position)
            if not match:
                column = offset + position + len(stripped[position:]) - len(stripped[position:].lstrip()) + 1
                raise PresentationParseError(f"unexpected character {stripped[position:].strip()[0]!r}", line, column)
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), offset + match.start(kind) + 1))
            position = match.end()
        return tokens

    def parse(self, text: str, line: int = 1, offset: int = 0) -> Polynomial:
        """
        Parse one polynomial.

        Args:
            text: The polynomial text
            line: Line number for diagnostics
            offset: Column offset of text within its line

        Returns:
            The polynomial in self.ring

        Raises:
            PresentationParseError: On syntax errors or unknown variables
        """
        tokens = self._tokenize(text, line, offset)
        if not tokens:
            raise PresentationParseError("empty polynomial", line, offset + 1)
        result = self.ring.zero()
        index = 0
        sign = 1
        if tokens[0][0] == "op" and tokens[0][1] in "+-":
            sign = -1 if tokens[0][1] == "-" else 1
            index = 1
        while True:
            term, index = self._term(tokens, index, line)
            result = result + term.scale(sign)
            if index == len(tokens):
                return result
            kind, value, column = tokens[index]
            if kind != "op" or value not in "+-":
                raise PresentationParseError(f"expected '+' or '-', found {value!r}", line, column)
            sign = -1 if value == "-" else 1
            index += 1

    def _term(self, tokens: List[Tuple[str, str, int]], index: int, line: int) -> Tuple[Polynomial, int]:
        term = self.ring.one()
        while True:
            factor, index = self._factor(tokens, index, line)
            term = term * factor
            if index < len(tokens) and tokens[index][:2] == ("op", "*"):
                index += 1
                continue
            return term, index

    def _factor(self, tokens: List[Tuple[str, str, int]], index: int, line: int) -> Tuple[Polynomial, int]:
        if index >= len(tokens):
            column = tokens[-1][2] + len(tokens[-1][1]) if tokens else 1
            raise PresentationParseError("unexpected end of polynomial", line, column)
        kind, value, column = tokens[index]
        if kind == "int":
            return Polynomial.constant(self.ring, int(value)), index + 1
        if kind == "name":
            if value not in self.ring.variables:
                raise PresentationParseError(f"unknown variable {value!r}", line, column)
            factor = self.ring.var(value)
            index += 1
            if index < len(tokens) and tokens[index][:2] == ("op", "^"):
                if index + 1 >= len(tokens) or tokens[index + 1][0] != "int":
                    raise PresentationParseError("expected an exponent after '^'", line, tokens[index][2])
                factor = factor ** int(tokens[index + 1][1])
                index += 2
            return factor, index
        raise PresentationParseError(f"unexpected {value!r}", line, column)


def _split_keyword(raw: str) -> Tuple[str, str, int]:
    stripped = raw.lstrip()
    lead = len(raw) - len(stripped)
    keyword, _, rest = stripped.partition(" ")
    return keyword, rest, lead + len(keyword) + 1


def parse_presentation(text: str, label: str = "") -> GradedModulePresentation:
    """
    Parse the text format into a validated presentation.

    Args:
        text: File contents
        label: Label attached to the presentation

    Returns:
        GradedModulePresentation

    Raises:
        PresentationParseError: On syntax errors, unknown variables, a
            non-prime modulus or an inhomogeneous relation
    """
    ring: Optional[PolynomialRing] = None
    gens: Optional[GradedFreeModule] = None
    relations: List[Tuple[int, List[Polynomial]]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        keyword, rest, offset = _split_keyword(content)
        upper = keyword.upper()
        if upper == "RING":
            if ring is not None:
                raise PresentationParseError("duplicate RING line", line_number)
            fields = rest.split()
            if len(fields) < 2:
                raise PresentationParseError("RING needs a prime and at least one variable", line_number)
            try:
                p = int(fields[0])
            except ValueError:
                raise PresentationParseError(f"modulus {fields[0]!r} is not an integer", line_number, offset + 1)
            try:
                ring = PolynomialRing(p=p, variables=tuple(fields[1:]))
            except ValueError as e:
                reason = str(e).splitlines()
                detail = "non-prime modulus" if "prime" in str(e) else "invalid variable list"
                raise PresentationParseError(f"{detail}: {reason[-1].strip() if reason else e}", line_number, offset + 1)
        elif upper == "GENS":
            if ring is None:
                raise PresentationParseError("GENS before RING", line_number)
            if gens is not None:
                raise PresentationParseError("duplicate GENS line", line_number)
            try:
                gens = GradedFreeModule(-int(value) for value in rest.split())
            except ValueError:
                raise PresentationParseError("GENS expects integers", line_number, offset + 1)
        elif upper == "REL":
            if ring is None:
                raise PresentationParseError("REL before RING", line_number)
            if gens is None:
                gens = GradedFreeModule([0])
            parser = PolynomialParser(ring)
            entries: List[Polynomial] = []
            column = offset
            for piece in rest.split("|"):
                entries.append(parser.parse(piece, line_number, column))
                column += len(piece) + 1
            if len(entries) != gens.rank:
                raise PresentationParseError(
                    f"relation has {len(entries)} entries for {gens.rank} generators", line_number, offset + 1
                )
            try:
                vector_degree(entries, gens)
            except PresentationError as e:
                raise PresentationParseError(f"inhomogeneous relation: {e}", line_number, offset + 1)
            relations.append((line_number, entries))
        else:
            raise PresentationParseError(f"unknown keyword {keyword!r}", line_number, len(raw) - len(raw.lstrip()) + 1)

    if ring is None:
        raise PresentationParseError("missing RING line", 1)
    if gens is None:
        gens = GradedFreeModule([0])
    presentation = GradedModulePresentation.from_relations(ring, gens, [e for _, e in relations], label=label)
    logger.debug(f"Parsed {presentation!r}")
    return presentation


def emit_presentation(M: GradedModulePresentation) -> str:
    """Text form of a presentation; parse_presentation reads it back."""
    lines = []
    if M.label:
        lines.append(f"# {M.label}")
    lines.append(f"RING {M.ring.p} {' '.join(M.ring.variables)}")
    lines.append("GENS " + " ".join(str(-a) for a in M.gens.twists))
    for column in M.rels.columns:
        lines.append("REL " + " | ".join(str(entry) for entry in column))
    return "\n".join(lines) + "\n"


def read_presentation(path: Union[str, Path]) -> GradedModulePresentation:
    path = Path(path)
    return parse_presentation(path.read_text(encoding="utf-8"), label=path.stem)


def write_presentation(M: GradedModulePresentation, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(emit_presentation(M), encoding="utf-8")
    return path
