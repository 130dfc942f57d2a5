"""
Tests for the presentation text format.
"""

import pytest

from regext.utils.presentation_io import (
    PolynomialParser,
    PresentationParseError,
    emit_presentation,
    parse_presentation,
    read_presentation,
    write_presentation,
)


@pytest.mark.unit
def test_parse_residue_field():
    M = parse_presentation("RING 32003 x y\nREL x\nREL y\n")
    assert M.ring.variables == ("x", "y")
    assert M.gens.twists == (0,)
    assert M.rels.source.twists == (1, 1)
    assert M.hilbert_function(0) == 1
    assert M.hilbert_function(1) == 0


@pytest.mark.unit
def test_gens_values_are_negated_degrees():
    """GENS 0 -1 puts the second generator in degree 1."""
    M = parse_presentation("RING 32003 x y\nGENS 0 -1\nREL x^2 | y\n")
    assert M.gens.twists == (0, 1)
    assert M.rels.source.twists == (2,)


@pytest.mark.unit
def test_comments_blank_lines_and_zero_entries():
    text = "# a comment\n\nRING 32003 x y   # trailing\nGENS 0 -1\nREL x | 0\n"
    M = parse_presentation(text, label="example")
    assert M.label == "example"
    assert M.rels.source.twists == (1,)
    assert M.rels.columns[0][1].is_zero()


@pytest.mark.unit
def test_polynomial_parser_coefficients(ring2):
    x, y = ring2.gens()
    parser = PolynomialParser(ring2)
    assert parser.parse("3*x^2 - y^2") == 3 * x**2 - y**2
    assert parser.parse("-x*y + 2*y*x") == x * y
    assert parser.parse("32004*x") == x


@pytest.mark.unit
@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("GENS 0\n", "GENS before RING", 1),
        ("REL x\n", "REL before RING", 1),
        ("RING 32004 x y\n", "non-prime modulus", 1),
        ("RING 32003 x y\nREL x^2 + y\n", "inhomogeneous", 2),
        ("RING 32003 x y\nGENS 0 0\nREL x\n", "1 entries for 2 generators", 3),
        ("RING 32003 x y\nFOO x\n", "unknown keyword", 2),
        ("RING 32003 x y\nREL x^\n", "exponent", 2),
        ("", "missing RING", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, fragment, line):
    with pytest.raises(PresentationParseError) as excinfo:
        parse_presentation(text)
    assert fragment in str(excinfo.value)
    assert excinfo.value.line == line


@pytest.mark.unit
def test_unknown_variable_reports_column():
    with pytest.raises(PresentationParseError) as excinfo:
        parse_presentation("RING 32003 x y\nREL x*q\n")
    assert excinfo.value.line == 2
    assert excinfo.value.column == 7
    assert "unknown variable 'q'" in str(excinfo.value)


@pytest.mark.unit
@pytest.mark.parametrize("name", ["maximal_ideal_xy", "mixed_twists_xy", "twisted_cubic"])
def test_emitted_text_parses_to_the_same_module(reference, name):
    M = reference(name)
    again = parse_presentation(emit_presentation(M))
    assert again.canonical_key() == M.canonical_key()


@pytest.mark.unit
def test_files_take_their_label_from_the_stem(tmp_path, reference):
    path = write_presentation(reference("x2_xy"), tmp_path / "embedded.pres")
    M = read_presentation(path)
    assert M.label == "embedded"
    assert path.read_text(encoding="utf-8").startswith("# x2_xy\nRING 32003 x y\n")
    assert [M.hilbert_function(t) for t in range(4)] == [1, 2, 1, 1]
