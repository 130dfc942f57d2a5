"""
Tests for the bound checkers and their reports.
"""

import math

import pytest

from regext.tools.bounds import PreconditionError
from regext.tools.checks import (
    BoundReport,
    Check,
    CheckOptions,
    Claim,
    ConsistencyReport,
    Relation,
    betti_from_hilbert,
    bound_dim_ext,
    bound_dim_tor,
    bound_hdeg,
    bound_local_cohomology,
    bound_reg_ext_MN,
    bound_reg_ext_MR,
    check_dual_complex,
    check_ext_ring,
    check_filter_regular_bounds,
    check_filter_regular_data,
    check_hdeg_identities,
    check_hilbert,
    check_linear_resolution,
    check_strand_oracle,
    check_tor,
    check_truncations,
    error_report,
    ext_pair_attainment,
    failures,
    make_report,
    normalize_indeg,
)
from regext.utils.degrees import filter_regular_sequence
from regext.utils.presentation import GradedModulePresentation
from regext.utils.resolution import betti_table


@pytest.mark.unit
def test_relations_with_infinities():
    assert Relation.LE.holds(-math.inf, 5)
    assert Relation.GE.holds(math.inf, 5)
    assert not Relation.EQ.holds(1, 2)


@pytest.mark.unit
def test_report_outcomes():
    passed = make_report(Claim.TOR_TOTAL_DIMS, "m", 2, 3)
    failed = make_report(Claim.TOR_TOTAL_DIMS, "m", 4, 3)
    vacuous = make_report(Claim.COMPLEX_REG, "m", -math.inf, -7, vacuous=True)
    warning = make_report(Check.EXT_PAIR_INDEG_ATTAINED, "m", 1, 0, Relation.EQ, warning_only=True)
    errored = error_report(Claim.COMPLEX_REG, "m", ValueError("boom"))
    assert passed.passed and not passed.failed
    assert failed.failed
    assert vacuous.passed and not vacuous.failed
    assert not warning.passed and not warning.failed
    assert errored.failed
    assert errored.error == "ValueError: boom"
    assert failures([passed, failed, vacuous, warning, errored]) == [failed, errored]


@pytest.mark.unit
def test_reports_serialize_exact_integers():
    report = make_report(Claim.HDEG_REGULARITY_BOUND, "m", -math.inf, 378**512, context={"big": 2**80})
    payload = report.model_dump(mode="json")
    assert payload["lhs"] == "-inf"
    assert payload["rhs"] == str(378**512)
    assert payload["claim_id"] == "Thm5.2"
    assert payload["context"]["big"] == str(2**80)
    assert BoundReport.model_validate(payload).rhs == 378**512


@pytest.mark.unit
def test_tor_checks_on_residue_field(reference):
    M = reference("residue_field_xy")
    assert bound_dim_tor(M, 1) == 2
    reports = check_tor(M, "k")
    assert reports[0].identifier is Check.PROJECTIVE_DIMENSION
    assert failures(reports) == []
    assert {r.identifier for r in reports} == {
        Check.PROJECTIVE_DIMENSION,
        Claim.TOR_TOTAL_DIMS,
        Check.TOR_GRADED_DIMS,
    }


@pytest.mark.unit
def test_tor_checks_on_zero_module(ring2):
    reports = check_tor(GradedModulePresentation.zero(ring2), "zero")
    assert len(reports) == 1
    assert reports[0].lhs == -1


@pytest.mark.integration
@pytest.mark.parametrize("name", ["twisted_cubic", "x2_xy", "maximal_ideal_xy"])
def test_dual_complex_bounds_hold(reference, name):
    reports = check_dual_complex(reference(name), name)
    assert reports
    assert failures(reports) == []


@pytest.mark.unit
def test_dual_complex_needs_two_variables():
    from regext.utils.presentation_io import parse_presentation

    assert check_dual_complex(parse_presentation("RING 32003 x\nREL x^2\n"), "one") == []


@pytest.mark.integration
def test_pair_bounds_for_residue_fields(reference):
    k = reference("residue_field_xy")
    reports = bound_reg_ext_MN(k, reference("residue_field_xy"), 1, "k|k")
    claims = {r.identifier for r in reports}
    assert {Claim.EXT_PAIR_INDEG, Claim.EXT_PAIR_REG, Claim.EXT_PAIR_GRADED_DIMS, Claim.EXT_PAIR_TOR_DIMS} <= claims
    assert failures(reports) == []
    attained = ext_pair_attainment(k, reference("residue_field_xy"), "k|k")
    assert attained.warning_only
    assert attained.passed


@pytest.mark.unit
def test_pair_bounds_need_nonzero_modules(reference, ring2):
    with pytest.raises(PreconditionError):
        bound_reg_ext_MN(reference("line_xy"), GradedModulePresentation.zero(ring2), 0)


@pytest.mark.unit
def test_betti_numbers_from_hilbert_polynomial(reference):
    assert [betti_from_hilbert(reference("free_xy"), i) for i in range(3)] == [1, 0, 0]
    with pytest.raises(PreconditionError):
        betti_from_hilbert(reference("x2_xy"), 0)


@pytest.mark.integration
@pytest.mark.parametrize("name", ["twisted_cubic", "x2_xy", "line_xyz"])
def test_linear_resolution_checks(reference, name):
    reports = check_linear_resolution(reference(name), name, seed=3)
    assert any(r.identifier is Claim.LINEAR_RECURSION for r in reports)
    assert failures(reports) == []


@pytest.mark.integration
@pytest.mark.parametrize("name", ["maximal_ideal_xy", "x2_xy", "twisted_cubic", "x2_y2"])
def test_ext_into_ring_bounds(reference, name):
    reports = check_ext_ring(reference(name), name)
    assert failures(reports) == []
    assert any(r.identifier is Check.EXT_RING_VANISHING for r in reports)


@pytest.mark.unit
def test_small_dimension_ext_bound(reference):
    report = bound_reg_ext_MR(reference("line_xy"), 1, "line")
    assert report.identifier is Claim.EXT_RING_SMALL_DIM
    assert report.lhs == -1
    assert report.rhs == -1
    assert report.passed


@pytest.mark.integration
def test_strand_oracle_agrees(reference):
    reports = check_strand_oracle(reference("x2_xy"), "x2_xy")
    assert reports
    assert failures(reports) == []


@pytest.mark.integration
@pytest.mark.parametrize("name", ["x2_xy", "maximal_ideal_xy", "x2_y2", "mixed_twists_xy"])
def test_hilbert_and_local_cohomology_checks(reference, name):
    reports = check_hilbert(reference(name), name, CheckOptions())
    assert reports
    assert failures(reports) == []


@pytest.mark.integration
@pytest.mark.parametrize("name", ["x2_xy", "maximal_ideal_xy", "line_xyz"])
def test_truncation_checks(reference, name):
    reports = check_truncations(reference(name), name)
    assert failures(reports) == []
    assert any(r.identifier is Check.TRUNCATION_GENERATORS for r in reports)


@pytest.mark.integration
def test_finite_part_shows_up_in_top_ext(reference):
    reports = check_truncations(reference("x2_xy"), "x2_xy")
    finite = [r for r in reports if r.identifier is Claim.EXT_TOP_FINITE_LENGTH]
    assert {r.context["quantity"] for r in finite} == {"indeg", "reg", "dim"}
    assert all(r.passed for r in finite)


@pytest.mark.unit
def test_normalize_indeg(reference):
    M = reference("maximal_ideal_xy")
    normalized = normalize_indeg(M)
    assert betti_table(normalized).indeg == 0
    assert normalize_indeg(reference("x2_xy")).gens.twists == (0,)


@pytest.mark.integration
@pytest.mark.parametrize("name", ["x2_xy", "line_xyz", "twisted_cubic", "maximal_ideal_xy"])
def test_filter_regular_checks(reference, name):
    M = normalize_indeg(reference(name))
    data = filter_regular_sequence(M, seed=5)
    reports = check_filter_regular_data(M, data, name) + check_filter_regular_bounds(M, data, name)
    assert failures(reports) == []
    assert any(r.identifier is Claim.HILBERT_COEFFICIENTS for r in reports)


@pytest.mark.unit
def test_local_cohomology_bound_needs_normalized_module(reference):
    M = reference("maximal_ideal_xy")
    data = filter_regular_sequence(M, seed=0)
    with pytest.raises(PreconditionError):
        bound_local_cohomology(M, 1, -1, data)


@pytest.mark.integration
@pytest.mark.parametrize("name", ["x2_xy", "maximal_ideal_xy", "twisted_cubic", "x2_y2"])
def test_hdeg_checks(reference, name):
    M = reference(name)
    reports = bound_hdeg(M, name) + check_hdeg_identities(M, name)
    assert failures(reports) == []
    assert any(r.identifier is Claim.HDEG_SATURATION for r in reports)


@pytest.mark.unit
def test_cyclic_hdeg_bound_only_for_cyclic_modules(reference):
    cyclic = bound_hdeg(reference("x2_xy"), "x2_xy")
    assert any(r.identifier is Claim.HDEG_CYCLIC_BOUND for r in cyclic)
    module = bound_hdeg(reference("maximal_ideal_xy"), "m")
    assert not any(r.identifier is Claim.HDEG_CYCLIC_BOUND for r in module)


PUBLISHED_CLAIMS = {
    "Lemma2.1.1", "Lemma2.1.2", "Lemma2.1.3", "Lemma2.1.4",
    "Thm2.3.1", "Thm2.3.2", "Thm2.3.3", "Thm2.3.4", "Lemma2.4",
    "Rem3.1.i", "Rem3.1.ii", "Rem3.1.iii", "Rem3.1.iv", "Rem3.1.v",
    "Prop3.3", "Cor3.4", "Thm3.5.1", "Thm3.5.2a", "Thm3.5.2b", "Thm3.5.2c",
    "EGS", "Lemma4.1.i", "Lemma4.1.ii", "Thm4.2", "Cor4.3", "Lemma4.4.i", "Lemma4.4.ii",
    "Thm4.5.i", "Thm4.5.ii", "Thm4.6",
    "Def5.1.a", "Def5.1.b", "Thm5.2", "Lemma5.3", "Lemma5.4.i", "Lemma5.4.ii", "Thm5.5", "Cor5.6",
    "DGV-reg",
}


@pytest.mark.unit
def test_claim_ids_are_the_fixed_enumeration():
    assert {claim.value for claim in Claim} == PUBLISHED_CLAIMS
    assert not {check.value for check in Check} & PUBLISHED_CLAIMS


@pytest.mark.unit
def test_report_kind_follows_the_identifier():
    claim = make_report(Claim.TOR_TOTAL_DIMS, "m", 1, 2)
    check = make_report(Check.PROJECTIVE_DIMENSION, "m", 1, 2)
    assert isinstance(claim, BoundReport)
    assert isinstance(check, ConsistencyReport)
    payload = check.model_dump(mode="json")
    assert payload["check_id"] == "resolution.projective_dimension"
    assert "claim_id" not in payload
    assert isinstance(error_report(Check.FILTER_MONOTONE, "m", ValueError("x")), ConsistencyReport)


@pytest.mark.integration
def test_truncating_a_line_above_its_regularity(reference):
    reports = check_truncations(reference("line_xy"), "line")
    assert failures(reports) == []
    at_two = {r.identifier: r for r in reports if r.degree == 2 and r.index == 1}
    corrected = at_two[Claim.TRUNCATION_EXT_TOP_MINUS_ONE]
    assert (corrected.lhs, corrected.rhs) == (-1, -1)
    assert corrected.passed and not corrected.warning_only
    printed = at_two[Check.TRUNCATION_EXT_TOP_MINUS_ONE_PRINTED]
    assert (printed.lhs, printed.rhs) == (-1, -2)
    assert printed.warning_only and not printed.passed


@pytest.mark.integration
def test_length_bound_for_an_embedded_point(reference):
    M = reference("x2_xy")
    data = filter_regular_sequence(M, seed=0)
    reports = check_filter_regular_data(M, data, "x2_xy")
    assert failures(reports) == []
    by_id = {r.identifier: r for r in reports}
    length = by_id[Check.FILTER_LENGTH_BOUND]
    assert (length.lhs, length.rhs) == (2, 2)
    printed = by_id[Check.FILTER_LENGTH_BOUND_PRINTED]
    assert (printed.lhs, printed.rhs) == (2, 1)
    assert printed.warning_only and not printed.failed


@pytest.mark.integration
def test_complete_intersection_of_cubics_in_two_variables():
    from regext.utils.presentation_io import parse_presentation

    M = parse_presentation("RING 32003 x y\nGENS -1\nREL x^3\nREL y^3\n", label="ci")
    reports = check_dual_complex(M, "ci")
    assert failures(reports) == []
    top = next(r for r in reports if r.identifier is Claim.COMPLEX_REG and r.index == 2)
    assert (top.lhs, top.rhs) == (-3, -4)
    assert top.warning_only and not top.passed


@pytest.mark.integration
def test_hilbert_variants_and_cohen_macaulay_direction_have_their_own_ids(reference):
    M = reference("twisted_cubic")
    N = normalize_indeg(M)
    data = filter_regular_sequence(N, seed=1)
    ids = [r.identifier for r in bound_dim_ext(N, 1, 0, data, "cubic")]
    assert ids == [Claim.FILTER_EXT_DIMS, Claim.EXT_HILBERT_DIMS, Check.EXT_HILBERT_DIMS_SATURATED]
    identities = {r.identifier for r in check_hdeg_identities(M, "cubic")}
    assert {Claim.HDEG_DEGREE_BOUND, Check.HDEG_COHEN_MACAULAY} <= identities
