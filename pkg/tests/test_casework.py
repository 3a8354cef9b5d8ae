"""
Case analysis tests
The alpha = 1 four-case example and both parts of the small-alpha
proposition, recomputed and diffed against the published constants.
"""

import os
import sys

import pytest
import sympy as sp

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbertnorm.certify.casework import (
    EXAMPLE_TOLERANCE,
    PUBLISHED_CONSTANTS,
    PROP_A_ALPHA_MAX,
    BoundKind,
    CaseId,
    CaseReport,
    Verdict,
    cubic_form,
    example_alpha1,
    exampleeq_value,
    j_factor,
    prop42a_verify,
    prop42b_verify,
    prop_b_bound,
    quartic_form,
    run_all_cases,
)
from hilbertnorm.errors import DomainError

pytestmark = pytest.mark.unit

R = sp.Rational


@pytest.fixture(scope="module")
def alpha1_reports():
    """Cases I-IV without the numeric strip scan"""
    return {case: example_alpha1(case) for case in (CaseId.I, CaseId.II, CaseId.III, CaseId.IV)}


# ============================================================================
# Test Building Blocks
# ============================================================================

class TestBuildingBlocks:
    """Test J(p) and the cleared alpha = 1 form"""

    def test_j_factor_positive(self):
        """J(p) > 0 on (4, 6]"""
        for p in (4.2, 5.0, 5.9, 6.0):
            assert j_factor(p) > 0

    @pytest.mark.parametrize("p", [4.0, 3.5, 6.5])
    def test_j_factor_domain(self, p):
        """J is only used for 4 < p <= 6"""
        with pytest.raises(DomainError):
            j_factor(p)

    def test_cleared_form_signs(self):
        """Positive up to 5.1, negative from 5.5"""
        for p in (4.2, 4.7, 5.0):
            assert exampleeq_value(p) > 0
        for p in (5.6, 5.7):
            assert exampleeq_value(p) < 0

    def test_cleared_form_domain(self):
        """Endpoints are outside the form's domain"""
        with pytest.raises(DomainError):
            exampleeq_value(4.0)


# ============================================================================
# Test alpha = 1 example
# ============================================================================

class TestExampleAlpha1:
    """Test the four cases"""

    @pytest.mark.parametrize("case,expected", [
        (CaseId.I, 0.118519),
        (CaseId.II, 0.042599),
        (CaseId.III, 0.004590),
        (CaseId.IV, -0.010372),
    ])
    def test_margin_matches_published(self, alpha1_reports, case, expected):
        """Recomputed margins agree with the published ones"""
        report = alpha1_reports[case]
        assert report.computed_margin == pytest.approx(expected, abs=EXAMPLE_TOLERANCE)
        assert report.matches_published
        assert report.margin_has_expected_sign

    def test_bound_kinds(self, alpha1_reports):
        """I-III bound F(0) from below, IV from above"""
        kinds = {case: r.bound_kind for case, r in alpha1_reports.items()}
        assert kinds[CaseId.I] == BoundKind.LowerBoundPositive
        assert kinds[CaseId.III] == BoundKind.LowerBoundPositive
        assert kinds[CaseId.IV] == BoundKind.UpperBoundNegative

    def test_case_iii_confirmed(self, alpha1_reports):
        """Case III passes every leg, including the g1 certificate"""
        report = alpha1_reports[CaseId.III]
        assert report.verdict == Verdict.Confirmed
        legs = report.details['legs']
        assert legs['g1_positive']['passed']
        assert legs['h_slope_identity']['passed']
        assert legs['g1_cascade_positive_at_4.9']['passed']

    @pytest.mark.parametrize("case,leg", [
        (CaseId.I, 'bound_below_form'),
        (CaseId.II, 'bound_below_form'),
        (CaseId.III, 'bound_below_form'),
        (CaseId.IV, 'bound_above_form'),
    ])
    def test_bound_tied_to_cleared_form(self, alpha1_reports, case, leg):
        """Every case links its bound expression back to the alpha = 1 form"""
        legs = alpha1_reports[case].details['legs']
        assert leg in legs
        assert legs[leg]['passed']

    def test_case_forms_bracket_cleared_form(self):
        """The cleared form sits above the I-III forms and below the IV form"""
        for p in (4.55, 4.7, 4.85):
            assert exampleeq_value(p) >= quartic_form(p)
        for p in (4.95, 5.0, 5.05):
            assert exampleeq_value(p) >= quartic_form(p)
        for p in (5.55, 5.6, 5.7):
            assert cubic_form(p) >= exampleeq_value(p)

    def test_case_iii_components(self, alpha1_reports):
        """h(5.1) and g(5.1)"""
        values = alpha1_reports[CaseId.III].details['values']
        assert values['h'] == pytest.approx(-0.237716, abs=EXAMPLE_TOLERANCE)
        assert values['g'] == pytest.approx(0.242306, abs=EXAMPLE_TOLERANCE)

    def test_case_iv_pieces(self, alpha1_reports):
        """Each sub-interval bound of case IV"""
        values = alpha1_reports[CaseId.IV].details['values']
        assert values['I2'] == pytest.approx(-0.227916, abs=EXAMPLE_TOLERANCE)
        assert values['I1pp'] == pytest.approx(-0.125168, abs=EXAMPLE_TOLERANCE)
        assert values['I1p'] == pytest.approx(-0.010372, abs=EXAMPLE_TOLERANCE)
        assert 'strip' not in values

    def test_no_failures(self, alpha1_reports):
        """None of the published cases fails outright"""
        for report in alpha1_reports.values():
            assert report.verdict != Verdict.Failed

    def test_interval_endpoints(self, alpha1_reports):
        """Cases tile [4, 5.1] and [5.5, 5.74]"""
        assert alpha1_reports[CaseId.I].interval == (4.0, 4.5)
        assert alpha1_reports[CaseId.II].interval == (4.5, 4.9)
        assert alpha1_reports[CaseId.III].interval == (4.9, 5.1)
        assert alpha1_reports[CaseId.IV].interval == (5.5, 5.74)

    def test_rejects_proposition_ids(self):
        """example_alpha1 covers I-IV only"""
        with pytest.raises(DomainError):
            example_alpha1(CaseId.Prop42a)

    @pytest.mark.slow
    def test_strip_scan_attached(self, cfg):
        """With a quadrature config case IV reports the open strip numerically"""
        report = example_alpha1(CaseId.IV, cfg)
        strip = report.details['values']['strip']
        assert len(strip) == 9
        assert all(5.1 < row['p'] < 5.5 for row in strip)


# ============================================================================
# Test Small-alpha Proposition
# ============================================================================

class TestPropositionA:
    """Test part (a)"""

    @pytest.fixture(scope="class")
    def reports(self):
        return prop42a_verify([R(1, 100), PROP_A_ALPHA_MAX])

    def test_confirmed(self, reports):
        """Both grid points are confirmed"""
        assert [r.verdict for r in reports] == [Verdict.Confirmed, Verdict.Confirmed]
        assert all(not r.flags for r in reports)

    def test_anchor(self, reports):
        """The anchor at alpha = 1/19 agrees with -336.677"""
        anchor = reports[1]
        assert anchor.details['anchor'] == pytest.approx(-336.677, abs=1e-3)
        assert anchor.paper_margin == pytest.approx(PUBLISHED_CONSTANTS['Prop42a.margin'][0])
        assert reports[0].paper_margin is None

    def test_every_leg_passes(self, reports):
        """All certificate legs pass inside the stated range"""
        for report in reports:
            failed = [name for name, leg in report.details['legs'].items() if not leg['passed']]
            assert failed == []

    def test_outside_range_flagged(self):
        """alpha > 1/19 is flagged and never confirmed"""
        (report,) = prop42a_verify([R(1, 10)])
        assert 'OutsideStatedRange' in report.flags
        assert report.verdict != Verdict.Confirmed

    def test_rejects_nonpositive_alpha(self):
        """alpha must be positive"""
        with pytest.raises(DomainError):
            prop42a_verify([0])


class TestPropositionB:
    """Test part (b)"""

    def test_verdict_is_reported(self):
        """The re-derived majorant is certified; quoted constants are diffed"""
        report = prop42b_verify()
        assert report.case_id == CaseId.Prop42b
        assert report.verdict in (Verdict.Confirmed, Verdict.Indeterminate)
        assert report.details['rederived_certified']
        assert report.computed_margin < 0.0
        assert 'quoted_constants_match' in report.details['legs']

    def test_majorant_is_rational(self):
        """The majorant is a ratio of polynomials in p"""
        num, den = sp.fraction(prop_b_bound(R(1, 15000)))
        x = sp.Symbol('x')
        assert sp.Poly(num, x).degree() >= 1
        assert sp.Poly(den, x).degree() >= 1

    def test_rejects_nonpositive_alpha(self):
        """alpha must be positive"""
        with pytest.raises(DomainError):
            prop42b_verify(0)


# ============================================================================
# Test Report Model
# ============================================================================

class TestCaseReport:
    """Test CaseReport validation"""

    def test_confirmed_needs_expected_sign(self):
        """A Confirmed report with the wrong margin sign is rejected"""
        with pytest.raises(ValueError):
            CaseReport(case_id=CaseId.I, alpha=1.0, interval=(4.0, 4.5),
                       bound_kind=BoundKind.LowerBoundPositive, computed_margin=-0.1,
                       verdict=Verdict.Confirmed)

    def test_confirmed_needs_published_agreement(self):
        """A Confirmed report far from the published margin is rejected"""
        with pytest.raises(ValueError):
            CaseReport(case_id=CaseId.I, alpha=1.0, interval=(4.0, 4.5),
                       bound_kind=BoundKind.LowerBoundPositive, computed_margin=0.2,
                       paper_margin=0.118519, verdict=Verdict.Confirmed)

    def test_json_round_trip(self, alpha1_reports):
        """Reports survive model_dump_json / model_validate_json"""
        report = alpha1_reports[CaseId.II]
        again = CaseReport.model_validate_json(report.model_dump_json())
        assert again.verdict == report.verdict
        assert again.computed_margin == report.computed_margin


# ============================================================================
# Test Full Run
# ============================================================================

class TestRunAllCases:
    """Test the ordered run over every case"""

    def test_order_and_verdicts(self):
        """I-IV, part (a) on its default grid, then part (b)"""
        reports = run_all_cases()
        ids = [r.case_id for r in reports]
        assert ids == [CaseId.I, CaseId.II, CaseId.III, CaseId.IV,
                       CaseId.Prop42a, CaseId.Prop42a, CaseId.Prop42b]
        assert all(r.verdict != Verdict.Failed for r in reports)
        assert 'strip' not in reports[3].details['values']
