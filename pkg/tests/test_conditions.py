"""
Condition tests
The three equivalent forms, the S(alpha, p) majorant and the regime /
status classifier.
"""

import math
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbertnorm.analysis.conditions import (
    StatusTag,
    alpha0_reduction,
    classify,
    condition_a,
    condition_b,
    condition_c,
    condition_c_with_error,
    conjectured_norm,
    evaluate_conditions,
    in_unresolved_strip,
    s_bound,
    s_bound_applies,
    status_counts,
)
from hilbertnorm.analysis.kernel import Params, RegimeTag
from hilbertnorm.errors import DomainError

pytestmark = pytest.mark.unit

EQUIVALENCE_GRID = [
    (alpha, 2.0 + 2.0 * alpha + 2.0 * tau)
    for alpha in (0.0, 0.5, 1.0, 2.0, 3.0)
    for tau in (0.25, 0.5, 0.75, 0.9)
]


# ============================================================================
# Test Condition Forms
# ============================================================================

class TestConditionForms:
    """Test forms (a), (b), (c)"""

    def test_condition_a_alpha0_p4(self, cfg):
        """Form (a) at alpha = 0, p = 4 is -35 pi / 256"""
        assert condition_a(Params(alpha=0.0, p=4.0), cfg) == pytest.approx(-35.0 * math.pi / 256.0, rel=1e-8)

    def test_condition_b_alpha0_p4(self, cfg):
        """Form (b) agrees with (a) at alpha = 0, p = 4"""
        params = Params(alpha=0.0, p=4.0)
        assert condition_b(params, cfg) == pytest.approx(condition_a(params, cfg), abs=1e-8)

    @pytest.mark.slow
    @pytest.mark.parametrize("alpha,p", EQUIVALENCE_GRID)
    def test_equivalence(self, cfg, alpha, p):
        """a = b = 2 B(a, 1-a) c"""
        params = Params(alpha=alpha, p=p)
        a = condition_a(params, cfg)
        b = condition_b(params, cfg)
        c = condition_c(params, cfg)
        scale = max(1.0, abs(a))
        assert abs(a - b) / scale <= 1e-7
        assert abs(a - 2.0 * params.psi_mass * c) / scale <= 1e-7

    def test_error_attached(self, cfg):
        """condition_c carries a small non-negative error"""
        result = condition_c_with_error(Params(alpha=1.0, p=5.0), cfg)
        assert 0.0 <= result.error <= 1e-8

    def test_requires_above_diagonal(self, cfg):
        """Forms need p > 2 + 2 alpha"""
        with pytest.raises(DomainError):
            condition_c(Params(alpha=1.0, p=3.5), cfg)

    @pytest.mark.parametrize("p,positive", [
        (4.2, True), (4.7, True), (5.0, True),
        (5.6, False), (5.7, False),
    ])
    def test_sign_map_alpha1(self, cfg, p, positive):
        """At alpha = 1 form (c) is positive below the strip and negative above it"""
        value = condition_c(Params(alpha=1.0, p=p), cfg)
        assert (value > 0.0) == positive

    def test_evaluate_full(self, cfg):
        """full evaluation fills every field"""
        values = evaluate_conditions(Params(alpha=0.5, p=4.0), cfg)
        assert values.a_value is not None and values.b_value is not None
        assert values.s_bound_value is not None


# ============================================================================
# Test S(alpha, p)
# ============================================================================

class TestSBound:
    """Test the three-Beta-term majorant"""

    def test_alpha0_p3(self):
        """S(0, 3) = -1/36"""
        assert s_bound(Params(alpha=0.0, p=3.0)) == pytest.approx(-1.0 / 36.0, rel=1e-12)

    @pytest.mark.parametrize("p", [4.5, 5.0, 5.5])
    def test_alpha1_identity(self, cfg, p):
        """At alpha = 1 the majorant is exact: 2 B S = form (a)"""
        params = Params(alpha=1.0, p=p)
        assert 2.0 * params.psi_mass * s_bound(params) == pytest.approx(condition_a(params, cfg), abs=1e-7)

    @pytest.mark.parametrize("alpha,p", [(0.25, 3.0), (0.5, 3.8), (0.9, 4.5), (2.5, 7.5)])
    def test_majorant(self, cfg, alpha, p):
        """S >= form (c) where the quadratic bound on (1-x)^alpha applies"""
        params = Params(alpha=alpha, p=p)
        assert s_bound(params) >= condition_c(params, cfg) - 1e-9

    @pytest.mark.parametrize("p", [2.3, 2.8, 3.2, 3.6, 3.9])
    def test_alpha0_reduction_sign(self, p):
        """B(2/p, 2p-4) - 1/((p-2)(4-p)) has the sign of S(0, p)"""
        assert (alpha0_reduction(p) < 0.0) == (s_bound(Params(alpha=0.0, p=p)) < 0.0)

    def test_applicability(self):
        """alpha in [0,1] u [2,3] and 2+2alpha < p < 2(2+alpha)"""
        assert s_bound_applies(0.5, 3.5)
        assert not s_bound_applies(1.5, 5.5)
        assert not s_bound_applies(0.5, 5.0)
        with pytest.raises(DomainError):
            s_bound(Params(alpha=1.5, p=5.5))


# ============================================================================
# Test Classification
# ============================================================================

class TestClassify:
    """Test regime and status classification"""

    def test_regime_a_proven(self, cfg):
        """alpha = 0, p = 3.8 is proven"""
        status = classify(Params(alpha=0.0, p=3.8), cfg)
        assert status.regime.tag == RegimeTag.RegimeA
        assert status.status == StatusTag.ProvenRegimeA

    def test_alpha1_p5_fails(self, cfg):
        """alpha = 1, p = 5.0: form (c) is positive"""
        status = classify(Params(alpha=1.0, p=5.0), cfg)
        assert status.status == StatusTag.RegimeB_ConditionFails
        assert status.is_definite

    def test_alpha1_strip_indeterminate(self, cfg):
        """alpha = 1, p = 5.3 lies in the unresolved strip"""
        params = Params(alpha=1.0, p=5.3)
        assert in_unresolved_strip(params)
        status = classify(params, cfg)
        assert status.status == StatusTag.RegimeB_Indeterminate
        assert not status.is_definite
        assert status.values is not None and status.values.c_error >= 0.0
        assert any('unresolved strip' in note for note in status.notes)

    @pytest.mark.parametrize("alpha,p", [(0.0, 3.0), (1.0, 5.7), (0.05, 2.5)])
    def test_holds(self, cfg, alpha, p):
        """Negative form (c) away from the strip"""
        assert classify(Params(alpha=alpha, p=p), cfg).status == StatusTag.RegimeB_ConditionHolds

    def test_out_of_range_and_large_p(self, cfg):
        """Below 2+2alpha and above 2(2+alpha) carry no values"""
        below = classify(Params(alpha=1.0, p=3.5), cfg)
        large = classify(Params(alpha=0.0, p=4.5), cfg)
        assert below.status == StatusTag.OutOfConjectureRange and below.values is None
        assert large.status == StatusTag.KnownLargeP and large.values is None

    def test_status_counts(self, cfg):
        """Histogram of statuses"""
        statuses = [classify(Params(alpha=1.0, p=p), cfg) for p in (3.5, 5.3, 6.5)]
        assert status_counts(statuses) == {
            'out_of_range': 1, 'regimeb_indeterminate': 1, 'known_large_p': 1,
        }


class TestConjecturedNorm:
    """Test pi / sin((2+alpha) pi / p)"""

    def test_values(self):
        """pi at alpha=0, p=4; 2 pi / sqrt(3) at alpha=0, p=3"""
        assert conjectured_norm(Params(alpha=0.0, p=4.0)) == pytest.approx(math.pi)
        assert conjectured_norm(Params(alpha=0.0, p=3.0)) == pytest.approx(2.0 * math.pi / math.sqrt(3.0))
