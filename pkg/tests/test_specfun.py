"""
Special function tests
Log-Gamma, Beta, incomplete Beta and the elementary Beta bounds, checked
against mpmath and against identities.

Run with:
    pytest tests/test_specfun.py -v
"""

import math
import os
import sys

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbertnorm.errors import DomainError, RegimeMismatch
from hilbertnorm.special.specfun import (
    LN_GAMMA_TABLE,
    BoundDomain,
    beta,
    beta_lower_bound,
    beta_upper_bound,
    bound_domain_of,
    in_bound_domain,
    inc_beta,
    inc_beta_scaled,
    ln_gamma,
    reg_inc_beta,
)

pytestmark = pytest.mark.unit

positive = st.floats(min_value=0.05, max_value=20.0, allow_nan=False, allow_infinity=False)
unit_open = st.floats(min_value=0.01, max_value=0.99, allow_nan=False, allow_infinity=False)


# ============================================================================
# Test Log-Gamma and Beta
# ============================================================================

class TestLnGamma:
    """Test ln_gamma"""

    @pytest.mark.parametrize("x,expected", LN_GAMMA_TABLE)
    def test_closed_forms(self, x, expected):
        """Known values at 1/2 and small integers"""
        assert ln_gamma(x) == pytest.approx(expected, abs=1e-13)

    @pytest.mark.parametrize("x", [0.01, 0.3, 0.7, 1.5, 3.25, 17.0, 150.0])
    def test_matches_mpmath(self, x):
        """Agrees with mpmath.loggamma"""
        assert ln_gamma(x) == pytest.approx(float(mpmath.loggamma(x)), rel=1e-12, abs=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, float('nan'), float('inf'), 'two'])
    def test_rejects_non_positive(self, x):
        """Non-positive and non-finite input raises DomainError"""
        with pytest.raises(DomainError):
            ln_gamma(x)


class TestBeta:
    """Test the complete Beta function"""

    def test_simple_values(self):
        """B(1,1) = 1 and B(2,3) = 1/12"""
        assert beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)
        assert beta(2.0, 3.0) == pytest.approx(1.0 / 12.0, rel=1e-13)

    @pytest.mark.parametrize("x", np.linspace(0.02, 0.98, 50))
    def test_reflection(self, x):
        """B(x, 1-x) = pi / sin(pi x)"""
        assert beta(x, 1.0 - x) == pytest.approx(math.pi / math.sin(math.pi * x), rel=1e-10)

    @given(positive, positive)
    @settings(max_examples=200, deadline=None)
    def test_symmetry(self, x, y):
        """B(x, y) = B(y, x)"""
        assert beta(x, y) == pytest.approx(beta(y, x), rel=1e-12)

    @given(positive, positive)
    @settings(max_examples=100, deadline=None)
    def test_matches_mpmath(self, x, y):
        """Agrees with mpmath.beta"""
        assert beta(x, y) == pytest.approx(float(mpmath.beta(x, y)), rel=1e-10)

    def test_rejects_zero(self):
        """B(0, y) is outside the domain"""
        with pytest.raises(DomainError):
            beta(0.0, 1.0)


# ============================================================================
# Test Incomplete Beta
# ============================================================================

class TestIncBeta:
    """Test the incomplete and regularized incomplete Beta"""

    def test_endpoints(self):
        """B_0 = 0 and B_1 = B(x, y)"""
        assert inc_beta(0.0, 0.4, 0.6) == 0.0
        assert inc_beta(1.0, 0.4, 0.6) == pytest.approx(beta(0.4, 0.6), rel=1e-14)

    @pytest.mark.parametrize("t,x,y", [
        (0.1, 0.5, 0.5), (0.5, 2.0, 3.0), (0.9, 0.3, 0.7),
        (0.999, 0.625, 0.375), (0.001, 4.5, 0.2), (0.7, 10.0, 1.5),
    ])
    def test_matches_mpmath(self, t, x, y):
        """Agrees with mpmath.betainc"""
        want = float(mpmath.betainc(x, y, 0, t))
        assert inc_beta(t, x, y) == pytest.approx(want, rel=1e-10)

    @given(unit_open, positive, positive)
    @settings(max_examples=200, deadline=None)
    def test_complement(self, t, x, y):
        """I_t(x, y) + I_{1-t}(y, x) = 1"""
        assert reg_inc_beta(t, x, y) + reg_inc_beta(1.0 - t, y, x) == pytest.approx(1.0, abs=1e-10)

    @given(unit_open, positive, positive)
    @settings(max_examples=100, deadline=None)
    def test_regularized_in_unit_interval(self, t, x, y):
        """0 <= I_t <= 1"""
        assert 0.0 <= reg_inc_beta(t, x, y) <= 1.0

    def test_monotone_in_t(self):
        """B_t increases with t"""
        values = [inc_beta(t, 0.7, 1.8) for t in np.linspace(0.0, 1.0, 41)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_scaled_limit_at_zero(self):
        """B_t / t^x -> 1/x"""
        assert inc_beta_scaled(0.0, 0.4, 0.6) == pytest.approx(2.5)
        assert inc_beta_scaled(1e-9, 0.4, 0.6) == pytest.approx(2.5, rel=1e-6)

    @pytest.mark.parametrize("t", [0.05, 0.4, 0.8, 0.97])
    def test_scaled_consistent(self, t):
        """inc_beta_scaled * t^x = inc_beta"""
        assert inc_beta_scaled(t, 0.6, 0.4) * t ** 0.6 == pytest.approx(inc_beta(t, 0.6, 0.4), rel=1e-12)

    @pytest.mark.parametrize("t", [-0.1, 1.1])
    def test_rejects_t_outside_unit(self, t):
        """t must lie in [0, 1]"""
        with pytest.raises(DomainError):
            inc_beta(t, 1.0, 1.0)


# ============================================================================
# Test Elementary Bounds
# ============================================================================

class TestBetaBounds:
    """Test the two-sided elementary Beta bounds"""

    def test_sandwich_x_ge_one(self):
        """lower <= B <= upper when x >= 1, y <= 1"""
        rng = np.random.default_rng(7)
        for x, y in zip(rng.uniform(1.0, 30.0, 10_000), rng.uniform(1e-3, 1.0, 10_000)):
            value = beta(x, y)
            slack = 1e-12 * value
            assert beta_lower_bound(x, y, BoundDomain.XGeOne_YLeOne) <= value + slack
            assert value <= beta_upper_bound(x, y, BoundDomain.XGeOne_YLeOne) + slack

    def test_reversed_in_unit_square(self):
        """upper <= B <= lower when both arguments lie in (0, 1]"""
        rng = np.random.default_rng(11)
        for x, y in zip(rng.uniform(1e-3, 1.0, 10_000), rng.uniform(1e-3, 1.0, 10_000)):
            value = beta(x, y)
            slack = 1e-12 * value
            assert beta_upper_bound(x, y, BoundDomain.BothInUnit) <= value + slack
            assert value <= beta_lower_bound(x, y, BoundDomain.BothInUnit) + slack

    def test_equality_at_one_one(self):
        """Both bounds are exact at (1, 1)"""
        assert beta_upper_bound(1.0, 1.0, BoundDomain.BothInUnit) == pytest.approx(1.0)
        assert beta_lower_bound(1.0, 1.0, BoundDomain.BothInUnit) == pytest.approx(1.0)

    def test_regime_mismatch(self):
        """Calling a bound outside its domain raises RegimeMismatch"""
        with pytest.raises(RegimeMismatch):
            beta_upper_bound(0.5, 0.5, BoundDomain.XGeOne_YLeOne)
        with pytest.raises(RegimeMismatch):
            beta_lower_bound(2.0, 0.5, BoundDomain.BothInUnit)

    def test_domain_classification(self):
        """bound_domain_of picks the domain or None"""
        assert bound_domain_of(2.0, 0.5) == BoundDomain.XGeOne_YLeOne
        assert bound_domain_of(0.5, 0.5) == BoundDomain.BothInUnit
        assert bound_domain_of(0.5, 2.0) is None
        assert in_bound_domain(1.0, 1.0, BoundDomain.BothInUnit)
        assert in_bound_domain(1.0, 1.0, BoundDomain.XGeOne_YLeOne)
