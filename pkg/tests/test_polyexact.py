"""
Exact polynomial tests
Rational arithmetic, Sturm chains, root isolation, sign certificates and
the textual polynomial format.
"""

import os
import sys
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbertnorm.certify.fixtures import G1
from hilbertnorm.certify.polyexact import (
    BivariatePolynomial,
    RationalPolynomial,
    Sign,
    SignCertificate,
    certify_sign,
    certify_sign_open,
    count_roots,
    format_polynomial,
    isolate_roots,
    parse_polynomial,
    poly_derivative,
    poly_eval,
    square_free_part,
    sturm_chain,
    to_rational,
)
from hilbertnorm.errors import (
    CannotCertify,
    DomainError,
    EndpointIsRoot,
    PolynomialParseError,
    ZeroPolynomialError,
)

pytestmark = pytest.mark.unit

R = sp.Rational


def from_roots(roots, extra=(1, 0, 1)):
    """prod (x - r) times an extra factor without real roots"""
    poly = RationalPolynomial(extra)
    for r in roots:
        poly = poly * RationalPolynomial((-r, 1))
    return poly


# ============================================================================
# Test Arithmetic
# ============================================================================

class TestRationalPolynomial:
    """Test exact polynomial arithmetic"""

    def test_normalises_trailing_zeros(self):
        """Trailing zero coefficients are dropped"""
        poly = RationalPolynomial((1, 2, 0, 0))
        assert poly.degree == 1
        assert RationalPolynomial((0, 0)).is_zero
        assert RationalPolynomial(()).degree == -1

    def test_exact_coefficients(self):
        """Floats are read through their decimal repr"""
        assert to_rational(4.9) == R(49, 10)
        assert to_rational('7/3') == R(7, 3)
        assert to_rational(Fraction(5, 8)) == R(5, 8)
        with pytest.raises(DomainError):
            to_rational('seven')

    def test_arithmetic(self):
        """(1 + x)^2 = 1 + 2x + x^2 and p - p = 0"""
        p = RationalPolynomial((1, 1))
        assert p ** 2 == RationalPolynomial((1, 2, 1))
        assert (p - p).is_zero
        assert p * R(1, 2) == RationalPolynomial((R(1, 2), R(1, 2)))
        assert 3 * p == RationalPolynomial((3, 3))

    def test_eval_is_exact(self):
        """Horner evaluation at a rational point"""
        poly = RationalPolynomial((R(1, 3), 0, 3))
        assert poly_eval(poly, R(1, 3)) == R(2, 3)
        assert poly(R(1, 3)) == R(2, 3)

    def test_derivative(self):
        """Term-by-term derivatives of any order"""
        poly = RationalPolynomial((5, 4, 3, 2))
        assert poly_derivative(poly) == RationalPolynomial((4, 6, 6))
        assert poly.derivative(3) == RationalPolynomial((12,))
        assert poly.derivative(4).is_zero
        with pytest.raises(DomainError):
            poly_derivative(poly, -1)

    def test_bivariate(self):
        """on_line substitutes p = c0 + c1 alpha"""
        # f(alpha, p) = p^2 + alpha p
        f = BivariatePolynomial.from_alpha_rows({0: (0, 0, 1), 1: (0, 1)})
        assert f.evaluate(2, 3) == 15
        assert f.at_alpha(1) == RationalPolynomial((0, 1, 1))
        # p = 2 + 2 alpha: (2 + 2a)^2 + a (2 + 2a) = 4 + 10a + 6a^2
        assert f.on_line(2, 2) == RationalPolynomial((4, 10, 6))
        assert f.derivative().evaluate(2, 3) == 8


# ============================================================================
# Test Sturm Machinery
# ============================================================================

class TestSturm:
    """Test Sturm chains and root counts"""

    def test_sqrt2(self):
        """x^2 - 2 has one root in (0, 2]"""
        poly = RationalPolynomial((-2, 0, 1))
        assert count_roots(sturm_chain(poly), 0, 2) == 1
        assert count_roots(sturm_chain(poly), -2, 2) == 2

    def test_square_free_part(self):
        """Repeated roots are counted once"""
        poly = RationalPolynomial((-1, 1)) ** 3 * RationalPolynomial((2, 1))
        assert square_free_part(poly).degree == 2
        assert count_roots(sturm_chain(poly), -3, 3) == 2
        with pytest.raises(ZeroPolynomialError):
            square_free_part(RationalPolynomial(()))

    def test_chain_ends_in_constant(self):
        """Last element of the chain is a nonzero constant"""
        chain = sturm_chain(G1)
        assert chain.sequence[-1].degree == 0
        assert len(chain) >= 2

    def test_endpoint_root(self):
        """An endpoint root is reported, not counted"""
        poly = RationalPolynomial((-4, 0, 1))
        with pytest.raises(EndpointIsRoot) as info:
            count_roots(sturm_chain(poly), 2, 3)
        assert info.value.endpoint == 2

    def test_bad_interval(self):
        """lo >= hi is a domain error"""
        with pytest.raises(DomainError):
            count_roots(sturm_chain(RationalPolynomial((1, 1))), 1, 1)

    @given(
        st.lists(st.integers(min_value=-20, max_value=20), min_size=0, max_size=6, unique=True),
        st.integers(min_value=-22, max_value=21),
        st.integers(min_value=1, max_value=40),
    )
    @settings(max_examples=100, deadline=None)
    def test_counts_match_known_roots(self, halves, lo_int, width):
        """Sturm counts equal the number of planted roots in (lo, hi]"""
        roots = [R(h, 2) for h in halves]
        poly = from_roots(roots)
        lo = R(lo_int, 2) + R(1, 3)
        hi = lo + width
        expected = sum(1 for r in roots if lo < r <= hi)
        assert count_roots(sturm_chain(poly), lo, hi) == expected

    def test_isolation(self):
        """Each isolating interval holds one root and is narrow"""
        roots = [R(-3, 2), R(1, 4), R(7, 3)]
        poly = from_roots(roots)
        intervals = isolate_roots(poly, -5, 5)
        assert len(intervals) == 3
        for (a, b), r in zip(intervals, sorted(roots)):
            assert a < r <= b
            assert b - a <= R(1, 10 ** 12)

    def test_isolation_irrational(self):
        """sqrt(2) is enclosed"""
        ((a, b),) = isolate_roots(RationalPolynomial((-2, 0, 1)), 0, 2)
        assert a ** 2 < 2 <= b ** 2


# ============================================================================
# Test Sign Certificates
# ============================================================================

class TestCertifySign:
    """Test interval sign certificates"""

    def test_g1_positive(self):
        """g1 > 0 on [49/10, 51/10]"""
        cert = certify_sign(G1, R(49, 10), R(51, 10))
        assert cert.sign == Sign.Positive
        assert cert.root_count == 0
        assert cert.interval == (R(49, 10), R(51, 10))

    def test_cubic_above_one(self):
        """8 + p - 4p^2 + p^3 > 1 on [2, 9/2]"""
        cubic = RationalPolynomial((8, 1, -4, 1)) - RationalPolynomial((1,))
        assert certify_sign(cubic, 2, R(9, 2)).sign == Sign.Positive

    def test_negative(self):
        """-1 - x^2 is negative everywhere"""
        cert = certify_sign(RationalPolynomial((-1, 0, -1)), -10, 10)
        assert cert.sign == Sign.Negative
        assert cert.endpoint_approx == pytest.approx(-101.0)

    def test_refuses_with_roots(self):
        """A root inside refuses the certificate and reports it"""
        with pytest.raises(CannotCertify) as info:
            certify_sign(RationalPolynomial((-2, 0, 1)), 0, 2)
        assert len(info.value.roots) == 1
        assert info.value.details['roots']

    def test_refuses_endpoint_roots(self):
        """A root at lo raises EndpointIsRoot, at hi CannotCertify"""
        poly = RationalPolynomial((-1, 1))
        with pytest.raises(EndpointIsRoot):
            certify_sign(poly, 1, 2)
        with pytest.raises(CannotCertify):
            certify_sign(poly, 0, 1)

    def test_zero_polynomial(self):
        """The zero polynomial has no sign"""
        with pytest.raises(ZeroPolynomialError):
            certify_sign(RationalPolynomial(()), 0, 1)

    def test_open_interval(self):
        """certify_sign_open steps off endpoint roots"""
        cert = certify_sign_open(RationalPolynomial((0, -1, 1)), 0, 1)
        assert cert.sign == Sign.Negative

    def test_certificate_validation(self):
        """A certificate with roots or a wrong sign cannot be built"""
        with pytest.raises(ValueError):
            SignCertificate(polynomial='x', lo='1', hi='2', sign=Sign.Negative,
                            root_count=0, endpoint_value='1', endpoint_approx=1.0)
        with pytest.raises(ValueError):
            SignCertificate(polynomial='x', lo='1', hi='2', sign=Sign.Positive,
                            root_count=1, endpoint_value='1', endpoint_approx=1.0)


# ============================================================================
# Test Textual Format
# ============================================================================

class TestTextFormat:
    """Test parse_polynomial / format_polynomial"""

    def test_parse(self):
        """Caret powers and rational coefficients"""
        assert parse_polynomial("-2 + x^2") == RationalPolynomial((-2, 0, 1))
        assert parse_polynomial("1/2 - 3*x + 7/4*x**2") == RationalPolynomial((R(1, 2), -3, R(7, 4)))
        assert parse_polynomial("0.1 x") == RationalPolynomial((0, R(1, 10)))

    def test_format(self):
        """Ascending explicit form"""
        assert format_polynomial(RationalPolynomial((R(1, 2), -3, R(7, 4)))) == "1/2 - 3*x + 7/4*x^2"
        assert format_polynomial(RationalPolynomial(())) == "0"
        assert format_polynomial(RationalPolynomial((0, -1))) == "-1*x"

    @pytest.mark.parametrize("poly", [
        RationalPolynomial((R(-5, 3), 0, 0, R(22, 7))),
        G1,
        RationalPolynomial((0, 0, -1)),
    ])
    def test_round_trip(self, poly):
        """format then parse returns the same coefficients"""
        assert parse_polynomial(format_polynomial(poly)) == poly

    @pytest.mark.parametrize("text", ["", "x^2 + y", "1/x", "sin(x)", "x +* 2", "x; 1", "(x + 1"])
    def test_rejects(self, text):
        """Garbage and non-polynomials raise PolynomialParseError"""
        with pytest.raises(PolynomialParseError):
            parse_polynomial(text)

    @pytest.mark.parametrize("text", [
        "x.__class__", "(1).real", "x._", "__import__(1)", "x.conjugate()", "1..2 + x", "1e3*x",
    ])
    def test_rejects_attribute_access(self, text):
        """Only numbers, the variable and operators reach the parser"""
        with pytest.raises(PolynomialParseError):
            parse_polynomial(text)
