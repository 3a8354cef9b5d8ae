"""
Exact Polynomials
Rational-coefficient polynomial arithmetic, Sturm chains, exact root
counting / isolation and interval sign certificates.

Coefficients are sympy Rationals throughout; nothing here rounds.
Sturm's theorem: for a square-free f, the number of distinct real roots
in (a, b] equals V(a) - V(b), where V counts sign changes of the chain
evaluated at a point (zeros dropped).
"""

import logging
import re
import tokenize
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

import sympy as sp
from pydantic import BaseModel, Field, model_validator
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import BasePolynomialError

from ..errors import (
    CannotCertify,
    DomainError,
    EndpointIsRoot,
    PolynomialParseError,
    ZeroPolynomialError,
)

logger = logging.getLogger(__name__)

X = sp.Symbol('x')

NUDGE = sp.Rational(1, 10 ** 9)
ISOLATION_WIDTH = sp.Rational(1, 10 ** 12)

RationalLike = Union[int, str, float, Fraction, sp.Rational]


def to_rational(value: RationalLike) -> sp.Rational:
    """
    Exact rational from an int, 'a/b' string, Fraction or decimal float

    Floats are read through their shortest decimal repr, so 4.9 -> 49/10.
    """
    if isinstance(value, sp.Rational):
        return value
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        return sp.Rational(repr(value))
    try:
        result = sp.Rational(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not an exact rational: {value!r}") from exc
    return result


# ============================================================================
# Univariate polynomials
# ============================================================================

@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with exact rational coefficients, ascending degree."""
    coefficients: Tuple[sp.Rational, ...] = ()

    def __post_init__(self):
        coeffs = [to_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs))

    @classmethod
    def from_poly(cls, poly: sp.Poly) -> 'RationalPolynomial':
        if poly.is_zero:
            return cls(())
        return cls(tuple(reversed(poly.all_coeffs())))

    def to_poly(self) -> sp.Poly:
        if not self.coefficients:
            return sp.Poly(0, X, domain=sp.QQ)
        return sp.Poly(list(reversed(self.coefficients)), X, domain=sp.QQ)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: RationalLike) -> sp.Rational:
        return poly_eval(self, x)

    def __add__(self, other: 'RationalPolynomial') -> 'RationalPolynomial':
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (sp.Integer(0),) * (n - len(self.coefficients))
        b = other.coefficients + (sp.Integer(0),) * (n - len(other.coefficients))
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> 'RationalPolynomial':
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: 'RationalPolynomial') -> 'RationalPolynomial':
        return self + (-other)

    def __mul__(self, other: Union['RationalPolynomial', RationalLike]) -> 'RationalPolynomial':
        if not isinstance(other, RationalPolynomial):
            scalar = to_rational(other)
            return RationalPolynomial(tuple(c * scalar for c in self.coefficients))
        if self.is_zero or other.is_zero:
            return RationalPolynomial(())
        out = [sp.Integer(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'RationalPolynomial':
        result = RationalPolynomial((1,))
        for _ in range(k):
            result = result * self
        return result

    def derivative(self, k: int = 1) -> 'RationalPolynomial':
        return poly_derivative(self, k)

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_eval(poly: RationalPolynomial, x: RationalLike) -> sp.Rational:
    """
    Exact Horner evaluation

    Args:
        poly: Polynomial
        x: Rational point

    Returns:
        poly(x) as a sympy Rational (0 for the zero polynomial)
    """
    point = to_rational(x)
    value = sp.Integer(0)
    for c in reversed(poly.coefficients):
        value = value * point + c
    return value


def poly_derivative(poly: RationalPolynomial, k: int = 1) -> RationalPolynomial:
    """k-th derivative, term by term."""
    if k < 0:
        raise DomainError(f"derivative order must be >= 0, got {k}")
    coeffs = list(poly.coefficients)
    for _ in range(k):
        coeffs = [c * i for i, c in enumerate(coeffs)][1:]
    return RationalPolynomial(tuple(coeffs))


# ============================================================================
# Bivariate polynomials: polynomials in p with coefficients in Q[alpha]
# ============================================================================

@dataclass(frozen=True)
class BivariatePolynomial:
    """
    Polynomial in p whose coefficients are RationalPolynomials in alpha

    coefficients[k] multiplies p^k.
    """
    coefficients: Tuple[RationalPolynomial, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs))

    @classmethod
    def from_alpha_rows(cls, rows: Dict[int, Sequence[RationalLike]]) -> 'BivariatePolynomial':
        """
        Build from {alpha power: [p^0, p^1, ...]} rows (the printed layout)
        """
        degree_p = max((len(r) for r in rows.values()), default=0)
        degree_a = max(rows.keys(), default=-1)
        table = [[0] * (degree_a + 1) for _ in range(degree_p)]
        for j, row in rows.items():
            for k, c in enumerate(row):
                table[k][j] = c
        return cls(tuple(RationalPolynomial(tuple(col)) for col in table))

    @property
    def degree_p(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: 'BivariatePolynomial') -> 'BivariatePolynomial':
        n = max(len(self.coefficients), len(other.coefficients))
        zero = RationalPolynomial(())
        a = self.coefficients + (zero,) * (n - len(self.coefficients))
        b = other.coefficients + (zero,) * (n - len(other.coefficients))
        return BivariatePolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: 'BivariatePolynomial') -> 'BivariatePolynomial':
        if not self.coefficients or not other.coefficients:
            return BivariatePolynomial(())
        out = [RationalPolynomial(())] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return BivariatePolynomial(tuple(out))

    def derivative(self, k: int = 1) -> 'BivariatePolynomial':
        """k-th partial derivative in p."""
        coeffs = list(self.coefficients)
        for _ in range(k):
            coeffs = [c * i for i, c in enumerate(coeffs)][1:]
        return BivariatePolynomial(tuple(coeffs))

    def at_alpha(self, alpha: RationalLike) -> RationalPolynomial:
        """Fix alpha; result is a polynomial in p."""
        a = to_rational(alpha)
        return RationalPolynomial(tuple(poly_eval(c, a) for c in self.coefficients))

    def on_line(self, c0: RationalLike, c1: RationalLike) -> RationalPolynomial:
        """Substitute p = c0 + c1*alpha; result is a polynomial in alpha."""
        line = RationalPolynomial((to_rational(c0), to_rational(c1)))
        result = RationalPolynomial(())
        power = RationalPolynomial((1,))
        for c in self.coefficients:
            result = result + c * power
            power = power * line
        return result

    def evaluate(self, alpha: RationalLike, p: RationalLike) -> sp.Rational:
        return poly_eval(self.at_alpha(alpha), p)


# ============================================================================
# Sturm chains
# ============================================================================

@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of the square-free part of a polynomial."""
    sequence: Tuple[RationalPolynomial, ...]

    def sign_changes(self, x: RationalLike) -> int:
        """V(x): sign changes of the chain at x, zeros dropped."""
        point = to_rational(x)
        signs = [sp.sign(poly_eval(f, point)) for f in self.sequence]
        signs = [s for s in signs if s != 0]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def __len__(self) -> int:
        return len(self.sequence)


def square_free_part(poly: RationalPolynomial) -> RationalPolynomial:
    """poly / gcd(poly, poly')."""
    if poly.is_zero:
        raise ZeroPolynomialError("square-free part of the zero polynomial")
    if poly.degree < 1:
        return poly
    f = poly.to_poly()
    g = sp.gcd(f, f.diff(X))
    return RationalPolynomial.from_poly(f.exquo(g))


def sturm_chain(poly: RationalPolynomial) -> SturmChain:
    """
    Sturm chain: square-free part, its derivative, then negated remainders

    Args:
        poly: Nonzero polynomial

    Returns:
        SturmChain whose last element is a nonzero constant

    Raises:
        ZeroPolynomialError: poly is identically zero
    """
    base = square_free_part(poly).to_poly()
    sequence = [base]
    if base.degree() >= 1:
        sequence.append(base.diff(X))
        while True:
            remainder = sequence[-2].rem(sequence[-1])
            if remainder.is_zero:
                break
            sequence.append(-remainder)
    return SturmChain(tuple(RationalPolynomial.from_poly(f) for f in sequence))


def _count(chain: SturmChain, lo: sp.Rational, hi: sp.Rational) -> int:
    return chain.sign_changes(lo) - chain.sign_changes(hi)


def count_roots(chain: SturmChain, lo: RationalLike, hi: RationalLike) -> int:
    """
    Distinct real roots in (lo, hi]

    Args:
        chain: Sturm chain of the polynomial
        lo: Left end (not a root)
        hi: Right end (not a root)

    Raises:
        DomainError: lo >= hi
        EndpointIsRoot: lo or hi is a root
    """
    a, b = to_rational(lo), to_rational(hi)
    if not a < b:
        raise DomainError(f"count_roots requires lo < hi, got ({a}, {b}]")
    head = chain.sequence[0]
    for end in (a, b):
        if poly_eval(head, end) == 0:
            raise EndpointIsRoot(f"{end} is a root of {format_polynomial(head)}", endpoint=end)
    return _count(chain, a, b)


def isolate_roots(poly: RationalPolynomial, lo: RationalLike,
                  hi: RationalLike) -> List[Tuple[sp.Rational, sp.Rational]]:
    """
    Disjoint intervals (a, b], each holding exactly one root in (lo, hi)

    Bisection driven by Sturm counts until every interval is at most
    ISOLATION_WIDTH wide.

    Args:
        poly: Polynomial
        lo: Left end
        hi: Right end

    Returns:
        Sorted list of (a, b) rational pairs
    """
    a0, b0 = to_rational(lo), to_rational(hi)
    if not a0 < b0:
        raise DomainError(f"isolate_roots requires lo < hi, got ({a0}, {b0})")
    if poly.degree < 1:
        return []
    chain = sturm_chain(poly)
    found: List[Tuple[sp.Rational, sp.Rational]] = []
    stack = [(a0, b0, _count(chain, a0, b0))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and b - a <= ISOLATION_WIDTH:
            found.append((a, b))
            continue
        mid = (a + b) / 2
        left = _count(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, n - left))
    if poly_eval(poly, b0) == 0:
        found = [iv for iv in found if iv[1] != b0]
    return sorted(found)


# ============================================================================
# Sign certificates
# ============================================================================

class Sign(str, Enum):
    Positive = 'Positive'
    Negative = 'Negative'


class SignCertificate(BaseModel):
    """Sturm certificate that a polynomial keeps one sign on [lo, hi]."""
    polynomial: str = Field(..., description="Certified polynomial in the textual format")
    lo: str = Field(..., description="Left end, exact rational")
    hi: str = Field(..., description="Right end, exact rational")
    sign: Sign = Field(..., description="Sign held on the whole closed interval")
    root_count: int = Field(0, description="Sturm root count on (lo, hi]")
    endpoint_value: str = Field(..., description="Exact polynomial value at lo")
    endpoint_approx: float = Field(..., description="Float approximation of endpoint_value")

    @model_validator(mode='after')
    def _check(self):
        if self.root_count != 0:
            raise ValueError("a sign certificate requires root_count = 0")
        value = sp.Rational(self.endpoint_value)
        if (value > 0) != (self.sign == Sign.Positive) or value == 0:
            raise ValueError("endpoint value does not carry the certified sign")
        return self

    @property
    def interval(self) -> Tuple[sp.Rational, sp.Rational]:
        return sp.Rational(self.lo), sp.Rational(self.hi)


def certify_sign(poly: RationalPolynomial, lo: RationalLike, hi: RationalLike) -> SignCertificate:
    """
    Certify that poly has no root on [lo, hi] and report its sign

    Args:
        poly: Nonzero polynomial
        lo: Left end, poly(lo) != 0
        hi: Right end

    Returns:
        SignCertificate

    Raises:
        EndpointIsRoot: poly(lo) = 0
        CannotCertify: a root lies in (lo, hi]; the isolated roots are attached
    """
    if poly.is_zero:
        raise ZeroPolynomialError("cannot certify the sign of the zero polynomial")
    a, b = to_rational(lo), to_rational(hi)
    if not a < b:
        raise DomainError(f"certify_sign requires lo < hi, got [{a}, {b}]")
    start = poly_eval(poly, a)
    if start == 0:
        raise EndpointIsRoot(f"{a} is a root of {format_polynomial(poly)}", endpoint=a)

    text = format_polynomial(poly)
    if poly_eval(poly, b) == 0:
        roots = isolate_roots(poly, a, b) + [(b, b)]
        raise CannotCertify(f"{text} vanishes at {b}", roots=roots)
    n = count_roots(sturm_chain(poly), a, b)
    if n:
        roots = isolate_roots(poly, a, b)
        logger.debug("sturm: %s has %d root(s) on (%s, %s]", text, n, a, b)
        raise CannotCertify(f"{text} has {n} root(s) on ({a}, {b}]", roots=roots)

    sign = Sign.Positive if start > 0 else Sign.Negative
    logger.debug("sturm: %s is %s on [%s, %s]", text, sign.value, a, b)
    return SignCertificate(
        polynomial=text, lo=str(a), hi=str(b), sign=sign, root_count=0,
        endpoint_value=str(start), endpoint_approx=float(start),
    )


def certify_sign_open(poly: RationalPolynomial, lo: RationalLike, hi: RationalLike) -> SignCertificate:
    """
    certify_sign on (lo, hi): endpoints that are roots move inward by NUDGE
    """
    a, b = to_rational(lo), to_rational(hi)
    if poly_eval(poly, a) == 0:
        a += NUDGE
    if poly_eval(poly, b) == 0:
        b -= NUDGE
    return certify_sign(poly, a, b)


# ============================================================================
# Textual format
# ============================================================================

_ALLOWED = re.compile(r'^[0-9A-Za-z+\-*/^().\s]*$')
_NUMBER = re.compile(r'^(\d+\.?\d*|\.\d+)$')
_TOKEN = re.compile(r'[A-Za-z]+|[\d.]+')
_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication_application)


def parse_polynomial(text: str, var: str = 'x') -> RationalPolynomial:
    """
    Parse 'c0 + c1*x + c2*x^2 ...' with rational coefficients a/b

    Args:
        text: Polynomial text (^ or ** for powers)
        var: Variable name

    Raises:
        PolynomialParseError: unparsable text or not a polynomial in var
    """
    if not text or not text.strip():
        raise PolynomialParseError("empty polynomial text")
    if not _ALLOWED.match(text):
        raise PolynomialParseError(f"unexpected characters in {text!r}")
    for token in _TOKEN.findall(text):
        if token != var and not _NUMBER.match(token):
            raise PolynomialParseError(f"unexpected token {token!r} in {text!r}")
    symbol = sp.Symbol(var)
    try:
        expr = parse_expr(text, local_dict={var: symbol}, transformations=_TRANSFORMS)
        expr = sp.nsimplify(expr, rational=True)
        if expr.free_symbols - {symbol}:
            raise PolynomialParseError(
                f"unknown symbols {sorted(map(str, expr.free_symbols - {symbol}))} in {text!r}")
        poly = sp.Poly(expr, symbol, domain=sp.QQ)
    except PolynomialParseError:
        raise
    except (SyntaxError, TypeError, ValueError, tokenize.TokenError,
            BasePolynomialError, sp.SympifyError) as exc:
        raise PolynomialParseError(f"cannot parse {text!r}: {exc}") from exc
    return RationalPolynomial.from_poly(poly)


def _format_coefficient(c: sp.Rational) -> str:
    return str(c.p) if c.q == 1 else f"{c.p}/{c.q}"


def format_polynomial(poly: RationalPolynomial, var: str = 'x') -> str:
    """Explicit ascending form: '1/2 - 3*x + 7/4*x^2'; '0' for zero."""
    terms = []
    for k, c in enumerate(poly.coefficients):
        if c == 0:
            continue
        body = _format_coefficient(abs(c))
        if k == 1:
            body += f"*{var}"
        elif k > 1:
            body += f"*{var}^{k}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return ' '.join(terms) if terms else '0'
