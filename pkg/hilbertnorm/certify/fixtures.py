"""
Polynomial Fixtures
Printed polynomials of the small-alpha proposition and the alpha = 1
example, stored exactly, plus the cross-checks tying them together.

Printed tables are transcribed as printed. Cascade members that are not
printed (HP2, HP3, G1D5) are produced by exact differentiation; the
printed fifth derivative of g1 disagrees with differentiation and is kept
separately as PRINTED_G1D5.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple, Union

import sympy as sp

from .polyexact import (
    BivariatePolynomial,
    RationalLike,
    RationalPolynomial,
    format_polynomial,
    poly_eval,
    to_rational,
)

logger = logging.getLogger(__name__)

Fixture = Union[RationalPolynomial, BivariatePolynomial]


def _poly(*coeffs: RationalLike) -> RationalPolynomial:
    return RationalPolynomial(tuple(coeffs))


# ============================================================================
# Small-alpha proposition: S(alpha, p) <= (g0(p) + h(alpha, p)) / u(alpha, p)
# ============================================================================

G0 = _poly(64, 136, 112, 88, 32, -40, -16, 8)

# h(alpha, p): {alpha power: p coefficients}
H = BivariatePolynomial.from_alpha_rows({
    7: (2, -16, 32),
    6: (12, -72, 104, -32),
    5: (14, -32, -2, -64, -24),
    4: (-44, 248, -236, 104, 40, 32),
    3: (-112, 353, -162, 288, -72, -48, -8),
    2: (-32, 134, -28, 174, -120, 64, 16),
    1: (96, 140, 72, 72, 0, 28, -40),
})

HP1 = BivariatePolynomial.from_alpha_rows({
    7: (-16, 64),
    6: (-72, 208, -96),
    5: (-32, -4, -192, -96),
    4: (248, -472, 312, 160, 160),
    3: (353, -324, 864, -288, -240, -48),
    2: (134, -56, 522, -480, 320, 96),
    1: (140, 144, 216, 0, 140, -240),
})

HP2 = HP1.derivative()
HP3 = HP2.derivative()

HP4 = BivariatePolynomial.from_alpha_rows({
    5: (-576,),
    4: (960, 3840),
    3: (-1728, -5760, -2880),
    2: (-2880, 7680, 5760),
    1: (0, 3360, -14400),
})

# one-variable boundary values, polynomials in alpha
BOUNDARY_H3 = _poly(0, 2604, 6313, 4864, 1356, 288, 112) * -12
BOUNDARY_H2 = _poly(0, 3428, 12076, 15399, 8830, 2313, 332, 48) * -4
BOUNDARY_H1 = _poly(0, 4148, 20962, 38631, 35128, 16600, 3664, 240) * -1
BOUNDARY_H0 = _poly(0, 40082, 191376, 349873, 341132, 197168, 65648, 9776) * sp.Rational(-1, 8)


def _u_polynomial() -> BivariatePolynomial:
    # 4(1+alpha) p (-2-alpha+4 alpha p-2p^2)(-2-alpha-4p+4 alpha p-2p^2)(-2-alpha+4p+4 alpha p-2p^2)
    def biv(rows: Dict[int, Tuple[int, ...]]) -> BivariatePolynomial:
        return BivariatePolynomial.from_alpha_rows(rows)

    lead = biv({0: (0, 4), 1: (0, 4)})
    q1 = biv({0: (-2, 0, -2), 1: (-1, 4)})
    q2 = biv({0: (-2, -4, -2), 1: (-1, 4)})
    q3 = biv({0: (-2, 4, -2), 1: (-1, 4)})
    return lead * q1 * q2 * q3


U = _u_polynomial()

# ============================================================================
# alpha = 1 example
# ============================================================================

G1 = _poly(5184, -5616, 495, 4383, -4896, 2100, -396, 28)
G1D1 = _poly(-5616, 990, 13149, -19584, 10500, -2376, 196)
G1D2 = _poly(990, 26298, -58752, 42000, -11880, 1176)
G1D3 = _poly(26298, -117504, 126000, -47520, 5880)
G1D4 = _poly(-117504, 252000, -142560, 23520)
G1D5 = G1D4.derivative()
G1D6 = _poly(-285120, 141120)

PRINTED_G1D5 = _poly(252000, -284120, 70560)

# f(p) = (-6 - 39p + 18p^2 - 2p^3) / 12
F_CUBIC = _poly(-6, -39, 18, -2) * sp.Rational(1, 12)

# f(p) of the middle cases as numerator / denominator
F_II_NUM = _poly(144, -78, -3, 12, -2)
F_II_DEN = _poly(-288, 84)


class FixtureName(str, Enum):
    G0 = 'G0'
    H = 'H'
    HP1 = 'HP1'
    HP2 = 'HP2'
    HP3 = 'HP3'
    HP4 = 'HP4'
    U = 'U'
    G1 = 'G1'
    G1D1 = 'G1D1'
    G1D2 = 'G1D2'
    G1D3 = 'G1D3'
    G1D4 = 'G1D4'
    G1D5 = 'G1D5'
    G1D6 = 'G1D6'
    F_CUBIC = 'F_CUBIC'
    BOUNDARY_H3 = 'BOUNDARY_H3'
    BOUNDARY_H2 = 'BOUNDARY_H2'
    BOUNDARY_H1 = 'BOUNDARY_H1'
    BOUNDARY_H0 = 'BOUNDARY_H0'


_REGISTRY: Dict[FixtureName, Fixture] = {
    FixtureName.G0: G0,
    FixtureName.H: H,
    FixtureName.HP1: HP1,
    FixtureName.HP2: HP2,
    FixtureName.HP3: HP3,
    FixtureName.HP4: HP4,
    FixtureName.U: U,
    FixtureName.G1: G1,
    FixtureName.G1D1: G1D1,
    FixtureName.G1D2: G1D2,
    FixtureName.G1D3: G1D3,
    FixtureName.G1D4: G1D4,
    FixtureName.G1D5: G1D5,
    FixtureName.G1D6: G1D6,
    FixtureName.F_CUBIC: F_CUBIC,
    FixtureName.BOUNDARY_H3: BOUNDARY_H3,
    FixtureName.BOUNDARY_H2: BOUNDARY_H2,
    FixtureName.BOUNDARY_H1: BOUNDARY_H1,
    FixtureName.BOUNDARY_H0: BOUNDARY_H0,
}

G1_CASCADE: Tuple[RationalPolynomial, ...] = (G1, G1D1, G1D2, G1D3, G1D4, G1D5, G1D6)


def fixture(name: Union[FixtureName, str]) -> Fixture:
    """
    Look up a fixture polynomial by name

    Bivariate fixtures come back as BivariatePolynomial (polynomial in p
    with coefficients in Q[alpha]).
    """
    return _REGISTRY[FixtureName(name)]


# ============================================================================
# Cross-checks
# ============================================================================

@dataclass(frozen=True)
class FixtureDiscrepancy:
    """A printed polynomial that disagrees with its exact derivation."""
    name: str
    printed: str
    derived: str


def _describe(poly: Fixture) -> str:
    if isinstance(poly, RationalPolynomial):
        return format_polynomial(poly)
    return ' + '.join(f"({format_polynomial(c, 'alpha')})*p^{k}"
                      for k, c in enumerate(poly.coefficients) if not c.is_zero)


def fixture_discrepancies() -> List[FixtureDiscrepancy]:
    """
    Compare every printed polynomial with what exact algebra gives

    Returns:
        Mismatches only (empty when every printed table is consistent)
    """
    checks: List[Tuple[str, Fixture, Fixture]] = [
        ('HP1', HP1, H.derivative()),
        ('HP4', HP4, HP3.derivative()),
        ('G1D1', G1D1, G1.derivative()),
        ('G1D2', G1D2, G1D1.derivative()),
        ('G1D3', G1D3, G1D2.derivative()),
        ('G1D4', G1D4, G1D3.derivative()),
        ('G1D5', PRINTED_G1D5, G1D4.derivative()),
        ('G1D6', G1D6, G1D5.derivative()),
        ('BOUNDARY_H3', BOUNDARY_H3, HP3.on_line(2, 2)),
        ('BOUNDARY_H2', BOUNDARY_H2, HP2.on_line(2, 2)),
        ('BOUNDARY_H1', BOUNDARY_H1, HP1.on_line(2, 2)),
        ('BOUNDARY_H0', BOUNDARY_H0, H.on_line(sp.Rational(5, 2), 2)),
        ('G0', G0, g0_factored()),
    ]
    found = []
    for name, printed, derived in checks:
        if printed != derived:
            logger.info("fixture %s differs from its derivation", name)
            found.append(FixtureDiscrepancy(name, _describe(printed), _describe(derived)))
    return found


def g0_factored() -> RationalPolynomial:
    """8 (1+p)^2 (1+p^2) (8 + p - 4p^2 + p^3), multiplied out."""
    return _poly(1, 1) ** 2 * _poly(1, 0, 1) * _poly(8, 1, -4, 1) * 8


def _beta_bound(x: sp.Rational, y: sp.Rational) -> sp.Rational:
    return (x + y) / (x * y * (1 + x * y))


def bound_identity_sides(alpha: RationalLike, p: RationalLike) -> Tuple[sp.Rational, sp.Rational]:
    """
    Both sides of T(alpha, p) = (g0(p) + h(alpha, p)) / u(alpha, p)

    T is S(alpha, p) with every Beta term replaced by the elementary
    bound (x+y)/(xy(1+xy)); the two sides are equal rational functions.

    Args:
        alpha: Exact rational alpha
        p: Exact rational p (u must not vanish)

    Returns:
        (T, (g0 + h)/u) as exact rationals
    """
    al, pp = to_rational(alpha), to_rational(p)
    a = (2 + al) / pp
    c = 2 * pp - 4 * al - 4
    weights = (sp.Integer(1), -al, al * (al - 1) / 2)
    t_value = sp.Integer(0)
    for j, w in enumerate(weights):
        cj = c + 4 * j
        t_value += w * (1 / cj - 1 / (cj * cj * _beta_bound(cj, a)))
    t_value -= 1 / (4 * (al + 1))
    rhs = (poly_eval(G0, pp) + H.evaluate(al, pp)) / U.evaluate(al, pp)
    return t_value, rhs
