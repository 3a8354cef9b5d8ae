"""
hilbertnorm
Numerical and exact verification toolkit for the norm of the Hilbert
matrix operator on weighted Bergman spaces A^p_alpha.

Sub-packages:
1. special   - Gamma/Beta family and singular-weight quadrature
2. analysis  - auxiliary kernels, the equivalent integral conditions, regime classifier
3. certify   - exact rational polynomials, Sturm certificates, case analyses
4. estimate  - finite-section norm estimator
5. cli       - command-line front end
"""

from .errors import (
    HilbertNormError,
    DomainError,
    RegimeMismatch,
    NonConvergence,
    BracketNotFound,
    ZeroPolynomialError,
    EndpointIsRoot,
    CannotCertify,
    PolynomialParseError,
    ConfigError,
)

__all__ = [
    'HilbertNormError',
    'DomainError',
    'RegimeMismatch',
    'NonConvergence',
    'BracketNotFound',
    'ZeroPolynomialError',
    'EndpointIsRoot',
    'CannotCertify',
    'PolynomialParseError',
    'ConfigError',
]

__version__ = '1.0.0'
__author__ = 'hilbertnorm developers'
