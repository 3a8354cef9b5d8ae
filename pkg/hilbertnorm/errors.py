"""
Error Hierarchy
Structured exceptions raised by every hilbertnorm module.

Numeric code never returns NaN for bad input: it raises one of these, and
the CLI maps them to exit codes.
"""

from typing import Any, Dict, List, Optional, Tuple


class HilbertNormError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        return self.message


# ============================================================================
# Numeric domain errors
# ============================================================================

class DomainError(HilbertNormError, ValueError):
    """Input outside the mathematical domain of an operation."""


class RegimeMismatch(DomainError):
    """A Beta bound was requested outside its stated (x, y) domain."""


class NonConvergence(HilbertNormError, ArithmeticError):
    """Quadrature or iteration failed to reach the requested tolerance."""

    def __init__(self, message: str, estimate: float, error: float,
                 details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details)
        self.estimate = estimate
        self.error = error


class BracketNotFound(HilbertNormError):
    """Bisection could not find a sign change in the expected interval."""


# ============================================================================
# Exact polynomial errors
# ============================================================================

class ZeroPolynomialError(DomainError):
    """Operation undefined for the zero polynomial."""


class EndpointIsRoot(HilbertNormError):
    """An interval endpoint is a root of the polynomial being examined."""

    def __init__(self, message: str, endpoint: Any):
        super().__init__(message, {"endpoint": str(endpoint)})
        self.endpoint = endpoint


class CannotCertify(HilbertNormError):
    """Sign certificate refused: roots found in the interval."""

    def __init__(self, message: str, roots: List[Tuple[Any, Any]]):
        super().__init__(message, {"roots": [(str(lo), str(hi)) for lo, hi in roots]})
        self.roots = roots


class PolynomialParseError(HilbertNormError, ValueError):
    """Text could not be parsed as a rational polynomial."""


# ============================================================================
# Configuration
# ============================================================================

class ConfigError(HilbertNormError):
    """Malformed configuration file or environment value."""
