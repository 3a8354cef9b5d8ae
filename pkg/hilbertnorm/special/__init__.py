"""
Special Package
Gamma/Beta family special functions and singular-weight quadrature
"""

from .specfun import (
    BetaArgs,
    BoundDomain,
    ln_gamma,
    beta,
    inc_beta,
    inc_beta_scaled,
    reg_inc_beta,
    beta_upper_bound,
    beta_lower_bound,
    bound_domain_of,
    in_bound_domain,
)
from .quadrature import (
    QuadConfig,
    QuadResult,
    SingularWeight,
    default_quad_config,
    integrate,
    integrate_weighted,
    integrate_singular,
    gauss_jacobi_rule,
    gauss_legendre_rule,
)

__all__ = [
    # Gamma / Beta
    'ln_gamma',
    'beta',
    'inc_beta',
    'inc_beta_scaled',
    'reg_inc_beta',

    # Elementary bounds
    'BetaArgs',
    'BoundDomain',
    'beta_upper_bound',
    'beta_lower_bound',
    'bound_domain_of',
    'in_bound_domain',

    # Quadrature
    'QuadConfig',
    'QuadResult',
    'SingularWeight',
    'default_quad_config',
    'integrate',
    'integrate_weighted',
    'integrate_singular',
    'gauss_jacobi_rule',
    'gauss_legendre_rule',
]

__version__ = '1.0.0'
__author__ = 'hilbertnorm developers'
