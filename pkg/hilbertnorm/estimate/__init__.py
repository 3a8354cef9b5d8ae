"""
Estimate Package
Finite-section estimates of the Hilbert matrix norm on A^p_alpha
"""

from .normest import (
    TaylorCoeffs,
    CompositionSymbol,
    hilbert_apply,
    t_composition_apply,
    angular_mean,
    bergman_norm,
    extremal_coeffs,
    norm_ratio_estimate,
    convergence_study,
)

__all__ = [
    # Types
    'TaylorCoeffs',
    'CompositionSymbol',

    # Operator action
    'hilbert_apply',
    't_composition_apply',

    # Norms and estimates
    'angular_mean',
    'bergman_norm',
    'extremal_coeffs',
    'norm_ratio_estimate',
    'convergence_study',
]

__version__ = '1.0.0'
__author__ = 'hilbertnorm developers'
