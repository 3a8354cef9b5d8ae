"""
Analysis Package
Auxiliary kernels of the norm argument, the equivalent integral
conditions and the regime / status classifier
"""

from .kernel import (
    WeightedSpace,
    Params,
    RegimeTag,
    Regime,
    CriticalPoints,
    t_star,
    regime_of,
    gen_binom,
    psi,
    psi_weight,
    h_fun,
    h_series,
    k_fun,
    k_series,
    g_fun,
    g_series,
    psi_beta_tail,
    big_f,
    big_f_with_error,
    big_f_derivative,
    g_tilde,
    e_tilde,
    e_tilde_constant,
    critical_p0,
    bisect_sign_change,
    locate_critical_points,
)
from .conditions import (
    StatusTag,
    ConditionValues,
    ConjectureStatus,
    UNRESOLVED_STRIPS,
    DEAD_BAND_FACTOR,
    condition_a,
    condition_b,
    condition_c,
    condition_a_with_error,
    condition_b_with_error,
    condition_c_with_error,
    s_bound,
    s_bound_applies,
    alpha0_reduction,
    conjectured_norm,
    in_unresolved_strip,
    evaluate_conditions,
    classify,
    status_counts,
)

__all__ = [
    # Parameters and regimes
    'WeightedSpace',
    'Params',
    'RegimeTag',
    'Regime',
    't_star',
    'regime_of',

    # Kernel functions
    'gen_binom',
    'psi',
    'psi_weight',
    'h_fun',
    'h_series',
    'k_fun',
    'k_series',
    'g_fun',
    'g_series',
    'psi_beta_tail',
    'big_f',
    'big_f_with_error',
    'big_f_derivative',
    'g_tilde',
    'e_tilde',
    'e_tilde_constant',
    'critical_p0',
    'CriticalPoints',
    'bisect_sign_change',
    'locate_critical_points',

    # Conditions
    'StatusTag',
    'ConditionValues',
    'ConjectureStatus',
    'UNRESOLVED_STRIPS',
    'DEAD_BAND_FACTOR',
    'condition_a',
    'condition_b',
    'condition_c',
    'condition_a_with_error',
    'condition_b_with_error',
    'condition_c_with_error',
    's_bound',
    's_bound_applies',
    'alpha0_reduction',
    'conjectured_norm',
    'in_unresolved_strip',
    'evaluate_conditions',
    'classify',
    'status_counts',
]

__version__ = '1.0.0'
__author__ = 'hilbertnorm developers'
