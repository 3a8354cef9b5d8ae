"""
Certify Package
Exact rational polynomials, Sturm sign certificates, the published
polynomial fixtures and the mechanized case analyses
"""

from .polyexact import (
    RationalPolynomial,
    BivariatePolynomial,
    SturmChain,
    Sign,
    SignCertificate,
    to_rational,
    poly_eval,
    poly_derivative,
    square_free_part,
    sturm_chain,
    count_roots,
    isolate_roots,
    certify_sign,
    certify_sign_open,
    parse_polynomial,
    format_polynomial,
)
from .fixtures import (
    FixtureName,
    FixtureDiscrepancy,
    PRINTED_G1D5,
    fixture,
    fixture_discrepancies,
    g0_factored,
    bound_identity_sides,
)
from .casework import (
    CaseId,
    BoundKind,
    Verdict,
    CaseReport,
    PUBLISHED_CONSTANTS,
    j_factor,
    exampleeq_value,
    cubic_form,
    quartic_form,
    example_alpha1,
    strip_scan,
    prop42a_verify,
    prop42b_verify,
    prop_b_bound,
    run_all_cases,
)

__all__ = [
    # Exact polynomials
    'RationalPolynomial',
    'BivariatePolynomial',
    'to_rational',
    'poly_eval',
    'poly_derivative',
    'parse_polynomial',
    'format_polynomial',

    # Sturm machinery
    'SturmChain',
    'Sign',
    'SignCertificate',
    'square_free_part',
    'sturm_chain',
    'count_roots',
    'isolate_roots',
    'certify_sign',
    'certify_sign_open',

    # Fixtures
    'FixtureName',
    'FixtureDiscrepancy',
    'PRINTED_G1D5',
    'fixture',
    'fixture_discrepancies',
    'g0_factored',
    'bound_identity_sides',

    # Case analyses
    'CaseId',
    'BoundKind',
    'Verdict',
    'CaseReport',
    'PUBLISHED_CONSTANTS',
    'j_factor',
    'exampleeq_value',
    'cubic_form',
    'quartic_form',
    'example_alpha1',
    'strip_scan',
    'prop42a_verify',
    'prop42b_verify',
    'prop_b_bound',
    'run_all_cases',
]

__version__ = '1.0.0'
__author__ = 'hilbertnorm developers'
