# tests/conftest.py
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def pytest_configure(config):
    """Pin the environment before hilbertnorm is imported"""
    os.environ['HNL_THREADS'] = '1'
    os.environ.pop('HNL_ABS_TOL', None)
    os.environ.pop('HNL_REL_TOL', None)
    os.environ.pop('HNL_MAX_SUBDIVISIONS', None)
    os.environ.setdefault('HNL_LOG_LEVEL', 'WARNING')


@pytest.fixture(scope="session")
def cfg():
    """Default quadrature tolerances"""
    from hilbertnorm.special.quadrature import QuadConfig
    return QuadConfig()


@pytest.fixture(scope="session")
def loose_cfg():
    """Looser tolerances for long sweeps"""
    from hilbertnorm.special.quadrature import QuadConfig
    return QuadConfig(abs_tol=1e-10, rel_tol=1e-8)
