"""
Tests Package
Test suite for hilbertnorm
"""

__version__ = '1.0.0'
