"""Exact polynomial-matrix algebra over finite fields and probability census"""

__version__ = "1.0.0"
