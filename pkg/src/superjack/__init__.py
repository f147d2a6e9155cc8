"""Exact computation of Jack polynomials in superspace and verification of their partition identities."""

__version__ = "0.1.0"
