"""Numerical verification of dual definite integrals for Bessel functions.

The package evaluates a catalog of Hankel-transform dual integral
identities by high-accuracy quadrature, checks the integrability
condition that governs when the transform pair is valid, and exposes a
command-line harness that emits machine-readable reports.
"""

__version__ = "0.1.0"
