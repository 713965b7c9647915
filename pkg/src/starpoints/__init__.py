"""Rational points on hyperelliptic curves: determination and verification.

The package provides exact and p-adic arithmetic, hyperelliptic curve and
Jacobian machinery, Coleman-style p-adic analytic bounds built from tiny
integrals, the Mordell-Weil sieve, quotient constructions for curves with
extra involutions, and a registry of curated curve data with a command line
interface tying the pipelines together.
"""

__version__ = "0.1.0"
