"""Exact verification kernel for Macdonald-Koornwinder branching rules.

The package is organized bottom-up: integer partition combinatorics,
an exact multivariate rational-function field, q-symbol products,
symmetric and interpolation polynomials, Koornwinder polynomials,
branching and transition coefficients, basic hypergeometric identities,
Littlewood-type sums, and a floating-point layer for one-dimensional
elliptic summation checks.  Everything outside the elliptic layer is
exact integer arithmetic.
"""

__version__ = "0.1.0"
