"""Classical coefficient criteria and the fixed counterexample polynomial.

Three classical objects live here: the coefficient sum sum n^2 |a_n| whose
smallness certifies convexity; the family q_gamma(z) = sum_j (gamma+1)/
(gamma+j) z^j, convex for Re gamma >= 0; and the pair of bounded target
functions h1, h2 with h2(z) = h1(z^2) and |Im h2| < pi/4 on the disk.

counterexample_check packages a fixed quintic that is convex by the
coefficient criterion yet cannot have f(z)/z subordinate to h2: f fixes
+-i/sqrt(2), which would force f'(z) = 1 there, but the only nonzero
solutions of f'(z) = 1 are +-i sqrt(3/10).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

_SMALL_Z = 1e-3


@dataclass(frozen=True)
class PolynomialFunction:
    """Polynomial f(z) = z + a_2 z^2 + ... normalized by a_1 = 1.

    coeffs stores (a_1, a_2, ..., a_N); a_1 must equal 1.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[0] != 1:
            raise DomainError("need coefficients (a_1, ...) with a_1 = 1")

    def value(self, z):
        zz = np.asarray(z, dtype=complex)
        acc = np.zeros_like(zz)
        for a in reversed(self.coeffs):
            acc = (acc + a) * zz
        return complex(acc) if np.ndim(z) == 0 else acc

    def derivative(self, z):
        zz = np.asarray(z, dtype=complex)
        acc = np.zeros_like(zz)
        for n in range(len(self.coeffs), 0, -1):
            acc = acc * zz + n * self.coeffs[n - 1]
        return complex(acc) if np.ndim(z) == 0 else acc

    def second_derivative(self, z):
        zz = np.asarray(z, dtype=complex)
        acc = np.zeros_like(zz)
        for n in range(len(self.coeffs), 1, -1):
            acc = acc * zz + n * (n - 1) * self.coeffs[n - 1]
        return complex(acc) if np.ndim(z) == 0 else acc

    def curvature_ratio(self, z):
        """f''/f', the quantity the curvature estimate integrates against."""
        return self.second_derivative(z) / self.derivative(z)


def alexander_sum(p: PolynomialFunction) -> tuple[float, bool]:
    """sum_{n>=2} n^2 |a_n| and whether it certifies convexity (<= 1).

    The n = 1 term is excluded: with the normalization a_1 = 1 it would
    contribute exactly 1 and the certificate would be vacuous.
    """
    total = sum(n * n * abs(a) for n, a in enumerate(p.coeffs, start=1) if n >= 2)
    return float(total), total <= 1.0


def q_gamma_coeff(gamma: complex, j: int) -> complex:
    """j-th Taylor coefficient (gamma+1)/(gamma+j) of q_gamma."""
    if j < 1:
        raise DomainError("coefficients are indexed from 1")
    return (gamma + 1.0) / (gamma + j)


def q_gamma(gamma: complex, z: complex, n_terms: int = 2000) -> complex:
    """Partial sum of q_gamma(z) = sum_{j>=1} (gamma+1)/(gamma+j) z^j.

    Convex on the disk whenever Re gamma >= 0.  Restricted to |z| <= 0.99
    so the requested number of terms controls the tail.
    """
    gamma = complex(gamma)
    if gamma.real < 0.0:
        raise DomainError("q_gamma needs Re gamma >= 0")
    z = complex(z)
    if abs(z) > 0.99:
        raise ConvergenceError("q_gamma is evaluated only for |z| <= 0.99")
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    acc = 0.0 + 0.0j
    for j in range(n_terms, 0, -1):
        acc = acc * z + q_gamma_coeff(gamma, j)
    return acc * z


def h1(z: complex) -> complex:
    """h1(z) = log((1+sqrt z)/(1-sqrt z)) / (2 sqrt z) = sum z^n/(2n+1).

    Even in sqrt z, so the principal square root gives the analytic
    continuation on the whole disk; a short series covers |z| < 1e-3.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError("h1 needs |z| < 1")
    if abs(z) < _SMALL_Z:
        acc = 0.0 + 0.0j
        for n in range(7, -1, -1):
            acc = acc * z + 1.0 / (2 * n + 1)
        return acc
    s = cmath.sqrt(z)
    return cmath.log((1.0 + s) / (1.0 - s)) / (2.0 * s)


def h2(z: complex) -> complex:
    """h2(z) = log((1+z)/(1-z)) / (2 z) = h1(z^2); |Im h2| < pi/4 on the disk."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError("h2 needs |z| < 1")
    if abs(z) < _SMALL_Z:
        acc = 0.0 + 0.0j
        z2 = z * z
        for n in range(7, -1, -1):
            acc = acc * z2 + 1.0 / (2 * n + 1)
        return acc
    return cmath.log((1.0 + z) / (1.0 - z)) / (2.0 * z)


@dataclass(frozen=True)
class CounterexampleReport:
    """Numeric record of the convex-but-not-subordinate quintic."""

    coeff_sum: float
    coeff_sum_convex: bool
    fixed_point: complex
    fixed_point_residual: float
    derivative_at_fixed_point: complex
    unit_derivative_roots: tuple[complex, complex]
    subordinate: bool


#: the fixed quintic z + z^3/100 + z^5/50
COUNTEREXAMPLE = PolynomialFunction((1.0, 0.0, 0.01, 0.0, 0.02))


def counterexample_check() -> CounterexampleReport:
    """Evaluate the quintic's endpoint facts.

    - coefficient sum 9/100 + 25/50 = 0.59 <= 1, so it is convex;
    - z0 = i/sqrt(2) satisfies f(z0) = z0 to machine precision;
    - f'(z0) = 1.01 != 1, while subordination of f/z to h2 would force
      f'(z0) = 1 at any nonzero fixed point;
    - the nonzero roots of f'(z) = 1 are +-i sqrt(3/10), and neither is a
      fixed point of f.
    """
    p = COUNTEREXAMPLE
    total, convex = alexander_sum(p)
    z0 = 1j / math.sqrt(2.0)
    residual = abs(p.value(z0) - z0)
    deriv = p.derivative(z0)
    # f'(z) - 1 = z^2 (3/100 + z^2/10): nonzero roots solve z^2 = -3/10
    root = 1j * math.sqrt(0.3)
    roots = (-root, root)
    subordinate = abs(deriv - 1.0) <= 1e-12  # it is not: deriv = 1.01
    return CounterexampleReport(
        coeff_sum=total,
        coeff_sum_convex=convex,
        fixed_point=z0,
        fixed_point_residual=residual,
        derivative_at_fixed_point=deriv,
        unit_derivative_roots=roots,
        subordinate=subordinate,
    )
