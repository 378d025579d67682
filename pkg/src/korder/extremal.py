"""Extremal functions of the convex order-alpha family.

For 0 <= alpha < 1 the extremal member of the family is

    k_alpha(z) = (1 - (1-z)^gamma) / gamma,      gamma = 2*alpha - 1,

with the logarithmic limit -log(1-z) at alpha = 1/2.  Its normalized form
h_alpha(z) = k_alpha(z)/z maps the unit disk onto a convex domain and is
itself convex of a computable order; this module evaluates both, their
derivatives, the curvature transform 1 + z h''/h', and the sharp infimum
of that transform's real part (Kustner's bound).

Branch convention: every power and logarithm of (1 - z) is the principal
branch.  This is unambiguous on |z| <= 1, z != 1, because Re(1-z) >= 0
there with equality only at non-real points of the unit circle, which the
principal branch handles continuously.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import ConvergenceError, DomainError, SingularInputError

# Removable-singularity switch radii.  Inside these, series are exact to
# well below 1e-13 relative; outside, the closed forms lose at most a few
# ulps to cancellation.
_SMALL_Z = 1e-3       # |z| below this: Taylor series in z
_SMALL_GAMMA = 1e-8   # |2 alpha - 1| below this: series in gamma
_SMALL_EPS = 1e-6     # |beta - 1| below this: series branch of the transform
_N_SERIES = 20


@dataclass(frozen=True)
class Order:
    """Order parameter alpha in [0, 1) with its derived exponents.

    beta  = 2 - 2 alpha   (exponent of k'),
    gamma = 2 alpha - 1   (exponent of the boundary parametrization),
    c     = alpha - 1/2   (half of gamma; the solver works in c).
    """

    alpha: float
    beta: float = field(init=False)
    gamma: float = field(init=False)
    c: float = field(init=False)

    def __post_init__(self) -> None:
        a = float(self.alpha)
        if not (0.0 <= a < 1.0) or a != a:
            raise DomainError(f"order alpha must lie in [0, 1), got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", 2.0 - 2.0 * a)
        object.__setattr__(self, "gamma", 2.0 * a - 1.0)
        object.__setattr__(self, "c", a - 0.5)


def _check_disk_point(z: complex) -> complex:
    z = complex(z)
    if abs(z) > 1.0 + 1e-12:
        raise DomainError(f"|z| must be <= 1, got {abs(z)}")
    return z


def k_alpha(order: Order, z: complex) -> complex:
    """Extremal function k_alpha(z) = (1 - (1-z)^gamma)/gamma.

    At gamma = 0 this degenerates to -log(1-z); for |gamma| < 1e-8 a short
    series in gamma*log keeps the evaluation continuous in alpha.  z = 1 is
    allowed only for alpha > 1/2, where the limit is 1/gamma.
    """
    z = _check_disk_point(z)
    g = order.gamma
    if z == 1.0:
        if order.alpha > 0.5:
            return complex(1.0 / g)
        raise SingularInputError("k_alpha is unbounded at z = 1 for alpha <= 1/2")
    ell = -cmath.log(1.0 - z)
    if abs(g) < _SMALL_GAMMA:
        # (1 - exp(-g*ell))/g = ell*(1 - w/2 + w^2/6 - w^3/24 + ...), w = g*ell
        w = g * ell
        return ell * (1.0 - w / 2.0 + w * w / 6.0 - w * w * w / 24.0)
    return (1.0 - (1.0 - z) ** g) / g


def k_alpha_prime(order: Order, z: complex) -> complex:
    """k_alpha'(z) = (1-z)^(-beta), principal branch."""
    z = _check_disk_point(z)
    if z == 1.0:
        raise SingularInputError("k_alpha' is singular at z = 1")
    return (1.0 - z) ** (-order.beta)


def _h_coeffs(order: Order, n: int) -> list[float]:
    """First n Taylor coefficients of h_alpha: c_j = (beta)_j / ((j+1) j!)."""
    b = order.beta
    out = [1.0]
    for j in range(n - 1):
        out.append(out[-1] * (b + j) / (j + 2))
    return out


def h_alpha(order: Order, z: complex) -> complex:
    """h_alpha(z) = k_alpha(z)/z, with the removable point h_alpha(0) = 1."""
    z = _check_disk_point(z)
    if abs(z) < _SMALL_Z:
        acc = 0.0 + 0.0j
        for c in reversed(_h_coeffs(order, _N_SERIES)):
            acc = acc * z + c
        return acc
    return k_alpha(order, z) / z


def h_alpha_prime(order: Order, z: complex) -> complex:
    """h_alpha'(z) = (k_alpha'(z) - h_alpha(z))/z, series below |z| = 1e-3.

    The quotient form is algebraically identical to the closed rational
    expression in (1-z)^(-beta) and stays continuous across alpha = 1/2
    because k_alpha handles that switch internally.
    """
    z = _check_disk_point(z)
    if abs(z) < _SMALL_Z:
        coeffs = _h_coeffs(order, _N_SERIES)
        acc = 0.0 + 0.0j
        for j in range(len(coeffs) - 1, 0, -1):
            acc = acc * z + j * coeffs[j]
        return acc
    return (k_alpha_prime(order, z) - h_alpha(order, z)) / z


def h_alpha_series(order: Order, z: complex, n_terms: int) -> complex:
    """Partial Taylor sum of h_alpha at 0; an oracle for the closed form.

    Restricted to |z| <= 0.95 so a caller cannot silently request a region
    where the tail no longer drops below the documented tolerances.
    """
    z = complex(z)
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    if abs(z) > 0.95:
        raise ConvergenceError("h_alpha_series is supported only for |z| <= 0.95")
    acc = 0.0 + 0.0j
    for c in reversed(_h_coeffs(order, n_terms)):
        acc = acc * z + c
    return acc


def _b_prefix(order: Order, n: int) -> list[float]:
    """b_0..b_n with b_j = (2-beta)_j / (3)_j, via b_j = b_{j-1} (j+1-beta)/(j+2)."""
    b = order.beta
    out = [1.0]
    for j in range(1, n + 1):
        out.append(out[-1] * (j + 1.0 - b) / (j + 2.0))
    return out


def pochhammer_quotient(order: Order, n: int) -> float:
    """b_n = (2-beta)_n / (3)_n, the positive decreasing sequence whose
    consecutive differences generate the curvature witness series."""
    if not (0.0 < order.alpha < 1.0):
        raise DomainError("pochhammer_quotient needs 0 < alpha < 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    return _b_prefix(order, n)[n]


def omega_partial(order: Order, z: complex, n_terms: int) -> complex:
    """Partial sum of the disk self-map omega(z) = sum (b_n - b_{n-1}) z^n.

    omega is the Schwarz-type function through which the curvature
    transform factors as a Moebius image (1-omega)/(1+omega); its modulus
    stays below 1 on the closed disk, which certifies positivity of the
    transform's real part.
    """
    if not (0.0 < order.alpha < 1.0):
        raise DomainError("omega_partial needs 0 < alpha < 1")
    z = complex(z)
    if abs(z) > 1.0 + 1e-12:
        raise DomainError("omega_partial needs |z| <= 1")
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    bs = _b_prefix(order, n_terms)
    acc = 0.0 + 0.0j
    for n in range(n_terms, 0, -1):
        acc = acc * z + (bs[n] - bs[n - 1])
    return acc * z


def convexity_transform(order: Order, z: complex) -> complex:
    """1 + z h''(z)/h'(z) for h = h_alpha; real part is positive on the disk.

    Closed form: -1 - beta(1-beta) z^2 / (((1-z)^beta - 1 + beta z)(1-z)).
    Near beta = 1 the fraction is 0/0 in beta; substituting
    (1-z)^beta - 1 + beta z = eps ((1-z) L phi(eps L) + z), eps = beta - 1,
    L = log(1-z), phi(w) = (e^w - 1)/w, cancels eps exactly.  Near z = 0 a
    series form through the b_n sequence avoids cancellation; it also
    covers z = 0 itself (value 1).
    """
    z = _check_disk_point(z)
    b = order.beta
    if abs(z) < _SMALL_Z:
        bs = _b_prefix(order, _N_SERIES)
        acc = 0.0 + 0.0j
        for c in reversed(bs):
            acc = acc * z + c
        return -1.0 + 2.0 / ((1.0 - z) * acc)
    if z == 1.0:
        raise SingularInputError("convexity_transform is singular at z = 1")
    eps = b - 1.0
    if abs(eps) < _SMALL_EPS:
        ell = cmath.log(1.0 - z)
        w = eps * ell
        phi = 1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0
        return -1.0 + b * z * z / ((((1.0 - z) * ell) * phi + z) * (1.0 - z))
    p = (1.0 - z) ** b - 1.0 + b * z
    return -1.0 - b * (1.0 - b) * z * z / (p * (1.0 - z))


def kustner_inf(order: Order) -> float:
    """Sharp infimum of Re(1 + z h''/h') over the disk for h = h_alpha.

    Equals (2^(beta+1) - 2 - beta - beta^2) / (2 (1 + beta - 2^beta)), the
    value of the transform at z = -1.  Both numerator and denominator
    vanish at beta = 1, so near it the quotient is evaluated from matched
    fourth-order expansions in eps = beta - 1.
    """
    if not (0.0 < order.alpha < 1.0):
        raise DomainError("kustner_inf needs 0 < alpha < 1")
    b = order.beta
    eps = b - 1.0
    if abs(eps) < 1e-4:
        l2 = math.log(2.0)
        num = (
            (4.0 * l2 - 3.0)
            + eps * (2.0 * l2 * l2 - 1.0)
            + eps * eps * (2.0 / 3.0) * l2**3
            + eps**3 * (1.0 / 6.0) * l2**4
        )
        den = (
            (2.0 - 4.0 * l2)
            - 2.0 * eps * l2 * l2
            - eps * eps * (2.0 / 3.0) * l2**3
            - eps**3 * (1.0 / 6.0) * l2**4
        )
        return num / den
    return (2.0 ** (b + 1.0) - 2.0 - b - b * b) / (2.0 * (1.0 + b - 2.0**b))


def kustner_lower_bound(order: Order) -> float:
    """Elementary lower bound for kustner_inf: (4 alpha - 1)/5 above order
    1/2 and alpha/(3 - alpha) below; the two agree (= 1/5) at alpha = 1/2."""
    if not (0.0 < order.alpha < 1.0):
        raise DomainError("kustner_lower_bound needs 0 < alpha < 1")
    a = order.alpha
    if a >= 0.5:
        return (4.0 * a - 1.0) / 5.0
    return a / (3.0 - a)


def kustner_numeric_min(
    order: Order,
    radii: tuple[float, float] = (0.999, 0.9999),
    n_angles: int = 181,
    window: float = 0.05,
) -> float:
    """Independent numeric estimate of kustner_inf.

    Minimizes Re(convexity_transform) over angular windows [pi - window, pi]
    on two circles of radius < 1 and extrapolates the two minima linearly in
    (1 - r) to the boundary.  The transform is analytic at z = -1, so the
    extrapolation error is O((1-r1)(1-r2)) ~ 1e-7, well under the 1e-5
    agreement this estimate is used to certify.
    """
    r1, r2 = radii
    if not (0.0 < r1 < r2 < 1.0):
        raise DomainError("radii must satisfy 0 < r1 < r2 < 1")
    mins = []
    for r in radii:
        best = math.inf
        for i in range(n_angles):
            theta = math.pi - window + window * i / (n_angles - 1)
            val = convexity_transform(order, r * cmath.exp(1j * theta)).real
            if val < best:
                best = val
        mins.append(best)
    m1, m2 = mins
    # two-point extrapolation of the circle minima to r -> 1
    return m2 + (m2 - m1) * (1.0 - r2) / (r2 - r1)
