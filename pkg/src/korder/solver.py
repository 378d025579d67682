"""Extremal quantities of the image domain D(alpha).

Two quantities are computed here.  max_boundary_imag is the height
M(alpha) = sup Im D(alpha), finite exactly for alpha >= 1/2; for
alpha > 1/2 it is attained where the derivative of the boundary height
vanishes, i.e. at the unique root of critical_angle_residual.  The
directional infimum Q(t) = inf { Re(e^{it} w) : w in D(alpha) } is a
support-function value of the convex image domain; depending on (alpha, t)
it is attained at an interior boundary parameter (found by inverting the
turning angle), at a closed-form endpoint, or is -infinity when the domain
is unbounded against the direction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal, Optional

from .boundary import turning_angle
from .errors import DomainError, SolverFailure
from .extremal import Order, k_alpha
from .rootfind import bisect_root, first_bracket, geometric_grid

InfimumCase = Literal["interior-critical", "borderline", "closed-form", "unbounded-below"]


@dataclass(frozen=True)
class InfimumResult:
    """Directional infimum value with the case that produced it.

    value is -inf exactly when case is "unbounded-below"; theta0 is the
    critical boundary parameter and is present exactly in the
    "interior-critical" case.
    """

    alpha: float
    t: float
    value: float
    case: InfimumCase
    theta0: Optional[float] = None


def _require_upper_order(order: Order) -> None:
    if not (0.5 < order.alpha < 1.0):
        raise DomainError("this solver quantity needs 1/2 < alpha < 1")


def critical_angle_residual(order: Order, theta: float) -> float:
    """Residual whose unique root in (0, pi) is the height-critical angle.

    F(theta) = [c cot(theta/2) sin(psi) + (1-c) cos(psi)] (2 sin(theta/2))^{2c}
               - cos(theta),   psi = c pi + (1-c) theta,  c = alpha - 1/2.

    The cot(psi) pole of the textbook form is removed by multiplying
    through by sin(psi) before evaluation.  Positive as theta -> 0+,
    negative at theta = pi, for every 1/2 < alpha < 1.
    """
    _require_upper_order(order)
    if not (0.0 < theta <= math.pi):
        raise DomainError("critical_angle_residual needs theta in (0, pi]")
    c = order.c
    psi = c * math.pi + (1.0 - c) * theta
    half = 0.5 * theta
    cot_half = math.cos(half) / math.sin(half)
    return (c * cot_half * math.sin(psi) + (1.0 - c) * math.cos(psi)) * (
        2.0 * math.sin(half)
    ) ** (2.0 * c) - math.cos(theta)


def cot_sum(order: Order, theta: float) -> float:
    """c cot(theta/2) + (1-c) cot(c pi + (1-c) theta); positive and strictly
    decreasing on the interval that contains the critical angle."""
    _require_upper_order(order)
    c = order.c
    psi = c * math.pi + (1.0 - c) * theta
    return c * math.cos(0.5 * theta) / math.sin(0.5 * theta) + (1.0 - c) * math.cos(
        psi
    ) / math.sin(psi)


def cot_sum_deriv(order: Order, theta: float) -> float:
    """Derivative of cot_sum: -c/(2 sin^2(theta/2)) - (1-c)^2/sin^2(psi)."""
    _require_upper_order(order)
    c = order.c
    psi = c * math.pi + (1.0 - c) * theta
    return -c / (2.0 * math.sin(0.5 * theta) ** 2) - (1.0 - c) ** 2 / math.sin(psi) ** 2


def peak_expr(order: Order, theta: float) -> float:
    """cos(theta)/cot_sum(theta) - sin(theta); at the critical angle this
    equals 2 c M(alpha)."""
    return math.cos(theta) / cot_sum(order, theta) - math.sin(theta)


_SCAN_EDGE = 1e-8


def critical_angle(order: Order) -> float:
    """Unique root of critical_angle_residual in (0, pi), to 1e-12.

    A geometric scan over (1e-8, pi - 1e-8) locates the sign change and
    bisection refines it; failure to bracket raises SolverFailure.
    """
    _require_upper_order(order)

    def f(theta: float) -> float:
        return critical_angle_residual(order, theta)

    grid = geometric_grid(_SCAN_EDGE, math.pi - _SCAN_EDGE, 160)
    lo, hi = first_bracket(f, grid)
    if lo == hi:
        return lo
    root = bisect_root(f, lo, hi, tol=1e-12)
    if not (0.0 < root < math.pi):
        raise SolverFailure(f"critical angle {root} escaped (0, pi)")
    return root


def max_boundary_imag(order: Order) -> float:
    """Height M(alpha) = sup Im over D(alpha), for 1/2 <= alpha < 1.

    M(1/2) = pi/2; above 1/2 the supremum is attained at the critical
    angle theta_a and equals peak_expr(theta_a) / (2 c).  Below 1/2 the
    domain is unbounded vertically and the quantity is undefined.
    """
    if order.alpha == 0.5:
        return 0.5 * math.pi
    if not (0.5 < order.alpha < 1.0):
        raise DomainError("max_boundary_imag needs 1/2 <= alpha < 1")
    theta = critical_angle(order)
    return peak_expr(order, theta) / (2.0 * order.c)


def turning_angle_inverse(order: Order, y: float) -> float:
    """Unique theta in (0, pi] with turning_angle(theta) = y.

    Valid for y in ((1-alpha) pi + 1e-9, pi]; the lower bracket endpoint
    is pushed toward 0 until the turning angle drops below y (it converges
    to (1-alpha) pi at rate theta^min(beta, 1)).
    """
    if not (0.0 < order.alpha < 1.0):
        raise DomainError("turning_angle_inverse needs 0 < alpha < 1")
    lo_limit = (1.0 - order.alpha) * math.pi
    if not (lo_limit + 1e-9 < y <= math.pi):
        raise DomainError(
            f"target {y} outside the turning range ((1-alpha) pi + 1e-9, pi]"
        )
    if y == math.pi:
        return math.pi
    lo = 1e-6
    while turning_angle(order, lo) >= y:
        lo *= 1e-2
        if lo < 1e-280:
            raise SolverFailure("failed to bracket the turning angle from below")
    return bisect_root(lambda t: turning_angle(order, t) - y, lo, math.pi, tol=1e-12)


def _reduce_direction(t: float) -> float:
    """Fold t into [0, pi] using 2 pi periodicity and conjugation symmetry."""
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    t = math.fmod(abs(t), 2.0 * math.pi)
    if t > math.pi:
        t = 2.0 * math.pi - t
    return t


def directional_infimum(order: Order, t: float) -> InfimumResult:
    """Q(t) = inf over D(alpha) of Re(e^{it} w), as an InfimumResult.

    Case structure (t reduced to [0, pi]):
      alpha = 0:        1/2 at t = 0, unbounded below otherwise;
      0 < alpha < 1/2:  interior-critical for t < alpha pi, the borderline
                        value cos(alpha pi)/(2 alpha - 1) at t = alpha pi,
                        unbounded below past it;
      alpha = 1/2:      interior-critical for t < pi/2, borderline -pi/2 at
                        t = pi/2, unbounded below past it;
      alpha > 1/2:      interior-critical for t < alpha pi and the closed
                        form cos(t)/(2 alpha - 1) on [alpha pi, pi].

    In the interior-critical case the infimum is attained at the boundary
    parameter theta0 solving turning_angle(theta0) = pi - t and equals
    Re(e^{i (t - theta0)} k_alpha(e^{i theta0})).
    """
    a = order.alpha
    t_red = _reduce_direction(t)
    if a == 0.0:
        if t_red == 0.0:
            return InfimumResult(a, t, 0.5, "closed-form")
        return InfimumResult(a, t, -math.inf, "unbounded-below")
    boundary_t = a * math.pi
    if t_red < boundary_t:
        theta0 = turning_angle_inverse(order, math.pi - t_red)
        value = (cmath.exp(1j * (t_red - theta0)) * k_alpha(order, cmath.exp(1j * theta0))).real
        return InfimumResult(a, t, value, "interior-critical", theta0)
    if a > 0.5:
        if t_red > math.pi:  # unreachable after reduction; kept for clarity
            raise SolverFailure("direction reduction failed")
        return InfimumResult(a, t, math.cos(t_red) / order.gamma, "closed-form")
    if t_red == boundary_t:
        if a == 0.5:
            return InfimumResult(a, t, -0.5 * math.pi, "borderline")
        return InfimumResult(a, t, math.cos(boundary_t) / order.gamma, "borderline")
    return InfimumResult(a, t, -math.inf, "unbounded-below")
