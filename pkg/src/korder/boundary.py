"""Geometry of the image domain of h_alpha.

h_alpha maps the unit disk onto a convex domain D(alpha) that is symmetric
about the real axis, contains h_alpha(0) = 1, and is bounded exactly when
alpha > 1/2.  Its boundary is the curve theta -> h_alpha(e^{i theta}); this
module evaluates that curve, its explicit real parametrization, the tangent
turning angle, the asymptotes of the unbounded domains, and a membership
oracle built on star-shapedness of the boundary about the point 1.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError, SingularInputError
from .extremal import Order, h_alpha, h_alpha_prime, k_alpha
from .rootfind import geometric_grid

#: truncation angle below which the unbounded boundary branches are
#: represented by their asymptote / strip instead of curve samples
SECTOR_THETA_MIN = 1e-6

Membership = Literal["inside", "outside", "boundary-band"]


@dataclass(frozen=True)
class BoundarySample:
    """One boundary point of D(alpha).

    theta: parameter angle in (0, pi] (0 allowed when the domain closes),
    point: h_alpha(e^{i theta}),
    turning: tangent direction angle of the boundary curve at the point.
    """

    theta: float
    point: complex
    turning: float


@dataclass(frozen=True)
class AsymptoteSpec:
    """The upper asymptote v = slope*(u - anchor) of an unbounded D(alpha),
    0 < alpha < 1/2; the lower one is its mirror image."""

    slope: float
    anchor: float


def boundary_uv(order: Order, theta: float) -> tuple[float, float]:
    """Explicit real coordinates (u, v) of h_alpha(e^{i theta}).

    u = (-1/g)[(2 sin(t/2))^g cos(-t + (t-pi) g/2) - cos t]
    v = (-1/g)[(2 sin(t/2))^g sin(-t + (t-pi) g/2) + sin t],  g = gamma.

    Defined for gamma != 0 and theta in (0, 2 pi).  Serves as the
    independent oracle for the complex evaluation path.
    """
    g = order.gamma
    if g == 0.0:
        raise DomainError("boundary_uv needs gamma != 0; use v_half at alpha = 1/2")
    if not (0.0 < theta < 2.0 * math.pi):
        raise SingularInputError("boundary_uv needs theta in (0, 2 pi)")
    radius = (2.0 * math.sin(0.5 * theta)) ** g
    ang = -theta + 0.5 * (theta - math.pi) * g
    u = (-1.0 / g) * (radius * math.cos(ang) - math.cos(theta))
    v = (-1.0 / g) * (radius * math.sin(ang) + math.sin(theta))
    return u, v


def v_half(theta: float) -> float:
    """Upper boundary height at order 1/2:
    v(theta) = ((pi - theta)/2) cos(theta) + sin(theta) log(2 sin(theta/2)),
    increasing to pi/2 as theta -> 0+ and vanishing at theta = pi."""
    if not (0.0 < theta <= math.pi):
        raise DomainError("v_half needs theta in (0, pi]")
    return 0.5 * (math.pi - theta) * math.cos(theta) + math.sin(theta) * math.log(
        2.0 * math.sin(0.5 * theta)
    )


def _turning(order: Order, theta: float) -> float:
    """theta + arg h_alpha'(e^{i theta}) with the principal argument.

    On (0, pi] the value lies in ((1-alpha) pi, pi], so the principal
    branch never wraps.  theta = 0 (alpha > 1/2 only) returns the limit.
    """
    if theta == 0.0:
        return (1.0 - order.alpha) * math.pi
    z = cmath.exp(1j * theta)
    return theta + cmath.phase(h_alpha_prime(order, z))


def turning_angle(order: Order, theta: float) -> float:
    """Tangent turning angle of the boundary curve, offset by -pi/2.

    Strictly increasing from (1-alpha) pi (exclusive) to pi on (0, pi];
    its monotonicity is what makes the directional infimum solver work.
    """
    if not (0.0 < order.alpha < 1.0):
        raise DomainError("turning_angle needs 0 < alpha < 1")
    if not (0.0 < theta <= math.pi):
        raise DomainError("turning_angle needs theta in (0, pi]")
    return _turning(order, theta)


def boundary_point(order: Order, theta: float) -> BoundarySample:
    """Boundary sample at parameter theta in (0, 2 pi).

    theta = 0 is admitted only for alpha > 1/2, where the curve closes up
    at the finite point k_alpha(1) = 1/gamma with limiting turning angle
    (1 - alpha) pi.
    """
    if theta == 0.0:
        if order.alpha <= 0.5:
            raise SingularInputError(
                "the boundary escapes to infinity at theta = 0 for alpha <= 1/2"
            )
        return BoundarySample(0.0, k_alpha(order, 1.0), (1.0 - order.alpha) * math.pi)
    if not (0.0 < theta < 2.0 * math.pi):
        raise SingularInputError("boundary_point needs theta in (0, 2 pi)")
    z = cmath.exp(1j * theta)
    return BoundarySample(theta, h_alpha(order, z), _turning(order, theta))


def asymptote(order: Order) -> AsymptoteSpec:
    """Asymptote data for the unbounded image domains, 0 < alpha < 1/2:
    slope cot(pi alpha) > 0, real anchor 1/(2 alpha - 1) < 0."""
    a = order.alpha
    if not (0.0 < a < 0.5):
        raise DomainError("asymptote exists only for 0 < alpha < 1/2")
    return AsymptoteSpec(
        slope=math.cos(math.pi * a) / math.sin(math.pi * a),
        anchor=1.0 / (2.0 * a - 1.0),
    )


def sample_boundary(order: Order, n: int, theta_min: float = 1e-3) -> list[BoundarySample]:
    """n boundary samples with geometrically spaced angles in [theta_min, pi].

    Geometric spacing concentrates samples near theta = 0, where the curve
    has all of its remaining length (unbounded domains) or curvature
    concentration (bounded ones).  theta_min = 0 is admitted only for
    alpha > 1/2 and prepends the closing point, spacing the rest from a
    floor of 1e-9.
    """
    if n < 2:
        raise DomainError("sample_boundary needs n >= 2")
    if theta_min == 0.0:
        if order.alpha <= 0.5:
            raise DomainError("theta_min = 0 needs alpha > 1/2 (closed boundary)")
        thetas = [0.0] + geometric_grid(1e-9, math.pi, n - 1)
    else:
        if not (0.0 < theta_min < 0.5 * math.pi):
            raise DomainError("theta_min must lie in (0, pi/2) or be 0")
        thetas = geometric_grid(theta_min, math.pi, n)
    return [boundary_point(order, t) for t in thetas]


# ----------------------------------------------------------------------
# membership oracle


@dataclass(frozen=True)
class _BoundaryTable:
    """Monotone table theta -> (direction about 1, radius about 1)."""

    thetas: np.ndarray
    directions: np.ndarray
    radii: np.ndarray


def _table_floor(order: Order) -> float:
    """Smallest tabulated angle.

    For alpha <= 1/2 the curve is truncated at SECTOR_THETA_MIN and handed
    over to the asymptote/strip test.  For alpha > 1/2 the boundary closes
    and its radius settles at rate theta^beta, so the floor is pushed down
    to where the remaining radius variation is ~1e-8 (capped to stay well
    inside double range).
    """
    if order.alpha <= 0.5:
        return SECTOR_THETA_MIN
    floor = 10.0 ** (-8.0 / min(order.beta, 1.0))
    return max(floor, 1e-250)


@functools.lru_cache(maxsize=64)
def _boundary_table(order: Order) -> _BoundaryTable:
    n = 4096
    thetas = np.array(geometric_grid(_table_floor(order), math.pi, n))
    pts = np.array([h_alpha(order, cmath.exp(1j * t)) for t in thetas]) - 1.0
    directions = np.angle(pts)
    # direction is increasing in theta (convex boundary, 1 interior);
    # enforce it against float noise so searchsorted stays valid
    directions = np.maximum.accumulate(directions)
    return _BoundaryTable(thetas, directions, np.abs(pts))


def _direction(order: Order, theta: float) -> float:
    return cmath.phase(h_alpha(order, cmath.exp(1j * theta)) - 1.0)


def _boundary_radius(order: Order, direction: float, table: _BoundaryTable) -> float:
    """Distance from 1 to the boundary along the ray with the given
    direction angle in (table.directions[0], pi]."""
    idx = int(np.searchsorted(table.directions, direction))
    if idx >= len(table.thetas):
        return float(table.radii[-1])
    if idx == 0:
        return float(table.radii[0])
    lo, hi = float(table.thetas[idx - 1]), float(table.thetas[idx])
    # bisection on the (monotone) direction angle
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e-12 + 1e-9 * mid:
            break
        if _direction(order, mid) < direction:
            lo = mid
        else:
            hi = mid
    mid = 0.5 * (lo + hi)
    return abs(h_alpha(order, cmath.exp(1j * mid)) - 1.0)


def _classify(signed_gap: float, tol: float) -> Membership:
    """signed_gap < 0 means inside; |signed_gap| < tol is the band."""
    if abs(signed_gap) < tol:
        return "boundary-band"
    return "inside" if signed_gap < 0.0 else "outside"


def contains(order: Order, w: complex, tol: float = 1e-9) -> Membership:
    """Classify w against D(alpha) = h_alpha(unit disk).

    Works radially about the interior star center 1: the distance from 1
    to the boundary along direction arg(w - 1) is found by bisection on
    the monotone direction angle of the boundary curve, and |w - 1| is
    compared against it with a two-sided band of width tol.  Directions
    steeper than the tabulated range (only possible near the unbounded or
    closing ends) fall back to the asymptote line (alpha < 1/2), the strip
    |v| < pi/2 (alpha = 1/2), or the closing radius (alpha > 1/2).
    """
    if not (tol > 0.0):
        raise DomainError("tol must be positive")
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError("w must be finite")
    a = order.alpha
    if a == 0.0:
        # the image domain is the half-plane Re > 1/2
        return _classify(0.5 - w.real, tol)
    if w.imag < 0.0:
        w = w.conjugate()  # the domain is symmetric about the real axis
    if w == 1.0:
        return "inside"
    direction = cmath.phase(w - 1.0)  # in [0, pi]
    table = _boundary_table(order)
    if direction > table.directions[0]:
        radius = _boundary_radius(order, direction, table)
        return _classify(abs(w - 1.0) - radius, tol)
    # beyond the tabulated range
    if a > 0.5:
        closing_radius = 1.0 / order.gamma - 1.0  # k_alpha(1) - 1
        return _classify(abs(w - 1.0) - closing_radius, tol)
    if a == 0.5:
        return _classify(w.imag - 0.5 * math.pi, tol)
    spec = asymptote(order)
    # signed perpendicular distance above the asymptote line
    gap = (w.imag - spec.slope * (w.real - spec.anchor)) / math.hypot(1.0, spec.slope)
    return _classify(gap, tol)
