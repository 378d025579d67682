"""Randomized members of the convex order-alpha family.

Every convex function of order alpha with f(0) = 0, f'(0) = 1 arises from
a probability measure mu on the circle through

    f'(z) = prod_j (1 - z e^{-i t_j})^(-2 (1-alpha) lambda_j)

when mu is atomic with atoms t_j and weights lambda_j.  This module draws
such atomic measures at random, evaluates f' in closed form and f by
Gauss-Legendre quadrature along radial segments, and provides the
property checks (curvature order, subordination of f/z, growth bounds,
covering radius, imaginary-part bounds, starlikeness of averages) that the
verification harness samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .boundary import contains
from .errors import DomainError
from .extremal import Order, h_alpha, k_alpha

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)
_SEGMENT_LEN = 0.1       # max straight-segment length per quadrature panel
_COVER_RADII = (0.9, 0.99, 0.999)

TWO_PI = 2.0 * math.pi


def _rng(keys: Sequence[int]) -> np.random.Generator:
    """Counter-based generator: per-key independent streams, so sweeps are
    reproducible in any evaluation order."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(tuple(keys))))


@dataclass(frozen=True)
class PolarGrid:
    """Evaluation grid: n_radii circles up to r_max, n_angles rays."""

    n_radii: int = 36
    n_angles: int = 72
    r_max: float = 0.999

    def __post_init__(self) -> None:
        if self.n_radii < 1 or self.n_angles < 1:
            raise DomainError("grid needs at least one radius and one angle")
        if not (0.0 < self.r_max < 1.0):
            raise DomainError("grid radius must satisfy 0 < r_max < 1")

    def radii(self) -> np.ndarray:
        return np.linspace(self.r_max / self.n_radii, self.r_max, self.n_radii)

    def angles(self) -> np.ndarray:
        return np.linspace(0.0, TWO_PI, self.n_angles, endpoint=False)

    def points(self) -> np.ndarray:
        """All grid points as a flat complex array (never includes 0)."""
        return (self.radii()[:, None] * np.exp(1j * self.angles())[None, :]).ravel()


@dataclass(frozen=True)
class AtomicMeasure:
    """Probability measure sum lambda_j delta(t_j) on the circle.

    Weights must be positive and sum to 1 (1e-12 slack); atoms must be
    pairwise distinct.  odd=True asserts closure under t -> t + pi with
    matching weights, which makes the generated function odd.
    """

    angles: tuple[float, ...]
    weights: tuple[float, ...]
    odd: bool = False

    def __post_init__(self) -> None:
        if len(self.angles) != len(self.weights) or not self.angles:
            raise DomainError("need equally many atoms and weights, at least one")
        if any(w <= 0.0 for w in self.weights):
            raise DomainError("weights must be positive")
        if abs(sum(self.weights) - 1.0) > 1e-12:
            raise DomainError("weights must sum to 1")
        folded = [math.fmod(t, TWO_PI) + (TWO_PI if t < 0 else 0.0) for t in self.angles]
        if len({round(t, 12) for t in folded}) != len(folded):
            raise DomainError("atoms must be pairwise distinct")
        if self.odd and not self._is_shift_symmetric():
            raise DomainError("odd measure must be invariant under t -> t + pi")

    def _is_shift_symmetric(self) -> bool:
        pairs = {(round(math.fmod(t, TWO_PI) + (TWO_PI if math.fmod(t, TWO_PI) < 0 else 0), 9), round(w, 12))
                 for t, w in zip(self.angles, self.weights)}
        for t, w in zip(self.angles, self.weights):
            shifted = math.fmod(t + math.pi, TWO_PI)
            if shifted < 0:
                shifted += TWO_PI
            if (round(shifted, 9), round(w, 12)) not in pairs:
                return False
        return True


@dataclass(frozen=True)
class GeneratedFunction:
    """Convex function of order alpha generated by an atomic measure."""

    order: Order
    measure: AtomicMeasure
    _phases: np.ndarray = field(init=False, repr=False, compare=False)
    _exponents: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        t = np.asarray(self.measure.angles, dtype=float)
        lam = np.asarray(self.measure.weights, dtype=float)
        object.__setattr__(self, "_phases", np.exp(-1j * t))
        object.__setattr__(self, "_exponents", -self.order.beta * lam)

    def curvature_ratio(self, z):
        """f''(z)/f'(z) = beta sum_j lambda_j e^{-i t_j} / (1 - z e^{-i t_j})."""
        zz = np.asarray(z, dtype=complex)
        num = self._phases * (-self._exponents)  # beta * lambda_j * e^{-i t_j}
        out = np.sum(num / (1.0 - zz[..., None] * self._phases), axis=-1)
        return complex(out) if np.ndim(z) == 0 else out


def single_atom(order: Order, t: float = 0.0) -> GeneratedFunction:
    """The one-atom measure at angle t; t = 0 reproduces k_alpha."""
    return GeneratedFunction(order, AtomicMeasure((float(t),), (1.0,)))


def f_prime(gf: GeneratedFunction, z):
    """f'(z) as a product of principal-branch powers; |z| < 1 required.

    Accepts a scalar or any numpy-broadcastable array of points.
    """
    zz = np.asarray(z, dtype=complex)
    if np.any(np.abs(zz) >= 1.0):
        raise DomainError("f_prime needs |z| < 1")
    # principal logs are safe: Re(1 - z e^{-it}) > 0 fails only for |z| >= 1
    logs = np.log(1.0 - zz[..., None] * gf._phases)
    out = np.exp(np.sum(logs * gf._exponents, axis=-1))
    return complex(out) if np.ndim(z) == 0 else out


def f_value_many(gf: GeneratedFunction, zs) -> np.ndarray:
    """f(z) = integral of f' over the straight segment [0, z], elementwise.

    Each segment is split into panels of length <= 0.1, each integrated
    with 64-node Gauss-Legendre; the composite error is far below 1e-12
    because f' is analytic on a neighborhood of the path.
    """
    zs = np.asarray(zs, dtype=complex)
    flat = zs.ravel()
    if np.any(np.abs(flat) >= 1.0):
        raise DomainError("f_value needs |z| < 1")
    out = np.zeros_like(flat)
    panels = np.maximum(1, np.ceil(np.abs(flat) / _SEGMENT_LEN).astype(int))
    for n in np.unique(panels):
        sel = panels == n
        z_sel = flat[sel]
        # panel k of [0, 1]: (k + (x+1)/2)/n for GL nodes x
        frac = (np.arange(n)[:, None] + 0.5 * (_GL_NODES[None, :] + 1.0)) / n
        pts = z_sel[:, None, None] * frac[None, :, :]
        vals = f_prime(gf, pts)
        out[sel] = np.sum(vals * _GL_WEIGHTS[None, None, :], axis=(1, 2)) * (
            z_sel / (2.0 * n)
        )
    return out.reshape(zs.shape)


def f_value(gf: GeneratedFunction, z: complex) -> complex:
    """Scalar wrapper of f_value_many."""
    return complex(f_value_many(gf, np.asarray([z]))[0])


def random_measure(seed, m: int, odd: bool = False) -> AtomicMeasure:
    """Draw m atoms (2m when odd) with uniform angles and normalized
    exponential weights; `seed` may be an int or a sequence of ints."""
    if m < 1:
        raise DomainError("need at least one atom")
    keys = [int(seed)] if np.ndim(seed) == 0 else [int(s) for s in seed]
    rng = _rng(keys)
    angles = rng.uniform(0.0, TWO_PI, size=m)
    weights = rng.standard_exponential(size=m)
    weights = weights / weights.sum()
    if odd:
        shifted = np.mod(angles + math.pi, TWO_PI)
        angles = np.concatenate([angles, shifted])
        weights = 0.5 * np.concatenate([weights, weights])
    return AtomicMeasure(tuple(float(t) for t in angles), tuple(float(w) for w in weights), odd)


@dataclass(frozen=True)
class CheckVerdict:
    """Outcome of a single geometric check with its extremal witness."""

    passed: bool
    measured: float
    witness: Optional[complex] = None


def convex_order_estimate(gf, grid: PolarGrid = PolarGrid()) -> float:
    """min over the grid of Re(1 + z f''/f'); approaches the true order
    from above as the grid refines.  Accepts anything exposing
    curvature_ratio (generated functions, polynomial test functions)."""
    pts = grid.points()
    return float(np.min(np.real(1.0 + pts * gf.curvature_ratio(pts))))


def min_re_star(
    fs: Sequence[GeneratedFunction],
    weights: Sequence[float],
    grid: PolarGrid = PolarGrid(),
) -> float:
    """min over the grid of Re(z g'/g) for g = sum w_i f_i.

    Positivity of this quantity over all grids certifies starlikeness of
    the convex combination; the grid excludes z = 0 by construction.
    """
    if len(fs) != len(weights) or not fs:
        raise DomainError("need equally many functions and weights")
    if any(w <= 0 for w in weights) or abs(sum(weights) - 1.0) > 1e-12:
        raise DomainError("weights must be positive and sum to 1")
    pts = grid.points()
    g = np.zeros_like(pts)
    gp = np.zeros_like(pts)
    for f, w in zip(fs, weights):
        g = g + w * f_value_many(f, pts)
        gp = gp + w * f_prime(f, pts)
    if np.any(g == 0.0):
        raise DomainError("combination vanishes on the grid; ratio undefined")
    return float(np.min(np.real(pts * gp / g)))


def covering_radius_check(
    gf: GeneratedFunction, rho: float, n_angles: int = 720, tol: float = 1e-9
) -> CheckVerdict:
    """Check that the image of each disk |z| <= r covers the disk of radius
    rho*r, at r in {0.9, 0.99, 0.999}: min_theta |f(r e^{i theta})| >= rho r.

    measured is the worst ratio |f| / (rho r); pass means >= 1 - tol.
    """
    if not (0.0 < rho <= 1.0):
        raise DomainError("rho must lie in (0, 1]")
    angles = np.linspace(0.0, TWO_PI, n_angles, endpoint=False)
    worst = math.inf
    witness = None
    for r in _COVER_RADII:
        zs = r * np.exp(1j * angles)
        ratio = np.abs(f_value_many(gf, zs)) / (rho * r)
        i = int(np.argmin(ratio))
        if ratio[i] < worst:
            worst = float(ratio[i])
            witness = complex(zs[i])
    return CheckVerdict(worst >= 1.0 - tol, worst, witness)


def im_ratio_bound_check(
    gf: GeneratedFunction, bound: float, grid: PolarGrid = PolarGrid()
) -> CheckVerdict:
    """Check sup |Im(f(z)/z)| <= bound on the grid; measured is the max."""
    if bound <= 0.0:
        raise DomainError("bound must be positive")
    pts = grid.points()
    vals = np.abs(np.imag(f_value_many(gf, pts) / pts))
    i = int(np.argmax(vals))
    return CheckVerdict(float(vals[i]) <= bound, float(vals[i]), complex(pts[i]))


# ----------------------------------------------------------------------
# randomized sweeps


@dataclass(frozen=True)
class Violation:
    """One failed point inside a randomized sweep."""

    trial: int
    z: complex
    value: complex
    detail: str


@dataclass(frozen=True)
class SweepReport:
    alpha: float
    seed: int
    trials: int
    n_checked: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _alpha_key(alpha: float) -> int:
    return int(round(alpha * 10**9))


def _random_points(rng: np.random.Generator, n: int, r_max: float) -> np.ndarray:
    radii = r_max * np.sqrt(rng.uniform(0.0, 1.0, size=n))
    angles = rng.uniform(0.0, TWO_PI, size=n)
    return radii * np.exp(1j * angles)


def _random_gf(order: Order, rng: np.random.Generator, odd: bool = False) -> GeneratedFunction:
    m = int(rng.integers(1, 5))
    angles = rng.uniform(0.0, TWO_PI, size=m)
    weights = rng.standard_exponential(size=m)
    weights = weights / weights.sum()
    if odd:
        angles = np.concatenate([angles, np.mod(angles + math.pi, TWO_PI)])
        weights = 0.5 * np.concatenate([weights, weights])
    measure = AtomicMeasure(
        tuple(float(t) for t in angles), tuple(float(w) for w in weights), odd
    )
    return GeneratedFunction(order, measure)


def _require_counts(trials: int, per_trial: int, tol: float) -> None:
    if trials < 1 or per_trial < 1:
        raise DomainError("sweep sizes must be >= 1")
    if not tol > 0.0:
        raise DomainError("tolerance must be positive")


def subordination_sweep(
    alpha: float,
    seed: int = 0,
    trials: int = 200,
    points_per_trial: int = 100,
    tol: float = 1e-6,
) -> SweepReport:
    """Draw random generated functions and check that f(z)/z never leaves
    D(alpha): membership must be inside or boundary-band at every random
    point with |z| <= 0.99."""
    order = Order(alpha)
    _require_counts(trials, points_per_trial, tol)
    violations: list[Violation] = []
    checked = 0
    for trial in range(trials):
        rng = _rng([seed, _alpha_key(alpha), trial])
        gf = _random_gf(order, rng)
        zs = _random_points(rng, points_per_trial, 0.99)
        ws = f_value_many(gf, zs) / zs
        for z, w in zip(zs, ws):
            checked += 1
            verdict = contains(order, complex(w), tol)
            if verdict == "outside":
                violations.append(Violation(trial, complex(z), complex(w), "outside"))
    return SweepReport(alpha, seed, trials, checked, tuple(violations))


def growth_sweep(
    alpha: float,
    seed: int = 0,
    trials: int = 200,
    n_angles: int = 64,
    tol: float = 1e-9,
) -> SweepReport:
    """Check the growth bounds on circles |z| = r in {0.5, 0.9, 0.99}:

        h_alpha(-r) <= Re(f(z)/z) <= h_alpha(r)
        -k_alpha(-r) <= |f(z)|    <= k_alpha(r)

    each with additive slack tol for the quadrature."""
    order = Order(alpha)
    _require_counts(trials, n_angles, tol)
    violations: list[Violation] = []
    checked = 0
    angles = np.linspace(0.0, TWO_PI, n_angles, endpoint=False)
    radii = (0.5, 0.9, 0.99)
    env = {
        r: (
            h_alpha(order, -r).real,
            h_alpha(order, r).real,
            -k_alpha(order, -r).real,
            k_alpha(order, r).real,
        )
        for r in radii
    }
    for trial in range(trials):
        rng = _rng([seed, _alpha_key(alpha), trial])
        gf = _random_gf(order, rng)
        for r in radii:
            lo_re, hi_re, lo_abs, hi_abs = env[r]
            zs = r * np.exp(1j * angles)
            fv = f_value_many(gf, zs)
            re_ratio = np.real(fv / zs)
            mags = np.abs(fv)
            checked += len(zs)
            for z, rr, mg in zip(zs, re_ratio, mags):
                if rr < lo_re - tol or rr > hi_re + tol:
                    violations.append(Violation(trial, complex(z), complex(rr), "re-range"))
                if mg < lo_abs - tol or mg > hi_abs + tol:
                    violations.append(Violation(trial, complex(z), complex(mg), "abs-range"))
    return SweepReport(alpha, seed, trials, checked, tuple(violations))


@dataclass(frozen=True)
class StarlikeReport:
    alpha: float
    seed: int
    n_pairs: int
    minima: tuple[float, ...]
    tol: float

    @property
    def ok(self) -> bool:
        return all(m >= -self.tol for m in self.minima)


def starlike_average_sweep(
    alpha: float = 0.6,
    seed: int = 0,
    n_pairs: int = 100,
    grid: PolarGrid = PolarGrid(n_radii=32, n_angles=32, r_max=0.999),
    tol: float = 1e-9,
) -> StarlikeReport:
    """For random pairs (f, g) of generated functions of order alpha >= 1/2
    the average (f+g)/2 must be starlike: min Re(z h'/h) >= -tol."""
    order = Order(alpha)
    _require_counts(n_pairs, 1, tol)
    minima = []
    for pair in range(n_pairs):
        f = _random_gf(order, _rng([seed, _alpha_key(alpha), pair, 0]))
        g = _random_gf(order, _rng([seed, _alpha_key(alpha), pair, 1]))
        minima.append(min_re_star([f, g], [0.5, 0.5], grid))
    return StarlikeReport(alpha, seed, n_pairs, tuple(minima), tol)
