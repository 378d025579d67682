"""Verification harness: every reproducible numeric claim as a named check.

verify_all re-derives the golden constants (the scan constant rho, the
residual signs, the monotonicity bound, the height bounds, the Kustner
agreement) and runs the randomized sweeps (subordination, growth,
starlike averages) plus the counterexample endpoints.  Checks are
reported in deterministic (name-sorted) order and two runs with the same
seed produce identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from . import criteria, herglotz, solver
from .boundary import v_half
from .extremal import Order, kustner_inf, kustner_numeric_min
from .rootfind import geometric_grid

#: every check name verify_all must emit, in report (sorted) order
REQUIRED_CHECKS = (
    "F_signs",
    "G_monotone",
    "H_monotone",
    "M_35_bound",
    "M_half",
    "counterexample",
    "growth_sweep",
    "kustner_consistency",
    "rho_value",
    "starlike_avg",
    "subordination_sweep",
)

_SWEEP_ALPHAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


@dataclass(frozen=True)
class Check:
    """One named verification item."""

    name: str
    measured: Union[float, str]
    expected: str
    tolerance: Optional[float]
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    trials: int
    checks: tuple[Check, ...]
    overall: bool

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "overall": self.overall,
            "checks": [
                {
                    "name": c.name,
                    "measured": c.measured,
                    "expected": c.expected,
                    "tolerance": c.tolerance,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
        }


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _check_rho() -> Check:
    rho = 5.0 * (2.0 ** (1.0 / 5.0) - 1.0)
    return Check(
        "rho_value", rho, "[0.743491, 0.743492)", None, 0.743491 <= rho < 0.743492
    )


def _check_f_signs() -> Check:
    order = Order(0.6)
    f_lo = solver.critical_angle_residual(order, 0.11)
    f_hi = solver.critical_angle_residual(order, 0.114)
    ok = (0.0050 <= f_lo < 0.0051) and (-0.0011 < f_hi <= -0.0010)
    return Check(
        "F_signs",
        f"F(0.11)={_fmt(f_lo)}, F(0.114)={_fmt(f_hi)}",
        "[0.0050, 0.0051) and (-0.0011, -0.0010]",
        None,
        ok,
    )


def _check_g_monotone() -> Check:
    order = Order(0.6)
    t0, t1 = 0.11, 0.114
    bound = (
        -math.sin(t1) / solver.cot_sum(order, t1)
        - solver.cot_sum_deriv(order, t1) * math.cos(t1) / solver.cot_sum(order, t0) ** 2
        - math.cos(t0)
    )
    return Check(
        "G_monotone", bound, "[0.326, 0.327)", None, 0.326 <= bound < 0.327
    )


def _check_m_35_bound() -> Check:
    order = Order(0.6)
    m = solver.max_boundary_imag(order)
    cap = 5.0 * solver.peak_expr(order, 0.114)
    rho = 5.0 * (2.0 ** (1.0 / 5.0) - 1.0)
    ok = (m < cap) and (0.743487 <= cap < 0.743488) and (m < rho)
    return Check(
        "M_35_bound",
        f"M={_fmt(m)}, cap={_fmt(cap)}",
        "M < cap, cap in [0.743487, 0.743488), M < rho",
        None,
        ok,
    )


def _check_h_monotone() -> Check:
    order = Order(0.6)  # c = 0.1
    hi_edge = 4.0 * math.pi / 9.0
    min_h = math.inf
    max_dh = -math.inf
    for theta in geometric_grid(1e-6, hi_edge - 1e-9, 512):
        min_h = min(min_h, solver.cot_sum(order, theta))
        max_dh = max(max_dh, solver.cot_sum_deriv(order, theta))
    ok = min_h > 0.0 and max_dh < 0.0
    return Check(
        "H_monotone",
        f"min_H={_fmt(min_h)}, max_dH={_fmt(max_dh)}",
        "H > 0 and H' < 0 on (0, 4 pi/9)",
        None,
        ok,
    )


def _check_m_half() -> Check:
    sup = max(v_half(t) for t in geometric_grid(1e-6, math.pi, 10_000))
    half_pi = 0.5 * math.pi
    ok = abs(sup - half_pi) <= 1e-4 and sup <= half_pi + 1e-12
    return Check("M_half", sup, "pi/2 within 1e-4, never above", 1e-4, ok)


def _check_kustner() -> Check:
    worst = 0.0
    for alpha in (0.25, 0.5, 0.75):
        order = Order(alpha)
        dev = abs(kustner_numeric_min(order) - kustner_inf(order))
        worst = max(worst, dev)
    return Check(
        "kustner_consistency", worst, "numeric min within 1e-5", 1e-5, worst <= 1e-5
    )


def _check_subordination(seed: int, trials: int) -> Check:
    bad = 0
    checked = 0
    for alpha in _SWEEP_ALPHAS:
        rep = herglotz.subordination_sweep(alpha, seed=seed, trials=trials)
        bad += len(rep.violations)
        checked += rep.n_checked
    return Check(
        "subordination_sweep",
        f"{bad} violations / {checked} points",
        "0 violations",
        1e-6,
        bad == 0,
    )


def _check_growth(seed: int, trials: int) -> Check:
    bad = 0
    checked = 0
    for alpha in _SWEEP_ALPHAS:
        rep = herglotz.growth_sweep(alpha, seed=seed, trials=trials)
        bad += len(rep.violations)
        checked += rep.n_checked
    return Check(
        "growth_sweep",
        f"{bad} violations / {checked} points",
        "0 violations",
        1e-9,
        bad == 0,
    )


def _check_starlike(seed: int, trials: int) -> Check:
    rep = herglotz.starlike_average_sweep(0.6, seed=seed, n_pairs=max(1, trials // 2))
    worst = min(rep.minima)
    return Check(
        "starlike_avg", worst, "min Re(z h'/h) >= -1e-9", 1e-9, rep.ok
    )


def _check_counterexample() -> Check:
    rep = criteria.counterexample_check()
    root = 1j * math.sqrt(0.3)
    ok = (
        rep.coeff_sum_convex
        and abs(rep.coeff_sum - 0.59) <= 1e-15
        and rep.fixed_point_residual <= 1e-15
        and abs(rep.derivative_at_fixed_point - 1.01) <= 1e-12
        and not rep.subordinate
        and abs(rep.unit_derivative_roots[1] - root) <= 1e-15
        and abs(rep.unit_derivative_roots[0] + root) <= 1e-15
        and all(abs(r - rep.fixed_point) > 1e-3 for r in rep.unit_derivative_roots)
    )
    return Check(
        "counterexample",
        rep.coeff_sum,
        "convex quintic whose ratio is not subordinate",
        None,
        ok,
    )


def verify_all(seed: int = 0, trials: int = 200) -> VerificationReport:
    """Run every named check; statistical ones use `seed` and `trials`."""
    if seed < 0:
        raise ValueError("seed must be >= 0")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    checks = [
        _check_rho(),
        _check_f_signs(),
        _check_g_monotone(),
        _check_m_35_bound(),
        _check_h_monotone(),
        _check_m_half(),
        _check_kustner(),
        _check_subordination(seed, trials),
        _check_growth(seed, trials),
        _check_starlike(seed, trials),
        _check_counterexample(),
    ]
    checks.sort(key=lambda c: c.name)
    names = tuple(c.name for c in checks)
    if names != REQUIRED_CHECKS:
        raise RuntimeError(f"check inventory drifted: {names}")
    return VerificationReport(seed, trials, tuple(checks), all(c.passed for c in checks))
