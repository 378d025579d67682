"""Command line front end.

Every subcommand prints a deterministic report (JSON by default, CSV for
boundary tables) with floats rendered at 17 significant digits, so two
runs with the same inputs are byte identical.  Exit status: 0 on
success, 1 when a verification run finds a violation, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .boundary import asymptote, sample_boundary
from .criteria import counterexample_check
from .errors import ConvergenceError, DomainError, SingularInputError
from .extremal import Order, convexity_transform, h_alpha, h_alpha_prime, k_alpha
from .herglotz import starlike_average_sweep, subordination_sweep
from .solver import critical_angle, directional_infimum, max_boundary_imag
from .verify import verify_all

_DEFAULT_TRIALS = 200


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def render_json(obj) -> str:
    """Serialize with 17-significant-digit floats, 2-space indent."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if math.isinf(obj) or math.isnan(obj):
            raise ValueError("non-finite float reached the JSON renderer")
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, complex):
        return render_json({"re": obj.real, "im": obj.imag})
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {render_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj).__name__}")


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' (or 'a+bj', bare reals, bare imaginaries)."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}") from exc


def _env_trials() -> int:
    raw = os.environ.get("KORDER_TRIALS")
    if raw is None:
        return _DEFAULT_TRIALS
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"KORDER_TRIALS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise DomainError("KORDER_TRIALS must be >= 1")
    return value


def _cmd_eval(args) -> int:
    order = Order(args.alpha)
    z = args.z
    out = {
        "alpha": order.alpha,
        "z": z,
        "k": k_alpha(order, z),
        "h": h_alpha(order, z),
        "h_prime": h_alpha_prime(order, z),
        "convexity_transform": convexity_transform(order, z),
    }
    print(render_json(out))
    return 0


def _cmd_boundary(args) -> int:
    order = Order(args.alpha)
    samples = sample_boundary(order, args.samples, theta_min=args.theta_min)
    if args.format == "json":
        rows = [
            {
                "theta": s.theta,
                "u": s.point.real,
                "v": s.point.imag,
                "phi": s.turning,
            }
            for s in samples
        ]
        out: dict = {"alpha": order.alpha, "samples": rows}
        if 0.0 < order.alpha < 0.5:
            spec = asymptote(order)
            out["asymptote"] = {"slope": spec.slope, "anchor": spec.anchor}
        print(render_json(out))
        return 0
    lines = ["theta,u,v,phi"]
    for s in samples:
        lines.append(
            f"{_fmt(s.theta)},{_fmt(s.point.real)},{_fmt(s.point.imag)},{_fmt(s.turning)}"
        )
    print("\n".join(lines))
    return 0


def _cmd_extremal_m(args) -> int:
    order = Order(args.alpha)
    if order.alpha == 0.5:
        out = {"alpha": order.alpha, "theta_alpha": None, "M": 0.5 * math.pi}
    else:
        theta = critical_angle(order)
        out = {"alpha": order.alpha, "theta_alpha": theta, "M": max_boundary_imag(order)}
    print(render_json(out))
    return 0


def _cmd_q(args) -> int:
    order = Order(args.alpha)
    result = directional_infimum(order, args.t)
    out = {
        "alpha": result.alpha,
        "t": result.t,
        "value": "-inf" if result.value == -math.inf else result.value,
        "case": result.case,
        "theta0": result.theta0,
    }
    print(render_json(out))
    return 0


def _cmd_subcheck(args) -> int:
    trials = args.trials if args.trials is not None else _env_trials()
    rep = subordination_sweep(args.alpha, seed=args.seed, trials=trials)
    out = {
        "alpha": rep.alpha,
        "seed": rep.seed,
        "trials": rep.trials,
        "points_checked": rep.n_checked,
        "violations": [
            {"trial": v.trial, "z": v.z, "value": v.value, "detail": v.detail}
            for v in rep.violations
        ],
        "pass": rep.ok,
    }
    print(render_json(out))
    return 0 if rep.ok else 1


def _cmd_starlike_avg(args) -> int:
    pairs = args.pairs if args.pairs is not None else max(1, _env_trials() // 2)
    rep = starlike_average_sweep(args.alpha, seed=args.seed, n_pairs=pairs)
    out = {
        "alpha": rep.alpha,
        "seed": rep.seed,
        "pairs": rep.n_pairs,
        "min_re_star": min(rep.minima),
        "tolerance": rep.tol,
        "pass": rep.ok,
    }
    print(render_json(out))
    return 0 if rep.ok else 1


def _cmd_counterexample(args) -> int:
    rep = counterexample_check()
    out = {
        "coeff_sum": rep.coeff_sum,
        "coeff_sum_convex": rep.coeff_sum_convex,
        "fixed_point": rep.fixed_point,
        "fixed_point_residual": rep.fixed_point_residual,
        "derivative_at_fixed_point": rep.derivative_at_fixed_point,
        "unit_derivative_roots": list(rep.unit_derivative_roots),
        "subordinate": rep.subordinate,
    }
    print(render_json(out))
    return 0


def _cmd_verify_paper(args) -> int:
    trials = args.trials if args.trials is not None else _env_trials()
    report = verify_all(seed=args.seed, trials=trials)
    print(render_json(report.to_dict()))
    return 0 if report.overall else 1


def _alpha_arg(parser, **kwargs) -> None:
    parser.add_argument("--alpha", type=float, required=True, help="convexity order in [0, 1)", **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="korder",
        description="extremal geometry of convex maps of a given order",
    )
    parser.add_argument("--version", action="version", version=f"korder {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the extremal map and friends at one point")
    _alpha_arg(p)
    p.add_argument("--z", type=parse_complex, required=True, help="point in the unit disk, e.g. '0.3+0.4i'")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("boundary", help="tabulate the image boundary curve")
    _alpha_arg(p)
    p.add_argument("--samples", type=int, default=256, help="number of samples")
    p.add_argument("--theta-min", type=float, default=1e-3, dest="theta_min", help="smallest angle sampled")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_boundary)

    p = sub.add_parser("extremal-m", help="critical angle and peak boundary height")
    _alpha_arg(p)
    p.set_defaults(func=_cmd_extremal_m)

    p = sub.add_parser("q", help="directional infimum of the extremal image")
    _alpha_arg(p)
    p.add_argument("--t", type=float, required=True, help="direction angle in radians")
    p.set_defaults(func=_cmd_q)

    p = sub.add_parser("subcheck", help="randomized subordination sweep")
    _alpha_arg(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=_cmd_subcheck)

    p = sub.add_parser("starlike-avg", help="randomized starlike-average sweep")
    p.add_argument("--alpha", type=float, default=0.6, help="convexity order in (1/2, 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=None)
    p.set_defaults(func=_cmd_starlike_avg)

    p = sub.add_parser("counterexample", help="quintic that is convex but fails subordination")
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("verify-paper", help="run every named verification check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (DomainError, SingularInputError, ConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
