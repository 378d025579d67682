#!/usr/bin/env python3
"""Print a table of the extremal quantities across orders.

Columns: alpha, the Kustner convexity infimum, the critical angle and
peak height M(alpha) where they exist (alpha >= 1/2), and the asymptote
slope/anchor where the image domain is a slanted half plane-like region
(0 < alpha < 1/2).
"""

import argparse
import math

from korder import Order, asymptote, critical_angle, kustner_inf, max_boundary_imag


def row(alpha: float) -> str:
    order = Order(alpha)
    kust = f"{kustner_inf(order):+.12f}" if alpha > 0 else "   undefined  "
    if alpha > 0.5:
        theta = f"{critical_angle(order):.12f}"
        m = f"{max_boundary_imag(order):.12f}"
    elif alpha == 0.5:
        theta, m = "      --      ", f"{0.5 * math.pi:.12f}"
    else:
        theta, m = "      --      ", "   unbounded  "
    if 0.0 < alpha < 0.5:
        spec = asymptote(order)
        asy = f"{spec.slope:+.6f} / {spec.anchor:+.6f}"
    else:
        asy = "--"
    return f"{alpha:5.2f}  {kust}  {theta}  {m}  {asy}"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=19, help="orders sampled at k/(steps+1)")
    args = parser.parse_args()
    if args.steps < 1:
        parser.error("--steps must be >= 1")

    print("alpha  kustner_inf      theta_alpha     M(alpha)        asymptote slope/anchor")
    for k in range(1, args.steps + 1):
        print(row(k / (args.steps + 1)))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
