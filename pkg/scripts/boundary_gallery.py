#!/usr/bin/env python3
"""Dump boundary curves for a range of orders as CSV files.

One file per order, named boundary_alpha_<alpha>.csv, with columns
theta,u,v,phi matching the `korder boundary` subcommand.  Useful for
plotting the family of image domains side by side.
"""

import argparse
import pathlib

from korder import Order, sample_boundary


def write_curve(out_dir: pathlib.Path, alpha: float, samples: int, theta_min: float) -> pathlib.Path:
    order = Order(alpha)
    rows = sample_boundary(order, samples, theta_min=theta_min)
    path = out_dir / f"boundary_alpha_{alpha:.3f}.csv"
    with path.open("w") as fh:
        fh.write("theta,u,v,phi\n")
        for s in rows:
            fh.write(
                f"{s.theta:.17g},{s.point.real:.17g},{s.point.imag:.17g},{s.turning:.17g}\n"
            )
    return path


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--alphas",
        type=float,
        nargs="+",
        default=[0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9],
        help="orders to tabulate",
    )
    parser.add_argument("--samples", type=int, default=512)
    parser.add_argument("--theta-min", type=float, default=1e-3, dest="theta_min")
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("boundary_tables"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for alpha in args.alphas:
        path = write_curve(args.out_dir, alpha, args.samples, args.theta_min)
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
