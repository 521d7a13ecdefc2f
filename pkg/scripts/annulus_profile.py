#!/usr/bin/env python3
"""Radial profile of the annulus squeezing function against the numerical set distance.

Writes t, closed form, numerical minimum and the 1e5-sample oracle as CSV.
"""

import argparse
import csv
import sys

import numpy as np

from squeezing.catalog import squeeze_annulus_ball
from squeezing.core import Ball
from squeezing.set_distance import SphereShell, dist_numeric, grid_min_oracle


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=float, default=0.25)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--samples", type=int, default=10**5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="CSV path (default stdout)")
    args = ap.parse_args(argv)

    d, s = Ball(args.n), SphereShell(args.r, args.n)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["t", "closed_form", "numeric", "oracle"])
    worst = 0.0
    for t in np.linspace(args.r + 0.02, 0.95, args.count):
        z = np.zeros(args.n, complex)
        z[0] = t
        exact = squeeze_annulus_ball(z, args.r)
        num = dist_numeric(d, z, s).value
        orc = grid_min_oracle(d, z, s, args.samples, args.seed)
        worst = max(worst, abs(num - exact))
        w.writerow([repr(float(t)), repr(exact), repr(num), repr(orc)])
    if args.out:
        out.close()
    print(f"max |numeric - closed form| = {worst:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
