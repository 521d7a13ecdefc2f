#!/usr/bin/env python3
"""Sub-mean-value certificate for the ball minus a sphere shell with a small cap removed.

Prints the slice check and the deficit of the squeezing function on discs
centred at the origin, next to the exact value r - (r - rho)/(1 - r rho).
"""

import argparse
import json

import numpy as np

from squeezing.psh import submean_check, capped_shell_field, verify_capped_shell


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=float, default=0.5)
    ap.add_argument("--eps", type=float, default=0.05)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--quad-n", type=int, default=512)
    ap.add_argument("--radii", type=float, nargs="+", default=[0.1, 0.25, 0.4])
    args = ap.parse_args(argv)

    rep = verify_capped_shell(args.r, args.eps, args.n, args.quad_n)
    print(json.dumps(rep.to_dict(), indent=2))
    f = capped_shell_field(args.r, args.eps, args.n)
    e1 = np.zeros(args.n, complex)
    e1[0] = 1
    print("rho        deficit            exact")
    for rho in args.radii:
        hit = submean_check(f, np.zeros(args.n), e1, rho, args.quad_n, 0.0)
        exact = args.r - (args.r - rho) / (1 - args.r * rho)
        print(f"{rho:<10} {hit.deficit if hit else 0.0:<18.15f} {exact:.15f}")


if __name__ == "__main__":
    main()
