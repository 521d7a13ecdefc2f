#!/usr/bin/env python3
"""Build and verify the disk, ball and polydisk configurations over a few (r, R) pairs."""

import argparse
import time

from squeezing.constructions import build_ball_config, build_polydisk_config, example_disk_config, verify_config

PAIRS = [(0.3, 0.6), (0.25, 0.5), (0.5, 0.8), (0.1, 0.9)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10**4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--ball-dims", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args(argv)

    print(f"{'kind':<26}{'r':>5}{'R':>5}{'m':>7}{'delta':>10}{'gap':>10}{'center':>10}{'bmax':>10}  ok   time")
    for r, R in PAIRS:
        builders = [("disk", lambda: example_disk_config(r, R)), ("polydisk n=2", lambda: build_polydisk_config(r, R, 2))]
        builders += [(f"ball n={n}", lambda n=n: build_ball_config(r, R, n)) for n in args.ball_dims]
        for label, build in builders:
            t0 = time.perf_counter()
            try:
                cfg = build()
            except RuntimeError as exc:
                print(f"{label:<26}{r:>5}{R:>5}  skipped: {exc}")
                continue
            rep = verify_config(cfg, args.samples, args.seed)
            dt = time.perf_counter() - t0
            print(f"{label:<26}{r:>5}{R:>5}{cfg.m:>7}{cfg.delta:>10.5f}{rep.worst_gap:>10.5f}"
                  f"{rep.center_value:>10.6f}{rep.boundary_max:>10.5f}  {str(rep.ok):<5}{dt:5.1f}s")


if __name__ == "__main__":
    main()
