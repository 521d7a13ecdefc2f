"""Command-line front end.

    squeeze eval --domain annulus-ball --r 0.25 --n 2 --ray 0.3:0.99:100
    squeeze dist --model ball --set shell.json --point 0.2,0.1j
    squeeze psh --fixture capped-shell --r 0.5 --eps 0.05 --n 2
    squeeze construct --kind disk --r 0.3 --R 0.6 --out disk.json
    squeeze verify --config disk.json --samples 10000

Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__, sampling
from .caratheodory import OutsideDomainError
from .catalog import DomainKind, DomainSpec, Interval, evaluate
from .constructions import (
    Config,
    CoveringError,
    build_ball_config,
    build_polydisk_config,
    config_field,
    example_disk_config,
    verify_config,
)
from .core import Ball, Polydisk, as_cvector, contains
from .psh import (
    DEFAULT_DIRECTIONS,
    DEFAULT_QUAD_N,
    DEFAULT_TOL,
    CertificateError,
    DiscOutsideDomain,
    Field,
    scan_psh,
    verify_capped_shell,
)
from .set_distance import DEFAULT_BUDGET, DEFAULT_ORACLE_SAMPLES, boundary_set_from_json, dist_generic, grid_min_oracle

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
BOUNDS_KINDS = {DomainKind.PUNCTURED_POLYDISK, DomainKind.PUNCTURED_DISK_TIMES_POLYDISK}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("SQUEEZE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SQUEEZE_SEED must be an integer, got {raw!r}")


# --------------------------------------------------------------------------
# grids


def parse_point(text: str) -> np.ndarray:
    """Comma-separated complex coordinates in Python notation, e.g. ``0.3,0.1+0.2j``."""
    try:
        return as_cvector([complex(p.strip().replace(" ", "")) for p in text.split(",")])
    except ValueError as exc:
        raise UsageError(f"malformed point {text!r}: {exc}")


def parse_ray(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    try:
        a, b, k = float(parts[0]), float(parts[1]), int(parts[2])
    except (ValueError, IndexError):
        raise UsageError(f"malformed ray {text!r}, expected a:b:count")
    if len(parts) != 3 or k < 1:
        raise UsageError(f"malformed ray {text!r}, expected a:b:count with count >= 1")
    return a, b, k


def build_grid(args, n: int) -> list[np.ndarray]:
    pts: list[np.ndarray] = []
    if args.ray:
        a, b, k = parse_ray(args.ray)
        u = parse_point(args.direction) if args.direction else np.eye(n, dtype=np.complex128)[0]
        if u.shape != (n,) or not np.any(u):
            raise UsageError(f"direction must be a nonzero vector with {n} coordinates")
        u = u / np.linalg.norm(u)
        pts += [t * u for t in np.linspace(a, b, k)]
    for text in args.point or []:
        pts.append(parse_point(text))
    if args.points:
        try:
            rows = json.loads(Path(args.points).read_text())
            pts += [as_cvector([complex(re, im) for re, im in row]) for row in rows]
        except (OSError, ValueError, TypeError) as exc:
            raise UsageError(f"cannot read points file {args.points}: {exc}")
    if not pts:
        raise UsageError("no grid given (use --ray, --point or --points)")
    for z in pts:
        if z.shape != (n,):
            raise UsageError(f"point with {z.size} coordinates, expected {n}")
    return pts


def _model(name: str, n: int):
    if name == "ball":
        return Ball(n)
    if name == "polydisk":
        return Polydisk(n)
    raise UsageError(f"unknown model domain {name!r}")


def _load_set(path: str):
    try:
        return boundary_set_from_json(json.loads(Path(path).read_text()))
    except (OSError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read set file {path}: {exc}")


# --------------------------------------------------------------------------
# output


def _coord_columns(n: int) -> list[str]:
    return [f"z{i}_{part}" for i in range(1, n + 1) for part in ("re", "im")]


def _coords(z: np.ndarray) -> list[float]:
    return [float(x) for c in z for x in (c.real, c.imag)]


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(x) for x in row])
    return buf.getvalue()


def envelope(spec: dict, results, seed: int, samples: int, **extra) -> str:
    meta = {"seed": seed, "samples": samples, "toolVersion": __version__, **extra}
    return json.dumps({"spec": spec, "results": results, "meta": meta}, indent=2) + "\n"


def _spec_dict(args) -> dict:
    skip = {"out", "func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# commands


def _domain_spec(args) -> DomainSpec:
    model = deleted = None
    if args.domain == DomainKind.OMEGA_MINUS_SET.value:
        if not (args.model and args.set):
            raise UsageError("omega-minus-set needs --model and --set")
        model, deleted = _model(args.model, args.n), _load_set(args.set)
    try:
        return DomainSpec(DomainKind(args.domain), args.n, args.r, model, deleted)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_eval(args) -> int:
    spec = _domain_spec(args)
    pts = build_grid(args, args.n)
    rows, kept, skipped = [], [], 0
    for z in pts:
        if not spec.contains(z):
            skipped += 1
            continue
        try:
            val = evaluate(spec, z, args.budget)
        except OutsideDomainError:
            skipped += 1
            continue
        kept.append((z, val))
    bounds = spec.kind in BOUNDS_KINDS
    if args.format == "csv":
        cols = ["lo", "hi"] if bounds else ["value"]
        for z, v in kept:
            vals = [v.lo, v.hi] if bounds else [v]
            rows.append(_coords(z) + [float(x) for x in vals])
        text = to_csv(_coord_columns(args.n) + cols, rows)
    else:
        results = []
        for z, v in kept:
            item = {"z": [[float(c.real), float(c.imag)] for c in z]}
            item.update({"lo": v.lo, "hi": v.hi} if isinstance(v, Interval) else {"value": float(v)})
            results.append(item)
        text = envelope(_spec_dict(args), results, args.seed, args.budget, skipped=skipped)
    _emit(text, args.out)
    if skipped:
        print(f"skipped {skipped} point(s) outside the domain", file=sys.stderr)
    return EXIT_OK


def cmd_dist(args) -> int:
    d = _model(args.model, args.n)
    s = _load_set(args.set)
    if s.dim != args.n:
        raise UsageError(f"set has dimension {s.dim}, expected {args.n}")
    pts = build_grid(args, args.n)
    results, skipped = [], 0
    for z in pts:
        if not contains(d, z):
            skipped += 1
            continue
        try:
            if args.oracle:
                res = {"value": grid_min_oracle(d, z, s, args.samples, args.seed), "method": "sampling", "samples": args.samples}
            else:
                res = dist_generic(d, z, s, args.budget).to_dict()
        except (OutsideDomainError, ValueError):
            skipped += 1
            continue
        results.append((z, res))
    if args.format == "csv":
        n = args.n
        header = _coord_columns(n) + ["value", "method", "samples", "converged"]
        if not args.oracle:
            header += [f"argmin{i}_{p}" for i in range(1, n + 1) for p in ("re", "im")]
        rows = []
        for z, r in results:
            row = _coords(z) + [r["value"], r["method"], r["samples"], r.get("converged", True)]
            if not args.oracle:
                row += [x for pair in r["argmin"] for x in pair]
            rows.append(row)
        text = to_csv(header, rows)
    else:
        items = [{"z": [[float(c.real), float(c.imag)] for c in z], **r} for z, r in results]
        samples = args.samples if args.oracle else args.budget
        text = envelope(_spec_dict(args), items, args.seed, samples, skipped=skipped)
    _emit(text, args.out)
    return EXIT_OK


def _psh_field(args) -> tuple[Field, int]:
    n = args.n
    if args.fixture == "max-modulus":
        d = Polydisk(n)
        return Field(lambda z: float(np.max(np.abs(z))), d, "max |z_i|"), n
    if args.fixture == "norm":
        d = Ball(n)
        return Field(lambda z: float(np.linalg.norm(z)), d, "||z||"), n
    raise UsageError(f"unknown fixture {args.fixture!r}")


def cmd_psh(args) -> int:
    if args.fixture in ("capped-shell", "theorem41"):
        if args.r is None or args.eps is None:
            raise UsageError("the capped-shell fixture needs --r and --eps")
        try:
            report = verify_capped_shell(args.r, args.eps, args.n, args.quad_n, args.radius)
        except CertificateError as exc:
            print(f"certificate failed: {exc}", file=sys.stderr)
            return EXIT_VERIFY
        status = EXIT_OK if report.violations else EXIT_VERIFY
    elif args.fixture == "config":
        if not args.config:
            raise UsageError("the config fixture needs --config")
        cfg = _load_config(args.config)
        f = config_field(cfg)
        rho = args.radius if args.radius is not None else cfg.r
        report = scan_psh(f, [np.zeros(cfg.n)], args.directions, [rho], args.quad_n, args.tol, args.seed)
        status = EXIT_OK if report.violations else EXIT_VERIFY
    else:
        f, n = _psh_field(args)
        radius = 0.1 if args.radius is None else args.radius

        def centers(gen):
            return sampling.solid_ball(gen, args.centers, n, radius=0.8) if args.fixture == "norm" else sampling.disk(gen, (args.centers, n), 0.8)

        report = scan_psh(f, centers, args.directions, [radius], args.quad_n, args.tol, args.seed)
        status = EXIT_OK
    _emit(envelope(_spec_dict(args), report.to_dict(), args.seed, args.quad_n), args.out)
    return status


def _load_config(path: str) -> Config:
    try:
        return Config.load(path)
    except (OSError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}")


def cmd_construct(args) -> int:
    if args.kind == "disk":
        cfg = example_disk_config(args.r, args.R)
    elif args.kind == "ball":
        cfg = build_ball_config(args.r, args.R, args.n, args.budget, seed=args.seed)
    else:
        cfg = build_polydisk_config(args.r, args.R, args.n)
    _emit(json.dumps(cfg.to_json(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _load_config(args.config)
    report = verify_config(cfg, args.samples, args.seed)
    _emit(envelope(_spec_dict(args), report.to_dict(), args.seed, args.samples), args.out)
    return EXIT_OK if report.ok else EXIT_VERIFY


# --------------------------------------------------------------------------
# parser


def _add_grid(p):
    p.add_argument("--ray", help="a:b:count, points t*u for count values of t in [a, b]")
    p.add_argument("--direction", help="ray direction u as complex coordinates (default e_1)")
    p.add_argument("--point", action="append", help="explicit point, e.g. 0.3,0.1+0.2j (repeatable)")
    p.add_argument("--points", help="JSON file with a list of points, each a list of [re, im]")


def _add_common(p, formats=True):
    p.add_argument("--out", help="output file (default stdout)")
    if formats:
        p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default $SQUEEZE_SEED or 0)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="squeeze", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a catalog squeezing function on a grid")
    p.add_argument("--domain", required=True, choices=[k.value for k in DomainKind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=float)
    p.add_argument("--model", choices=["ball", "polydisk"])
    p.add_argument("--set", help="deleted-set JSON file (omega-minus-set)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_grid(p)
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dist", help="tanh-Caratheodory distance to a deleted set")
    p.add_argument("--model", required=True, choices=["ball", "polydisk"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, help="deleted-set JSON file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--oracle", action="store_true", help="use the sampling oracle instead")
    p.add_argument("--samples", type=int, default=DEFAULT_ORACLE_SAMPLES)
    _add_grid(p)
    _add_common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("psh", help="sub-mean-value checks")
    p.add_argument("--fixture", required=True, choices=["capped-shell", "theorem41", "config", "max-modulus", "norm"],
                   help="theorem41 is an alias of capped-shell")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=float)
    p.add_argument("--eps", type=float)
    p.add_argument("--config", help="Config JSON (config fixture)")
    p.add_argument("--radius", type=float)
    p.add_argument("--centers", type=int, default=64)
    p.add_argument("--directions", type=int, default=DEFAULT_DIRECTIONS)
    p.add_argument("--quad-n", type=int, default=DEFAULT_QUAD_N)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_common(p, formats=False)
    p.set_defaults(func=cmd_psh)

    p = sub.add_parser("construct", help="build a counterexample configuration")
    p.add_argument("--kind", required=True, choices=["disk", "ball", "polydisk"])
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--budget", type=int, default=20000, help="maximum number of covering points")
    _add_common(p, formats=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a configuration by sampling")
    p.add_argument("--config", required=True)
    p.add_argument("--samples", type=int, default=10000)
    _add_common(p, formats=False)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except (UsageError, OutsideDomainError, DiscOutsideDomain, CoveringError, ValueError) as exc:
        print(f"squeeze {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
