"""Command-line interface.

Subcommands mirror the library: spiral rendering/export, applying powers
of the shift map, invariants, exact periodicity verification, the
logarithmic-spiral solver, limit points and their orbits, the Z
maximization probe, and the local HTTP service.  Errors print a
machine-readable JSON object on stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional

from . import analysis, invariants, render
from .errors import PentaError
from .fields import as_float
from .seeds import (
    Seed,
    require_valid,
    seed_as_float,
    seed_from_json,
    seed_to_json,
    spiral_window,
    step_power,
    normalize,
)


def _load_seed(path: str) -> Seed:
    with open(path, "r", encoding="utf-8") as fh:
        return seed_from_json(fh.read())


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_spiral(args) -> int:
    seed = require_valid(_load_seed(args.seed))
    points = spiral_window(seed_as_float(normalize(seed)), 1, args.steps)
    if args.out_format == "csv":
        lines = ["j,x,y"]
        for j, p in enumerate(points, start=1):
            x, y = (as_float(v) for v in p.affine())
            lines.append(f"{j},{x!r},{y!r}")
        _write(args.out, "\n".join(lines) + "\n")
    else:
        fseed = seed_as_float(normalize(seed))
        center = None
        mode = args.mode
        if mode == "circle":
            center = analysis.limit_point(fseed).point
        svg = render.render_svg(points, seed=fseed, k=seed.k, mode=mode,
                                center=center, diagonals=args.diagonals)
        _write(args.out, svg)
    return 0


def _cmd_step(args) -> int:
    seed = require_valid(_load_seed(args.seed))
    power = -args.power if args.inverse else args.power
    result = step_power(seed, power)
    _write(args.out, seed_to_json(result))
    return 0


def _cmd_invariant(args) -> int:
    seed = require_valid(_load_seed(args.seed))
    n, k = seed.n, seed.k
    z = invariants.z_invariant(seed)
    flags = invariants.flag_sequence(seed, 3, 2 + (2 * n + k))
    chi = invariants.chi_sequence(seed, 3, 2 + (2 * n + k))
    payload = {
        "Z": as_float(z),
        "flags": [{"index": f, "value": as_float(v)} for f, v in flags.items()],
        "chi": [{"index": j, "value": as_float(v)} for j, v in sorted(chi.items())],
    }
    _write(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_periodicity(args) -> int:
    rng = random.Random(args.rng_seed)
    report = analysis.periodicity_check(args.n, args.k, args.order, args.trials, rng)
    _write(args.out, analysis.periodicity_to_csv(report))
    status = "all-pass" if report.all_passed else "FAILURES"
    print(f"periodicity ({args.n},{args.k}) order {args.order}: "
          f"{sum(t.passed for t in report.trials)}/{len(report.trials)} trials pass [{status}]",
          file=sys.stderr)
    return 0 if report.all_passed else 1


def _cmd_logspiral(args) -> int:
    z = analysis.log_spiral_parameter(args.n, args.k)
    seed = analysis.lps_seed(args.n, args.k)
    payload = {
        "z": {"re": z.real, "im": z.imag, "abs": abs(z)},
        "seed": json.loads(seed_to_json(seed)),
    }
    _write(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_limitpoint(args) -> int:
    seed = require_valid(_load_seed(args.seed))
    if args.orbit is not None:
        points = analysis.limit_point_orbit(seed, args.orbit)
        _write(args.out, analysis.orbit_to_csv(points))
    else:
        result = analysis.limit_point(seed_as_float(seed), tol=args.tol)
        x, y = (as_float(v) for v in result.point.affine())
        _write(args.out, json.dumps({"point": [x, y], "radius": result.radius}) + "\n")
    return 0


def _cmd_probe_zmax(args) -> int:
    report = analysis.z_maximization_probe(args.n, args.k, args.samples,
                                           random.Random(args.rng_seed))
    payload = {
        "n": report.n,
        "k": report.k,
        "z_fixed_point": report.z_fixed,
        "samples": report.samples,
        "samples_below": report.samples_below,
        "max_sample": report.max_sample,
        "gap": report.gap,
        "fixed_point_maximal": report.fixed_point_maximal,
    }
    _write(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    port = int(os.environ.get("PENTA_PORT", args.port))
    serve(port=port, host=args.host)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentaspiral",
                                     description="pentagram spiral toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spiral", help="render or export a spiral window")
    p.add_argument("--seed", required=True, help="seed JSON file")
    p.add_argument("--steps", type=int, default=60)
    p.add_argument("--out", default=None)
    p.add_argument("--out-format", choices=("svg", "csv"), default="svg")
    p.add_argument("--mode", choices=("square", "circle"), default="square")
    p.add_argument("--diagonals", action="store_true")
    p.set_defaults(func=_cmd_spiral)

    p = sub.add_parser("step", help="apply a power of the shift map")
    p.add_argument("--seed", required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_step)

    p = sub.add_parser("invariant", help="print Z, flag values, vertex invariants")
    p.add_argument("--seed", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("periodicity", help="exact periodicity verification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--rng-seed", type=int, default=2024)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_periodicity)

    p = sub.add_parser("logspiral", help="logarithmic-spiral parameter and seed")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_logspiral)

    p = sub.add_parser("limitpoint", help="limit point, or the c_m orbit CSV")
    p.add_argument("--seed", required=True)
    p.add_argument("--orbit", type=int, default=None, metavar="M")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_limitpoint)

    p = sub.add_parser("probe-zmax", help="Z maximization probe report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--rng-seed", type=int, default=99)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_probe_zmax)

    p = sub.add_parser("serve", help="start the local JSON service")
    p.add_argument("--port", type=int, default=8757)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PentaError as exc:
        payload = {"error": exc.code, "detail": str(exc)}
        if hasattr(exc, "violation"):
            payload["violation"] = exc.violation.as_dict()
        print(json.dumps(payload), file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(json.dumps({"error": "file_not_found", "detail": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
