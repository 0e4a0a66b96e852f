"""Command-line front end.

Subcommands:

- ``verify``    run a named invariant suite, exit nonzero on any breach
- ``color``     solve for the nontrivial colorings of a diagram at a given psi
- ``sweep``     emit CSV of longitude values over a theta grid
- ``intervals`` print the colorable psi/theta intervals of a torus knot

Angles are radians by default; pass ``--deg`` to give them in degrees.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import verification
from .colorings import (
    DEFAULT_GRID,
    fig8_betas,
    solve_colorings,
    star_polygon,
    torus_interval,
    torus_theta_interval,
)
from .errors import LongmapError, OutOfInterval
from .longitudes import fig8_closed_form, t2n_closed_form
from .quaternions import geodesic_distance
from .tangles import fig8, parse, torus2n

FMT = "{:.17g}"


def _fmt(x):
    return FMT.format(float(x))


def _load_diagram(args):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return parse(fh.read())
    if args.knot is None:
        raise LongmapError("give either --knot or --file")
    spec = args.knot.strip()
    if spec == "fig8":
        return fig8()
    if spec.startswith("torus:"):
        parts = spec.split(":")
        n = int(parts[1])
        sign = int(parts[2]) if len(parts) > 2 else 1
        return torus2n(n, sign)
    raise LongmapError(f"unknown knot {spec!r} (use fig8 or torus:n[:sign])")


def _angle(value, args):
    return math.radians(value) if args.deg else value


def cmd_verify(args):
    suites = verification.SUITES
    names = list(suites) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        for line in suites[name]():
            ok &= line.passed
            print(line)
    return 0 if ok else 1


def cmd_color(args):
    diagram = _load_diagram(args)
    psi = _angle(args.psi, args)
    seeds = solve_colorings(diagram, psi, grid=args.grid)
    records = []
    for beta, coloring in seeds:
        from .colorings import residual

        records.append(
            {
                "beta": beta,
                "residual": residual(coloring, diagram),
                "colors": [list(map(float, c)) for c in coloring.colors],
            }
        )
    if args.json:
        print(json.dumps({"psi": psi, "seeds": records}, indent=2))
    else:
        print(f"psi = {_fmt(psi)}: {len(records)} nontrivial seed(s)")
        for rec in records:
            print(f"  beta = {_fmt(rec['beta'])}  "
                  f"residual = {rec['residual']:.3e}")
            for arc, c in enumerate(rec["colors"]):
                print(f"    arc {arc}: ({_fmt(c[0])}, {_fmt(c[1])}, "
                      f"{_fmt(c[2])})")
    return 0


def _sweep_rows_fig8(thetas, branches):
    for theta in thetas:
        psi = 2.0 * math.pi - 2.0 * theta
        for branch in branches:
            try:
                beta = fig8_betas(psi)[branch - 1]
                value = fig8_closed_form(theta, branch)
            except OutOfInterval:
                yield (theta, branch, None, None, None, None)
                continue
            yield (theta, branch, beta, value.q.a, value.q.b, value.phi)


def _sweep_rows_torus(n, sign, thetas, branches):
    k = (n - 1) // 2
    hs = branches if branches else range(1, k + 1)
    for theta in thetas:
        psi = 2.0 * math.pi - 2.0 * theta
        for h in hs:
            lo, hi = torus_theta_interval(n, h)
            if not lo < theta < hi:
                yield (theta, h, None, None, None, None)
                continue
            coloring = star_polygon(n, h, psi)
            beta = float(
                geodesic_distance(coloring.colors[0], coloring.colors[k + 1])
            )
            value = t2n_closed_form(n, theta, mirror=(sign < 0))
            yield (theta, h, beta, value.q.a, value.q.b, value.phi)


def cmd_sweep(args):
    theta_min = _angle(args.theta_min, args)
    theta_max = _angle(args.theta_max, args)
    if not theta_min < theta_max or args.steps < 2:
        raise LongmapError("need theta_min < theta_max and steps >= 2")
    thetas = np.linspace(theta_min, theta_max, args.steps)
    branches = (
        [int(b) for b in args.branches.split(",")]
        if args.branches != "all"
        else None
    )

    spec = args.knot.strip()
    if spec == "fig8":
        rows = _sweep_rows_fig8(thetas, branches or [1, 2])
    elif spec.startswith("torus:"):
        parts = spec.split(":")
        n = int(parts[1])
        sign = int(parts[2]) if len(parts) > 2 else 1
        rows = _sweep_rows_torus(n, sign, thetas, branches)
    else:
        raise LongmapError(f"unknown knot {spec!r}")

    lines = ["theta,branch,beta,L_re,L_im,phi"]
    for theta, branch, beta, l_re, l_im, phi in rows:
        if beta is None:
            lines.append(f"{_fmt(theta)},{branch},,,,")
        else:
            lines.append(
                f"{_fmt(theta)},{branch},{_fmt(beta)},{_fmt(l_re)},"
                f"{_fmt(l_im)},{_fmt(phi)}"
            )
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def cmd_intervals(args):
    n = args.n
    k = (n - 1) // 2
    rows = []
    for h in range(1, k + 1):
        plo, phi_ = torus_interval(n, h)
        tlo, thi = torus_theta_interval(n, h)
        rows.append((h, plo, phi_, tlo, thi))
    if args.json:
        print(
            json.dumps(
                [
                    {"h": h, "psi": [a, b], "theta": [c, d]}
                    for h, a, b, c, d in rows
                ],
                indent=2,
            )
        )
    else:
        print(f"T(2,{n}) colorable intervals:")
        print(f"{'h':>3}  {'psi interval':>32}  {'theta interval':>32}")
        for h, a, b, c, d in rows:
            print(
                f"{h:>3}  ({a:14.10f}, {b:14.10f})  "
                f"({c:14.10f}, {d:14.10f})"
            )
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="longmap",
        description="Quandle colorings and the SU(2) longitudinal mapping",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run an invariant suite")
    pv.add_argument(
        "suite",
        choices=sorted(verification.SUITES) + ["all"],
        help="which suite to run",
    )
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("color", help="solve for colorings at a given psi")
    pc.add_argument("--knot", help="fig8 or torus:n[:sign]")
    pc.add_argument("--file", help="tangle text file")
    pc.add_argument("--psi", type=float, required=True)
    pc.add_argument("--grid", type=int, default=DEFAULT_GRID)
    pc.add_argument("--deg", action="store_true", help="angles in degrees")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_color)

    ps = sub.add_parser("sweep", help="CSV of longitude values over theta")
    ps.add_argument("--knot", required=True, help="fig8 or torus:n[:sign]")
    ps.add_argument("--theta-min", type=float, required=True)
    ps.add_argument("--theta-max", type=float, required=True)
    ps.add_argument("--steps", type=int, default=200)
    ps.add_argument("--branches", default="all",
                    help="'all' or comma-separated branch/step list")
    ps.add_argument("--out", default="-", help="output path ('-' = stdout)")
    ps.add_argument("--deg", action="store_true", help="angles in degrees")
    ps.set_defaults(func=cmd_sweep)

    pi = sub.add_parser("intervals", help="colorable intervals of T(2,n)")
    pi.add_argument("n", type=int)
    pi.add_argument("--json", action="store_true")
    pi.set_defaults(func=cmd_intervals)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LongmapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
