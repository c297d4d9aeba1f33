"""Command-line interface.

Lengths in mm, forces in N, angles in degrees. Exit codes: 0 ok, 2 input or
configuration error, 3 calibration error, 4 solver error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings

from . import analysis, calibration
from .assembly import solve_bearing
from .core import (REFERENCE_GEOMETRY, REFERENCE_STIFFNESS, LoadCase, dump_stiffness,
                   load_geometry, load_stiffness)
from .errors import CalibrationError, GeometryError, LinearityWarning, WireRaceError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CALIBRATION = 3
EXIT_SOLVER = 4


def fmt(value) -> str:
    """Six significant digits; negative zero printed as 0."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if value == 0.0:
        return "0"
    return f"{value:.6g}"


class InputError(Exception):
    pass


def _load_config(args):
    try:
        geometry = load_geometry(args.geometry) if args.geometry else REFERENCE_GEOMETRY
        stiffness = load_stiffness(args.stiffness) if args.stiffness else REFERENCE_STIFFNESS
    except (OSError, GeometryError) as exc:
        raise InputError(str(exc)) from exc
    return geometry, stiffness


def _write_csv(path, header, rows, stdout):
    if path in (None, "-"):
        w = csv.writer(stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def cmd_calibrate(args, out, err) -> int:
    try:
        records = calibration.read_records(args.input)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", LinearityWarning)
            fit = calibration.fit_stiffness(records, threshold=args.threshold)
    except CalibrationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CALIBRATION
    for w in caught:
        print(f"warning: {w.message}", file=err)
    k = fit.stiffness
    dump_stiffness(k, args.out)
    print(f"k1 = {fmt(k.k1)} N/mm  (max deviation {fmt(fit.deviation[0])})", file=out)
    print(f"k2 = {fmt(k.k2)} N/mm  (max deviation {fmt(fit.deviation[1])})", file=out)
    print(f"k3 = {fmt(k.k3)} N/mm  (max deviation {fmt(fit.deviation[2])})", file=out)
    return EXIT_OK


SECTOR_HEADER = ["index", "theta_deg", "type", "engaged", "axial_mm", "radial_mm",
                 "friction_sign", "delta1_mm", "delta2_mm", "delta3_mm", "alpha_deg",
                 "n1_N", "n2_N", "total_force_N", "total_angle_deg", "normal_force_N"]


def cmd_solve(args, out, err) -> int:
    geometry, stiffness = _load_config(args)
    try:
        load = LoadCase(
            axial_displacement=args.axial,
            radial_displacement=args.radial,
            radial_direction=math.radians(args.theta_r),
            tilt_angle=math.radians(args.moment),
            tilt_axis_direction=math.radians(args.theta_m),
        )
    except GeometryError as exc:
        raise InputError(str(exc)) from exc
    sol = solve_bearing(load, geometry, stiffness)
    rows = []
    for kin, s in sorted(sol.sectors, key=lambda ks: ks[0].angle):
        rows.append([kin.index, fmt(math.degrees(kin.angle)), kin.roller_type.value,
                     fmt(kin.engaged), fmt(kin.axial), fmt(kin.radial), kin.friction_sign,
                     fmt(s.delta1), fmt(s.delta2), fmt(s.delta3), fmt(math.degrees(s.alpha)),
                     fmt(s.n1), fmt(s.n2), fmt(s.total_force),
                     fmt(math.degrees(s.total_angle)), fmt(s.normal_force)])
    _write_csv(args.out, SECTOR_HEADER, rows, out)
    r = sol.reactions
    stream = err if args.out in (None, "-") else out
    print(f"engaged sectors: {sol.engaged_count} of {geometry.roller_count}", file=stream)
    print(f"Fx = {fmt(r.fx)} N", file=stream)
    print(f"Fy = {fmt(r.fy)} N", file=stream)
    print(f"Fz = {fmt(r.fz)} N", file=stream)
    print(f"Mx = {fmt(r.mx)} N*mm = {fmt(r.mx / 1000.0)} N*m", file=stream)
    print(f"Mz = {fmt(r.mz)} N*mm = {fmt(r.mz / 1000.0)} N*m", file=stream)
    print(f"tilting moment = {fmt(r.tilting_moment / 1000.0)} N*m about "
          f"{fmt(math.degrees(r.tilting_axis))} deg", file=stream)
    print(f"max normal force = {fmt(sol.max_normal_force)} N", file=stream)
    return EXIT_OK


def cmd_sweep(args, out, err) -> int:
    geometry, stiffness = _load_config(args)
    if args.steps < 2:
        raise InputError("--steps must be at least 2")
    if not args.max > 0.0:
        raise InputError("--max must be positive")
    moment = args.axis == "moment"
    dmax = math.radians(args.max) if moment else args.max
    table = analysis.sweep(args.axis, dmax, args.steps, geometry, stiffness,
                           direction=math.radians(args.direction))
    k, dev = analysis.secant_stiffness(table)
    if moment:
        header = ["tilt_deg", "moment_Nm", "max_normal_force_N"]
        rows = [[fmt(math.degrees(d)), fmt(m / 1000.0), fmt(f)]
                for d, m, f in zip(table.displacement, table.reaction, table.max_normal_force)]
        summary = {"axis": "moment", "stiffness": float(fmt(analysis.moment_stiffness_per_degree(k))),
                   "unit": "N*m/deg"}
    else:
        header = ["displacement_mm", "force_N", "max_normal_force_N"]
        rows = [[fmt(d), fmt(f), fmt(n)]
                for d, f, n in zip(table.displacement, table.reaction, table.max_normal_force)]
        summary = {"axis": args.axis, "stiffness": float(fmt(k)), "unit": "N/mm"}
    summary["max_relative_deviation"] = float(fmt(dev))
    summary["steps"] = args.steps
    _write_csv(args.out, header, rows, out)
    text = json.dumps(summary, indent=2)
    if args.summary:
        with open(args.summary, "w") as fh:
            fh.write(text + "\n")
    print(text, file=err if args.out in (None, "-") else out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wirerace", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def config_args(sp):
        sp.add_argument("--geometry", help="geometry JSON (default: reference bearing)")
        sp.add_argument("--stiffness", help="stiffness JSON (default: reference constants)")

    c = sub.add_parser("calibrate", help="fit k1, k2, k3 from probe data")
    c.add_argument("--input", required=True, help="CSV with header delta,f1,f2,f3,d1,d2")
    c.add_argument("--out", required=True, help="stiffness JSON to write")
    c.add_argument("--threshold", type=float, default=calibration.LINEARITY_THRESHOLD,
                   help="linearity warning threshold (default 0.05)")
    c.set_defaults(func=cmd_calibrate)

    s = sub.add_parser("solve", help="solve the bearing for one displacement set")
    config_args(s)
    s.add_argument("--axial", type=float, default=0.0, help="axial displacement [mm]")
    s.add_argument("--radial", type=float, default=0.0, help="radial displacement [mm]")
    s.add_argument("--theta-r", type=float, default=0.0, help="radial direction [deg]")
    s.add_argument("--moment", type=float, default=0.0, help="tilt angle [deg]")
    s.add_argument("--theta-m", type=float, default=0.0, help="tilt axis direction [deg]")
    s.add_argument("--out", help="per-sector CSV (default: stdout)")
    s.set_defaults(func=cmd_solve)

    w = sub.add_parser("sweep", help="load-displacement sweep and secant stiffness")
    config_args(w)
    w.add_argument("--axis", choices=analysis.AXES, required=True)
    w.add_argument("--max", type=float, required=True,
                   help="largest displacement [mm], or tilt angle [deg] for --axis moment")
    w.add_argument("--steps", type=int, default=11)
    w.add_argument("--direction", type=float, default=0.0,
                   help="theta_R or theta_M [deg]")
    w.add_argument("--out", help="sweep CSV (default: stdout)")
    w.add_argument("--summary", help="also write the stiffness summary JSON here")
    w.set_defaults(func=cmd_sweep)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except WireRaceError as exc:
        sector = getattr(exc, "sector", None)
        cause = exc.__cause__
        if sector is None and cause is not None:
            sector = getattr(cause, "sector", None)
        where = f" (sector {sector})" if sector is not None else ""
        print(f"solver error{where}: {exc}", file=err)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
