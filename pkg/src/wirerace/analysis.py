"""Engineering outputs built on :func:`wirerace.assembly.solve_bearing`."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .assembly import BearingSolution, solve_bearing
from .calibration import fit_through_origin
from .core import BearingGeometry, ContactStiffness, LoadCase, RollerType
from .errors import (InsufficientData, ModelValidityError, NonConvergence, NotReached,
                     WireRaceError)

AXES = ("axial", "radial", "moment")

# Displacements [mm, mm, rad] that load the reference bearing to roughly
# 1.5 kN per roller, the order of the validation load level.
DEFAULT_SWEEP_MAX = {"axial": 0.05, "radial": 0.05, "moment": 2.5e-4}


def load_case(axis: str, displacement: float, direction: float = 0.0) -> LoadCase:
    """Pure load case along ``axis`` (``direction`` is theta_R or theta_M in rad)."""
    if axis == "axial":
        return LoadCase(axial_displacement=displacement)
    if axis == "radial":
        return LoadCase(radial_displacement=displacement, radial_direction=direction)
    if axis == "moment":
        return LoadCase(tilt_angle=displacement, tilt_axis_direction=direction)
    raise ValueError(f"axis must be one of {AXES}, got {axis!r}")


def conjugate_reaction(axis: str, solution: BearingSolution, direction: float = 0.0) -> float:
    """Fy [N], force along theta_R [N], or moment about the theta_M axis [N*mm]."""
    r = solution.reactions
    if axis == "axial":
        return r.fy
    if axis == "radial":
        return r.radial_component(direction)
    if axis == "moment":
        return r.moment_about(direction)
    raise ValueError(f"axis must be one of {AXES}, got {axis!r}")


@dataclass(frozen=True)
class Sweep:
    axis: str
    direction: float
    displacement: np.ndarray
    reaction: np.ndarray
    max_normal_force: np.ndarray

    def rows(self):
        return list(zip(self.displacement.tolist(), self.reaction.tolist()))


class SweepError(WireRaceError):
    def __init__(self, message, step):
        super().__init__(message)
        self.step = step


def sweep(axis: str, max_displacement: float, steps: int, geometry: BearingGeometry,
          stiffness: ContactStiffness, direction: float = 0.0) -> Sweep:
    """Solve the bearing at ``steps`` equally spaced displacements from 0 to ``max_displacement``.

    Displacements are in mm (axial, radial) or rad (moment).
    """
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    if steps < 2:
        raise ValueError("a sweep needs at least 2 steps")
    if not max_displacement > 0.0:
        raise ValueError("max_displacement must be positive")
    disp = np.linspace(0.0, max_displacement, steps)
    reaction = np.empty(steps)
    fmax = np.empty(steps)
    for i, d in enumerate(disp):
        try:
            sol = solve_bearing(load_case(axis, float(d), direction), geometry, stiffness)
        except WireRaceError as exc:
            raise SweepError(f"step {i} ({axis} = {d:.6g}): {exc}", step=i) from exc
        reaction[i] = conjugate_reaction(axis, sol, direction)
        fmax[i] = sol.max_normal_force
    return Sweep(axis, direction, disp, reaction, fmax)


def secant_stiffness(table) -> tuple[float, float]:
    """Slope of the least-squares line through the origin and its max relative deviation.

    ``table`` is a :class:`Sweep` or a sequence of ``(displacement, reaction)`` rows.
    """
    if isinstance(table, Sweep):
        x, y = table.displacement, table.reaction
    else:
        rows = np.asarray(list(table), dtype=float).reshape(-1, 2)
        x, y = rows[:, 0], rows[:, 1]
    if len(x) < 2 or not np.any(x != 0.0):
        raise InsufficientData("secant stiffness needs at least two rows with a non-zero displacement")
    return fit_through_origin(x, y)


def moment_stiffness_per_degree(k_rad: float) -> float:
    """Convert N*mm/rad to N*m/deg."""
    return k_rad * math.pi / 180.0 / 1000.0


@dataclass(frozen=True)
class DistributionRow:
    index: int
    angle: float
    roller_type: RollerType
    engaged: bool
    normal_force: float
    alpha: float
    total_angle: float


def distribution(load: LoadCase, geometry: BearingGeometry,
                 stiffness: ContactStiffness) -> list[DistributionRow]:
    """Per-roller normal force and contact angles, ordered by angular position."""
    sol = solve_bearing(load, geometry, stiffness)
    return distribution_rows(sol)


def distribution_rows(solution: BearingSolution) -> list[DistributionRow]:
    rows = [DistributionRow(k.index, k.angle, k.roller_type, k.engaged, s.normal_force,
                            s.alpha, s.total_angle)
            for k, s in solution.sectors]
    rows.sort(key=lambda r: r.angle)
    return rows


@dataclass(frozen=True)
class Capacity:
    displacement: float
    load: float
    max_normal_force: float


def capacity_search(axis: str, normal_force_limit: float, geometry: BearingGeometry,
                    stiffness: ContactStiffness, direction: float = 0.0,
                    rtol: float = 1e-3, start: float | None = None) -> Capacity:
    """Displacement and load at which the most loaded roller reaches ``normal_force_limit``.

    The displacement is bracketed by doubling from ``start`` and then bisected
    until the peak normal force is within ``rtol`` of the limit.

    Raises
    ------
    NotReached
        The limit lies beyond the validity range of the contact model.
    """
    if not normal_force_limit > 0.0:
        raise ValueError("normal_force_limit must be positive")

    def evaluate(d):
        try:
            sol = solve_bearing(load_case(axis, d, direction), geometry, stiffness)
        except (ModelValidityError, NonConvergence):
            # solver breakdown far outside the small-interference range counts as invalid
            return None
        return sol

    def close(sol):
        return abs(sol.max_normal_force - normal_force_limit) <= rtol * normal_force_limit

    if start is None:
        start = 1e-3 if axis != "moment" else 1e-3 / geometry.pitch_radius
    lo, hi = 0.0, start
    hi_sol = evaluate(hi)
    for _ in range(200):
        if hi_sol is None:
            # beyond validity: shrink towards the last valid point
            mid = 0.5 * (lo + hi)
            mid_sol = evaluate(mid)
            if mid_sol is None:
                hi = mid
            elif mid_sol.max_normal_force >= normal_force_limit:
                hi, hi_sol = mid, mid_sol
                break
            else:
                lo = mid
            if hi - lo <= 1e-12 * hi:
                raise NotReached(f"normal force limit {normal_force_limit:g} N exceeds model validity")
            continue
        if hi_sol.max_normal_force >= normal_force_limit:
            break
        lo, hi = hi, 2.0 * hi
        hi_sol = evaluate(hi)
    else:
        raise NotReached(f"normal force limit {normal_force_limit:g} N not bracketed")

    d, sol = hi, hi_sol
    for _ in range(200):
        if close(sol) or hi - lo <= 4 * np.finfo(float).eps * hi:
            break
        d = 0.5 * (lo + hi)
        sol = evaluate(d)
        if sol is None:
            raise NotReached(f"normal force limit {normal_force_limit:g} N exceeds model validity")
        if sol.max_normal_force >= normal_force_limit:
            hi = d
        else:
            lo = d
    if not close(sol):
        raise NotReached("bisection did not settle on the normal force limit")
    return Capacity(d, conjugate_reaction(axis, sol, direction), sol.max_normal_force)
