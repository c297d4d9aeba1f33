"""Whole-bearing load distribution.

Ring displacements are distributed to the sectors, contact is screened with
the linearised interference sum, engaged sectors are solved independently
and their wire reactions are summed into bearing forces and moments.

Type B rollers see the axial displacement mirrored: they load when the type A
rollers at the same place would separate. The radial displacement acts on
both types alike.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .core import (BearingGeometry, ContactStiffness, GlobalReactions, LoadCase,
                   SectorKinematics, SectorSolution, build_sectors)
from .errors import NegativeInterference, NonConvergence, WireRaceError
from .sector import solve_sector


@dataclass(frozen=True)
class BearingSolution:
    sectors: list[tuple[SectorKinematics, SectorSolution]]
    reactions: GlobalReactions

    @property
    def engaged_count(self) -> int:
        return sum(1 for kin, _ in self.sectors if kin.engaged)

    @property
    def max_normal_force(self) -> float:
        return max((sol.normal_force for _, sol in self.sectors), default=0.0)

    def max_delta3(self) -> float:
        return max((sol.delta3 for _, sol in self.sectors), default=0.0)


def distribute_displacements(load: LoadCase, sector: SectorKinematics,
                             geometry: BearingGeometry) -> tuple[float, float]:
    """Signed axial and radial displacement seen by one sector [mm]."""
    theta = sector.angle
    axial = load.axial_displacement + (
        load.tilt_angle * geometry.pitch_radius * math.sin(load.tilt_axis_direction - theta))
    radial = load.radial_displacement * math.cos(load.radial_direction - theta)
    return axial, radial


def engagement_interference(sector: SectorKinematics, load: LoadCase,
                            geometry: BearingGeometry) -> tuple[float, bool]:
    """Linearised roller-wire interference ``e`` [mm] and whether it is positive."""
    sigma = sector.roller_type.sign
    a0 = geometry.initial_contact_angle
    theta = sector.angle
    e_axial = sigma * 0.5 * load.axial_displacement * math.sin(a0)
    e_radial = 0.5 * load.radial_displacement * math.cos(load.radial_direction - theta) * math.cos(a0)
    e_tilt = (sigma * 0.5 * load.tilt_angle * geometry.pitch_radius
              * math.sin(load.tilt_axis_direction - theta) * math.sin(a0))
    e = e_axial + e_radial + e_tilt
    return e, e > 0.0


def sector_moments(sector: SectorKinematics, sol: SectorSolution,
                   geometry: BearingGeometry) -> tuple[float, float]:
    """Contribution ``(mx, mz)`` of one sector's wire reactions [N*mm].

    Normal reactions act at the wire-ring contact points; the friction
    forces act half a wire diameter further out along their lever arms.
    """
    sigma = sector.roller_type.sign
    f = sol.friction_sign * sol.friction_coefficient
    half_d = 0.5 * geometry.contact_diameter
    half_w = 0.5 * geometry.wire_diameter
    radius = geometry.pitch_radius - half_d * math.cos(sol.alpha)
    height = half_d * math.sin(sol.alpha)
    axial_part = sol.n1 * radius - f * sol.n2 * (radius - half_w)
    radial_part = sol.n2 * height + f * sol.n1 * (height + half_w)
    m = sigma * (axial_part + radial_part)
    return -m * math.sin(sector.angle), m * math.cos(sector.angle)


def global_reactions(sectors, geometry: BearingGeometry) -> GlobalReactions:
    """Sum sector reactions in ascending index order."""
    fx = fy = fz = mx = mz = 0.0
    for kin, sol in sectors:
        if not kin.engaged:
            continue
        c, s = math.cos(kin.angle), math.sin(kin.angle)
        h = sol.horizontal_force
        fx += h * c
        fz += h * s
        fy += kin.roller_type.sign * sol.vertical_force
        dmx, dmz = sector_moments(kin, sol, geometry)
        mx += dmx
        mz += dmz
    return GlobalReactions(fx, fy, fz, mx, mz)


def solve_bearing(load: LoadCase, geometry: BearingGeometry,
                  stiffness: ContactStiffness) -> BearingSolution:
    """Solve every sector for an imposed ring displacement.

    Sectors whose root turns out to have negative interference are treated as
    separated. Solver failures are re-raised with ``sector`` set to the index.
    """
    free = SectorSolution.disengaged(geometry.initial_contact_angle)
    cache: dict[tuple[float, float], SectorSolution | None] = {}
    out = []
    for kin in build_sectors(geometry):
        axial, radial = distribute_displacements(load, kin, geometry)
        kin = replace(kin, axial=axial, radial=radial)
        _, engaged = engagement_interference(kin, load, geometry)
        if not engaged:
            out.append((kin, free))
            continue
        key = (kin.roller_type.sign * axial, radial)
        if key not in cache:
            try:
                cache[key] = solve_sector(key[0], key[1], geometry, stiffness)
            except NegativeInterference:
                cache[key] = None
            except NonConvergence as exc:
                raise NonConvergence(f"sector {kin.index}: {exc}", residuals=exc.residuals,
                                     sector=kin.index) from exc
            except WireRaceError as exc:
                raise type(exc)(f"sector {kin.index}: {exc}") from exc
        sol = cache[key]
        if sol is None:
            out.append((kin, free))
        else:
            out.append((replace(kin, friction_sign=sol.friction_sign, engaged=True), sol))
    return BearingSolution(out, global_reactions(out, geometry))
