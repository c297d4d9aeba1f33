"""Domain types, unit/sign conventions and configuration I/O.

Units are mm, N and rad throughout the library. Configuration files store
angles in degrees; conversion happens only in :func:`load_geometry`,
:func:`dump_geometry` and the command-line layer.

Coordinate frame: ``y`` is the bearing axis, sector ``i`` sits at angle
``theta_i`` measured from ``x`` towards ``z`` in the mid-plane, so its
position is ``(R cos theta_i, 0, R sin theta_i)``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import GeometryError

TWO_PI = 2.0 * math.pi

GEOMETRY_FIELDS = (
    "roller_diameter",
    "pitch_diameter",
    "contact_diameter",
    "race_radius",
    "wire_diameter",
    "initial_contact_angle",
    "roller_count",
    "friction_coefficient",
)
STIFFNESS_FIELDS = ("k1", "k2", "k3")


def normalize_angle(angle: float) -> float:
    """Wrap an angle into ``[0, 2*pi)``."""
    a = math.fmod(angle, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    # fmod of a tiny negative number can round up to exactly 2*pi
    if a >= TWO_PI:
        a = 0.0
    return a


class RollerType(enum.Enum):
    A = "A"
    B = "B"

    @property
    def sign(self) -> int:
        """+1 for type A, -1 for type B (axial sense in which the roller loads)."""
        return 1 if self is RollerType.A else -1


@dataclass(frozen=True)
class BearingGeometry:
    """Crossed-roller wire race bearing dimensions.

    Parameters
    ----------
    roller_diameter : float
        Roller diameter D_w [mm]. Stored only, no equation uses it.
    pitch_diameter : float
        Mean bearing diameter D_pw [mm].
    contact_diameter : float
        Distance across the roller between its two wire contacts, D_cw [mm].
    race_radius : float
        Wire race radius R_c [mm]. Stored only.
    wire_diameter : float
        Wire diameter lambda [mm].
    initial_contact_angle : float
        Unloaded contact angle alpha0 [rad].
    roller_count : int
        Number of rollers, even, alternating type A / type B.
    friction_coefficient : float
        Wire-ring friction coefficient mu.
    """

    roller_diameter: float
    pitch_diameter: float
    contact_diameter: float
    race_radius: float
    wire_diameter: float
    initial_contact_angle: float
    roller_count: int
    friction_coefficient: float = 0.0

    def __post_init__(self):
        for name in ("roller_diameter", "pitch_diameter", "contact_diameter",
                     "race_radius", "wire_diameter"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise GeometryError(f"{name} must be a positive finite length, got {v!r}")
        if not 0.0 < self.initial_contact_angle < 0.5 * math.pi:
            raise GeometryError("initial_contact_angle must lie in (0, pi/2) rad")
        n = self.roller_count
        if isinstance(n, bool) or int(n) != n:
            raise GeometryError(f"roller_count must be an integer, got {n!r}")
        object.__setattr__(self, "roller_count", int(n))
        if self.roller_count < 2 or self.roller_count % 2:
            raise GeometryError("roller_count must be even and >= 2")
        if not 0.0 <= self.friction_coefficient < 1.0:
            raise GeometryError("friction_coefficient must lie in [0, 1)")
        if not self.contact_diameter < self.pitch_diameter:
            raise GeometryError("contact_diameter must be smaller than pitch_diameter")
        if not self.wire_diameter < self.contact_diameter:
            raise GeometryError("wire_diameter must be smaller than contact_diameter")

    @property
    def pitch_radius(self) -> float:
        return 0.5 * self.pitch_diameter

    @property
    def sector_pitch(self) -> float:
        return TWO_PI / self.roller_count


@dataclass(frozen=True)
class ContactStiffness:
    """Linear contact constants [N/mm]: wire-ring horizontal (k1), wire-ring vertical (k2), roller-wire (k3)."""

    k1: float
    k2: float
    k3: float

    def __post_init__(self):
        for name in STIFFNESS_FIELDS:
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise GeometryError(f"{name} must be positive and finite, got {v!r}")


@dataclass(frozen=True)
class LoadCase:
    """Imposed displacement of the free ring.

    ``axial_displacement`` is positive in the direction that compresses type A
    rollers. ``radial_displacement`` is a magnitude acting along
    ``radial_direction``. The ring tilts by ``tilt_angle`` about the in-plane
    axis ``(cos tilt_axis_direction, 0, sin tilt_axis_direction)``.
    """

    axial_displacement: float = 0.0
    radial_displacement: float = 0.0
    radial_direction: float = 0.0
    tilt_angle: float = 0.0
    tilt_axis_direction: float = 0.0

    def __post_init__(self):
        for name in ("axial_displacement", "radial_displacement", "radial_direction",
                     "tilt_angle", "tilt_axis_direction"):
            if not math.isfinite(getattr(self, name)):
                raise GeometryError(f"{name} must be finite")
        if self.radial_displacement < 0.0:
            raise GeometryError("radial_displacement is a magnitude; put the sense in radial_direction")
        object.__setattr__(self, "radial_direction", normalize_angle(self.radial_direction))
        object.__setattr__(self, "tilt_axis_direction", normalize_angle(self.tilt_axis_direction))

    @property
    def is_zero(self) -> bool:
        return (self.axial_displacement == 0.0 and self.radial_displacement == 0.0
                and self.tilt_angle == 0.0)


@dataclass(frozen=True)
class SectorKinematics:
    index: int
    angle: float
    roller_type: RollerType
    axial: float = 0.0
    radial: float = 0.0
    friction_sign: int = 0
    engaged: bool = False


@dataclass(frozen=True)
class SectorSolution:
    """Converged state of one roller-wire-ring sector.

    ``delta1``/``delta2`` are the wire-ring interferences (horizontal and
    vertical contact), ``delta3`` the roller-wire interference, ``alpha`` the
    loaded contact angle. ``normal_force`` is the roller-wire force projected on
    the contact normal; ``total_force`` and ``total_angle`` describe the full
    roller-wire force including the friction contribution.
    """

    delta1: float
    delta2: float
    delta3: float
    alpha: float
    n1: float
    n2: float
    total_force: float
    total_angle: float
    normal_force: float
    friction_sign: int = 0
    friction_coefficient: float = 0.0

    @classmethod
    def disengaged(cls, alpha0: float) -> "SectorSolution":
        return cls(0.0, 0.0, 0.0, alpha0, 0.0, 0.0, 0.0, 0.0, 0.0)

    @property
    def horizontal_force(self) -> float:
        """Radial component of the wire reaction, ``N2 + s*mu*N1``."""
        return self.n2 + self.friction_sign * self.friction_coefficient * self.n1

    @property
    def vertical_force(self) -> float:
        """Axial component of the wire reaction, ``N1 - s*mu*N2``."""
        return self.n1 - self.friction_sign * self.friction_coefficient * self.n2


@dataclass(frozen=True)
class GlobalReactions:
    """Bearing reactions; forces in N, moments in N*mm, ``fy`` along the axis."""

    fx: float = 0.0
    fy: float = 0.0
    fz: float = 0.0
    mx: float = 0.0
    mz: float = 0.0

    @property
    def tilting_moment(self) -> float:
        return math.hypot(self.mx, self.mz)

    @property
    def tilting_axis(self) -> float:
        """Direction of the resultant tilting moment in the mid-plane [rad]."""
        if self.mx == 0.0 and self.mz == 0.0:
            return 0.0
        return normalize_angle(math.atan2(self.mz, self.mx))

    def radial_component(self, direction: float) -> float:
        return self.fx * math.cos(direction) + self.fz * math.sin(direction)

    def moment_about(self, direction: float) -> float:
        """Moment component about the in-plane axis at ``direction``."""
        return self.mx * math.cos(direction) + self.mz * math.sin(direction)


def build_sectors(geometry: BearingGeometry) -> list[SectorKinematics]:
    """Equally spaced sectors, type A at index 0 and types alternating after that."""
    n = geometry.roller_count
    if n < 2 or n % 2:
        raise GeometryError("roller_count must be even and >= 2")
    return [
        SectorKinematics(i, TWO_PI * i / n, RollerType.A if i % 2 == 0 else RollerType.B)
        for i in range(n)
    ]


# Reference bearing from the validation case: 420 mm pitch diameter, 94 rollers.
REFERENCE_GEOMETRY = BearingGeometry(
    roller_diameter=14.0,
    pitch_diameter=420.0,
    contact_diameter=18.0,
    race_radius=3.9,
    wire_diameter=8.0,
    initial_contact_angle=math.radians(45.0),
    roller_count=94,
    friction_coefficient=0.1,
)
REFERENCE_STIFFNESS = ContactStiffness(k1=372509.0, k2=368393.0, k3=447544.0)


# -- configuration files ------------------------------------------------------

def _read_json(path) -> dict:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise GeometryError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise GeometryError(f"{path}: expected a JSON object")
    return data


def geometry_from_dict(data: dict) -> BearingGeometry:
    missing = [k for k in GEOMETRY_FIELDS if k not in data and k != "friction_coefficient"]
    if missing:
        raise GeometryError(f"missing geometry fields: {', '.join(missing)}")
    kw = {k: data[k] for k in GEOMETRY_FIELDS if k in data}
    try:
        kw = {k: (int(v) if k == "roller_count" else float(v)) for k, v in kw.items()}
    except (TypeError, ValueError) as exc:
        raise GeometryError(f"non-numeric geometry value: {exc}") from exc
    if data.get("roller_count") != kw["roller_count"]:
        raise GeometryError("roller_count must be an integer")
    kw["initial_contact_angle"] = math.radians(kw["initial_contact_angle"])
    return BearingGeometry(**kw)


def geometry_to_dict(geometry: BearingGeometry) -> dict:
    d = asdict(geometry)
    d["initial_contact_angle"] = math.degrees(geometry.initial_contact_angle)
    return d


def stiffness_from_dict(data: dict) -> ContactStiffness:
    missing = [k for k in STIFFNESS_FIELDS if k not in data]
    if missing:
        raise GeometryError(f"missing stiffness fields: {', '.join(missing)}")
    try:
        return ContactStiffness(*(float(data[k]) for k in STIFFNESS_FIELDS))
    except (TypeError, ValueError) as exc:
        raise GeometryError(f"non-numeric stiffness value: {exc}") from exc


def load_geometry(path) -> BearingGeometry:
    """Read a geometry file (JSON object, lengths in mm, angle in degrees)."""
    return geometry_from_dict(_read_json(path))


def load_stiffness(path) -> ContactStiffness:
    return stiffness_from_dict(_read_json(path))


def dump_geometry(geometry: BearingGeometry, path) -> None:
    Path(path).write_text(json.dumps(geometry_to_dict(geometry), indent=2) + "\n")


def dump_stiffness(stiffness: ContactStiffness, path, **extra) -> None:
    """Write ``k1``, ``k2``, ``k3``; any ``extra`` keys (fit diagnostics) are appended."""
    data = {k: getattr(stiffness, k) for k in STIFFNESS_FIELDS}
    data.update(extra)
    Path(path).write_text(json.dumps(data, indent=2) + "\n")
