"""Quasi-static load distribution and stiffness of crossed-roller wire race bearings."""

from .analysis import (capacity_search, distribution, moment_stiffness_per_degree,
                       secant_stiffness, sweep)
from .assembly import (BearingSolution, distribute_displacements, engagement_interference,
                       solve_bearing)
from .calibration import CalibrationRecord, derive_delta3, fit_stiffness
from .core import (REFERENCE_GEOMETRY, REFERENCE_STIFFNESS, BearingGeometry, ContactStiffness,
                   GlobalReactions, LoadCase, RollerType, SectorKinematics, SectorSolution,
                   build_sectors, load_geometry, load_stiffness)
from .errors import (CalibrationError, DegenerateData, GeometryError, InsufficientData,
                     LinearityWarning, ModelValidityError, NegativeInterference, NonConvergence,
                     NonPhysical, NotReached, WireRaceError)
from .sector import friction_sign, recover_contact, sector_residuals, solve_sector

__version__ = "0.1.0"
