"""Exception hierarchy shared by the solver, calibration and analysis modules."""


class WireRaceError(Exception):
    """Base class for every error raised by :mod:`wirerace`."""


class GeometryError(WireRaceError, ValueError):
    """Invalid bearing geometry, stiffness or load definition."""


class NonConvergence(WireRaceError):
    """Sector iteration budget exhausted.

    ``residuals`` holds the last residual vector, ``sector`` the sector index
    when raised from the whole-bearing solve.
    """

    def __init__(self, message, residuals=None, sector=None):
        super().__init__(message)
        self.residuals = residuals
        self.sector = sector


class NegativeInterference(WireRaceError):
    """A converged sector root has a clearly negative interference."""

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution


class ModelValidityError(WireRaceError):
    """Roller-wire interference beyond the range the linear contact model covers."""


class CalibrationError(WireRaceError):
    pass


class InsufficientData(CalibrationError):
    pass


class DegenerateData(CalibrationError):
    pass


class NonPhysical(CalibrationError):
    pass


class NotReached(WireRaceError):
    """Capacity search could not reach the requested normal-force limit."""


class LinearityWarning(UserWarning):
    """Data deviates from a straight line through the origin by more than the threshold."""
