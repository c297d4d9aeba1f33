"""Equilibrium of a single roller-wire-ring sector.

Unknowns are ``x = (delta1, delta2, delta3, alpha)``: the wire-ring
interferences on the horizontal and vertical ring faces, the roller-wire
interference and the loaded contact angle. The four equations are the
roller-wire force balance along the contact normal, two compatibility
relations (radial and axial) and the moment balance of the wire.

Friction acts at the wire-ring contacts and opposes wire twisting. Its sense
``s`` is frozen from the imposed displacements before solving. A twisting
wire drags both friction forces the same way round, so in the force
components the friction adds to the radial reaction and subtracts from the
axial one::

    H = N2 + s*mu*N1        (radial component)
    V = N1 - s*mu*N2        (axial component)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .core import BearingGeometry, ContactStiffness, SectorSolution
from .errors import ModelValidityError, NegativeInterference, NonConvergence

SIGN_BAND = 1e-12  # mm, friction-sign equality band
CLAMP_BAND = 1e-9  # mm, tolerated negative interference at a root
RESIDUAL_TOL = 1e-10
MAX_ITER = 100


def friction_sign(axial: float, radial: float, alpha0: float, eps: float = SIGN_BAND) -> int:
    """+1 when the axial displacement dominates, -1 when the radial one does, 0 on the boundary."""
    t = axial - radial * math.tan(alpha0)
    if abs(t) <= eps:
        return 0
    return 1 if t > 0.0 else -1


@dataclass(frozen=True)
class SectorResiduals:
    r_force: float
    r_radial: float
    r_axial: float
    r_moment: float

    def as_array(self) -> np.ndarray:
        return np.array([self.r_force, self.r_radial, self.r_axial, self.r_moment])

    def scaled(self, geometry: BearingGeometry, stiffness: ContactStiffness) -> np.ndarray:
        return self.as_array() / residual_scales(geometry, stiffness)


def residual_scales(geometry: BearingGeometry, stiffness: ContactStiffness) -> np.ndarray:
    """Characteristic magnitudes (N, mm, mm, N*mm) used to compare the mixed-unit residuals."""
    length = geometry.contact_diameter
    force = max(stiffness.k1, stiffness.k2, stiffness.k3) * length
    return np.array([force, length, length, force * length])


def _residual_vector(x, axial, radial, s, geometry, stiffness):
    d1, d2, d3, a = x
    k1, k2, k3 = stiffness.k1, stiffness.k2, stiffness.k3
    p = s * geometry.friction_coefficient
    half_d = 0.5 * geometry.contact_diameter
    half_w = 0.5 * geometry.wire_diameter
    a0 = geometry.initial_contact_angle
    n1 = k1 * d1
    n2 = k2 * d2
    arm = half_d - d3
    c, sn = math.cos(a), math.sin(a)
    return np.array([
        (n2 + p * n1) * c + (n1 - p * n2) * sn - k3 * d3,
        0.5 * radial - d2 + arm * c - half_d * math.cos(a0),
        0.5 * axial - d1 + arm * sn - half_d * math.sin(a0),
        n2 * arm * sn
        + p * n1 * ((half_w - d1) + arm * sn)
        + p * n2 * ((half_w - d2) + arm * c)
        - n1 * arm * c,
    ])


def sector_residuals(x, axial: float, radial: float, s: int,
                     geometry: BearingGeometry, stiffness: ContactStiffness) -> SectorResiduals:
    """Evaluate the four sector equations at ``x = (delta1, delta2, delta3, alpha)``."""
    return SectorResiduals(*_residual_vector(x, axial, radial, s, geometry, stiffness))


def sector_jacobian(x, s: int, geometry: BearingGeometry, stiffness: ContactStiffness) -> np.ndarray:
    """Analytic derivative of the residual vector with respect to ``x``."""
    d1, d2, d3, a = x
    k1, k2, k3 = stiffness.k1, stiffness.k2, stiffness.k3
    p = s * geometry.friction_coefficient
    half_d = 0.5 * geometry.contact_diameter
    half_w = 0.5 * geometry.wire_diameter
    n1 = k1 * d1
    n2 = k2 * d2
    arm = half_d - d3
    c, sn = math.cos(a), math.sin(a)
    h = n2 + p * n1
    v = n1 - p * n2
    jac = np.empty((4, 4))
    jac[0] = (k1 * (p * c + sn), k2 * (c - p * sn), -k3, -h * sn + v * c)
    jac[1] = (0.0, -1.0, -c, -arm * sn)
    jac[2] = (-1.0, 0.0, -sn, arm * c)
    jac[3] = (
        p * k1 * ((half_w - d1) + arm * sn) - p * n1 - k1 * arm * c,
        k2 * arm * sn + p * k2 * ((half_w - d2) + arm * c) - p * n2,
        -n2 * sn - p * n1 * sn - p * n2 * c + n1 * c,
        n2 * arm * c + p * n1 * arm * c - p * n2 * arm * sn + n1 * arm * sn,
    )
    return jac


def initial_guess(axial, radial, geometry, stiffness) -> np.ndarray:
    a0 = geometry.initial_contact_angle
    d1 = max(0.5 * axial, 0.0)
    d2 = max(0.5 * radial, 0.0)
    d3 = (stiffness.k1 * d1 * math.sin(a0) + stiffness.k2 * d2 * math.cos(a0)) / stiffness.k3
    return np.array([d1, d2, d3, a0])


def newton_solve(axial, radial, s, geometry, stiffness, x0=None,
                 tol=RESIDUAL_TOL, max_iter=MAX_ITER):
    """Damped Newton iteration on the sector equations.

    Returns ``(x, scaled_residuals, converged)``. Steps are halved until the
    scaled residual norm decreases (at most 30 halvings).
    """
    scales = residual_scales(geometry, stiffness)
    x = initial_guess(axial, radial, geometry, stiffness) if x0 is None else np.array(x0, float)
    r = _residual_vector(x, axial, radial, s, geometry, stiffness) / scales
    norm = np.max(np.abs(r))
    step_scale = np.array([scales[1], scales[1], scales[1], 1.0])
    for _ in range(max_iter):
        jac = sector_jacobian(x, s, geometry, stiffness) / scales[:, None]
        try:
            dx = np.linalg.solve(jac, -r)
        except np.linalg.LinAlgError:
            return x, r, False
        lam = 1.0
        for _ in range(30):
            x_new = x + lam * dx
            r_new = _residual_vector(x_new, axial, radial, s, geometry, stiffness) / scales
            norm_new = np.max(np.abs(r_new))
            if norm_new < norm or norm_new <= tol:
                break
            lam *= 0.5
        x, r, norm = x_new, r_new, norm_new
        if norm <= tol and np.max(np.abs(lam * dx) / step_scale) <= 1e-13:
            return x, r, True
    return x, r, norm <= tol


def _delta3_at_angle(a, axial, radial, s, geometry, stiffness):
    """Eliminate delta1, delta2 (compatibility) and solve the force balance for delta3."""
    k1, k2, k3 = stiffness.k1, stiffness.k2, stiffness.k3
    p = s * geometry.friction_coefficient
    half_d = 0.5 * geometry.contact_diameter
    a0 = geometry.initial_contact_angle
    c, sn = math.cos(a), math.sin(a)
    base1 = 0.5 * axial + half_d * (sn - math.sin(a0))
    base2 = 0.5 * radial + half_d * (c - math.cos(a0))
    u1 = k1 * (p * c + sn)
    u2 = k2 * (c - p * sn)
    d3 = (u1 * base1 + u2 * base2) / (u1 * sn + u2 * c + k3)
    return np.array([base1 - d3 * sn, base2 - d3 * c, d3, a])


def grid_solve(axial, radial, s, geometry, stiffness, half_width=0.3, points=2001):
    """Bracketing fallback: scan the contact angle, bisect the wire moment balance.

    For every trial angle the remaining unknowns follow in closed form, so the
    system collapses to one scalar equation in ``alpha``. Among the sign
    changes found on the grid the physically admissible root nearest to
    ``alpha0`` is refined to machine precision.
    """
    a0 = geometry.initial_contact_angle
    lo = max(a0 - half_width, 1e-6)
    hi = min(a0 + half_width, 0.5 * math.pi - 1e-6)

    def moment(a):
        x = _delta3_at_angle(a, axial, radial, s, geometry, stiffness)
        return _residual_vector(x, axial, radial, s, geometry, stiffness)[3]

    grid = np.linspace(lo, hi, points)
    values = np.array([moment(a) for a in grid])
    candidates = []
    for i in range(points - 1):
        if values[i] == 0.0:
            root = grid[i]
        elif values[i] * values[i + 1] < 0.0:
            root = brentq(moment, grid[i], grid[i + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps)
        else:
            continue
        x = _delta3_at_angle(root, axial, radial, s, geometry, stiffness)
        if np.all(x[:3] >= -CLAMP_BAND):
            candidates.append(x)
    if not candidates:
        return None
    return min(candidates, key=lambda x: abs(x[3] - a0))


def recover_contact(n1: float, n2: float, s: int, mu: float, alpha: float):
    """Total roller-wire force, its direction, and its component on the contact normal.

    Returns ``(total_force, total_angle, normal_force)``. When both force
    components vanish the direction is undefined; ``(0, alpha, 0)`` is returned.
    """
    h = n2 + s * mu * n1
    v = n1 - s * mu * n2
    if h == 0.0 and v == 0.0:
        return 0.0, alpha, 0.0
    total = math.hypot(v, h)
    angle = math.atan2(v, h)
    return total, angle, total * math.cos(angle - alpha)


def solve_sector(axial: float, radial: float, geometry: BearingGeometry,
                 stiffness: ContactStiffness, *, tol: float = RESIDUAL_TOL,
                 max_iter: int = MAX_ITER, fallback: bool = True) -> SectorSolution:
    """Solve one engaged sector for the sector displacements ``(axial, radial)`` [mm].

    Raises
    ------
    NonConvergence
        Newton and the bracketing fallback both failed.
    NegativeInterference
        The root has an interference below ``-1e-9`` mm; the sector is not in contact.
    ModelValidityError
        The roller-wire interference reaches a quarter of the contact diameter.
    """
    s = friction_sign(axial, radial, geometry.initial_contact_angle)
    x, r, ok = newton_solve(axial, radial, s, geometry, stiffness, tol=tol, max_iter=max_iter)
    negative_root = x.copy() if ok and np.any(x[:3] < -CLAMP_BAND) else None
    if negative_root is not None:
        # Newton may land on a non-physical branch; the bracket search only accepts admissible roots
        ok = False
    if not ok and fallback:
        xg = grid_solve(axial, radial, s, geometry, stiffness)
        if xg is not None:
            x, r, ok = newton_solve(axial, radial, s, geometry, stiffness, x0=xg, tol=tol, max_iter=10)
            if not ok:
                x = xg
                r = _residual_vector(x, axial, radial, s, geometry, stiffness) / residual_scales(geometry, stiffness)
                ok = np.max(np.abs(r)) <= tol
    if not ok and negative_root is not None:
        return _finish(negative_root, s, geometry, stiffness)  # raises NegativeInterference
    if not ok:
        raise NonConvergence(
            f"sector equations did not converge (axial={axial!r}, radial={radial!r}); "
            f"scaled residuals {r.tolist()}", residuals=r)
    return _finish(x, s, geometry, stiffness)


def _finish(x, s, geometry, stiffness) -> SectorSolution:
    d1, d2, d3, a = (float(v) for v in x)
    if d3 >= 0.25 * geometry.contact_diameter:
        raise ModelValidityError(
            f"roller-wire interference {d3:.6g} mm exceeds a quarter of the contact diameter")
    mu = geometry.friction_coefficient
    n1, n2 = stiffness.k1 * d1, stiffness.k2 * d2
    if min(d1, d2, d3) < -CLAMP_BAND:
        total, angle, normal = recover_contact(n1, n2, s, mu, a)
        raw = SectorSolution(d1, d2, d3, a, n1, n2, total, angle, normal, s, mu)
        raise NegativeInterference(
            f"negative interference at the root: ({d1:.3e}, {d2:.3e}, {d3:.3e}) mm", solution=raw)
    d1, d2, d3 = max(d1, 0.0), max(d2, 0.0), max(d3, 0.0)
    n1, n2 = stiffness.k1 * d1, stiffness.k2 * d2
    total, angle, normal = recover_contact(n1, n2, s, mu, a)
    return SectorSolution(d1, d2, d3, a, n1, n2, total, angle, normal, s, mu)
