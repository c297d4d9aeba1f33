"""Fit the three contact stiffness constants from probe force-deformation data.

Each record comes from a reduced model in which the roller is pushed by
``delta`` along the contact direction; ``f1``, ``f2`` are the wire-ring
reactions, ``f3`` the roller-wire force, and ``d1``, ``d2`` the components of
the wire-centre displacement. The roller-wire deformation is what remains of
``delta`` after the wire centre has moved.
"""

from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import ContactStiffness
from .errors import (DegenerateData, InsufficientData, LinearityWarning, NonPhysical)

CSV_HEADER = ("delta", "f1", "f2", "f3", "d1", "d2")
LINEARITY_THRESHOLD = 0.05


@dataclass(frozen=True)
class CalibrationRecord:
    delta: float
    f1: float
    f2: float
    f3: float
    d1: float
    d2: float

    def __post_init__(self):
        vals = (self.delta, self.f1, self.f2, self.f3, self.d1, self.d2)
        if not all(math.isfinite(v) for v in vals):
            raise NonPhysical("calibration record contains non-finite values")
        if self.delta <= 0.0:
            raise NonPhysical(f"applied displacement must be positive, got {self.delta}")
        if min(self.f1, self.f2, self.f3) < 0.0:
            raise NonPhysical("contact forces must be non-negative")
        if min(self.d1, self.d2) < 0.0:
            raise NonPhysical("wire-centre displacements must be non-negative")


@dataclass(frozen=True)
class StiffnessFit:
    stiffness: ContactStiffness
    deviation: tuple[float, float, float]  # max relative deviation per constant

    @property
    def max_deviation(self) -> float:
        return max(self.deviation)


def derive_delta3(record: CalibrationRecord) -> float:
    """Roller-wire deformation ``delta - |wire-centre displacement|``."""
    d3 = record.delta - math.hypot(record.d1, record.d2)
    if d3 <= 0.0:
        raise NonPhysical(
            f"wire-centre displacement {math.hypot(record.d1, record.d2):.6g} mm "
            f"is not smaller than the applied {record.delta:.6g} mm")
    return d3


def fit_through_origin(x, y) -> tuple[float, float]:
    """Least-squares slope of ``y = k*x`` and the max relative deviation of the data.

    The deviation is ``max |y_i - k*x_i| / |k*x_i|`` over points with ``x_i > 0``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    sxx = float(np.dot(x, x))
    if sxx == 0.0:
        raise DegenerateData("all deformations are zero")
    k = float(np.dot(x, y)) / sxx
    mask = x > 0.0
    pred = k * x[mask]
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.abs(y[mask] - pred) / np.abs(pred)
    dev = float(np.max(rel)) if rel.size and np.all(np.isfinite(rel)) else math.inf
    return k, dev


def fit_stiffness(records, threshold: float = LINEARITY_THRESHOLD) -> StiffnessFit:
    """Fit k1, k2, k3 as slopes through the origin.

    Issues a :class:`LinearityWarning` when any constant's data deviate from
    its line by more than ``threshold``.
    """
    records = list(records)
    if len(records) < 2 or len({r.delta for r in records}) < 2:
        raise InsufficientData("insufficient data: need at least two records with distinct delta")
    # sort so the result does not depend on record order (floating-point summation)
    records.sort(key=lambda r: (r.delta, r.d1, r.d2, r.f1, r.f2, r.f3))
    d1 = [r.d1 for r in records]
    d2 = [r.d2 for r in records]
    d3 = [derive_delta3(r) for r in records]
    fits = []
    for name, x, y in (("k1", d1, [r.f1 for r in records]),
                       ("k2", d2, [r.f2 for r in records]),
                       ("k3", d3, [r.f3 for r in records])):
        try:
            fits.append(fit_through_origin(x, y))
        except DegenerateData as exc:
            raise DegenerateData(f"{name}: {exc}") from exc
    ks = [k for k, _ in fits]
    if min(ks) <= 0.0:
        raise DegenerateData("fitted stiffness is not positive")
    fit = StiffnessFit(ContactStiffness(*ks), tuple(dev for _, dev in fits))
    if fit.max_deviation > threshold:
        warnings.warn(
            f"contact data deviate up to {100 * fit.max_deviation:.2f}% from linear "
            f"(threshold {100 * threshold:.0f}%)", LinearityWarning, stacklevel=2)
    return fit


def read_records(path) -> list[CalibrationRecord]:
    """Read ``delta,f1,f2,f3,d1,d2`` CSV (mm, N)."""
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            return []
        if tuple(h.strip().lower() for h in header) != CSV_HEADER:
            raise ValueError(f"expected header {','.join(CSV_HEADER)}, got {','.join(header)}")
        records = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(CSV_HEADER):
                raise ValueError(f"line {lineno}: expected {len(CSV_HEADER)} columns")
            try:
                records.append(CalibrationRecord(*(float(c) for c in row)))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from exc
    return records


def write_records(records, path) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow([repr(getattr(r, k)) for k in CSV_HEADER])


def synthetic_records(stiffness: ContactStiffness, deltas, alpha: float = math.radians(45.0),
                      noise: float = 0.0, rng=None) -> list[CalibrationRecord]:
    """Probe records consistent with linear contacts of the given stiffness.

    The roller is pushed by ``delta`` along ``alpha``; the wire sits between the
    roller-wire spring and the two wire-ring springs, so the springs share the
    push in proportion to their compliance. ``noise`` applies independent
    multiplicative noise ``1 + U(-noise, noise)`` to every force.
    """
    k1, k2, k3 = stiffness.k1, stiffness.k2, stiffness.k3
    c, s = math.cos(alpha), math.sin(alpha)
    # wire-centre displacement u along alpha: k3*(delta - u) = force on the wire,
    # balanced by k1*u*s (axial) and k2*u*c (radial) projected back on alpha
    k_wire = k1 * s * s + k2 * c * c
    out = []
    for delta in deltas:
        u = k3 * delta / (k3 + k_wire)
        dd1, dd2 = u * s, u * c
        f = np.array([k1 * dd1, k2 * dd2, k3 * (delta - u)])
        if noise:
            rng = np.random.default_rng() if rng is None else rng
            f = f * (1.0 + rng.uniform(-noise, noise, size=3))
        out.append(CalibrationRecord(float(delta), *map(float, f), dd1, dd2))
    return out
