import math

import numpy as np
import pytest

from wirerace.analysis import (DEFAULT_SWEEP_MAX, capacity_search, distribution,
                               moment_stiffness_per_degree, secant_stiffness, sweep)
from wirerace.core import REFERENCE_GEOMETRY as G
from wirerace.core import REFERENCE_STIFFNESS as K
from wirerace.core import LoadCase, RollerType
from wirerace.errors import InsufficientData, NotReached


@pytest.fixture(scope="module")
def sweeps():
    return {axis: sweep(axis, DEFAULT_SWEEP_MAX[axis], 11, G, K) for axis in DEFAULT_SWEEP_MAX}


def test_two_step_axial_sweep():
    t = sweep("axial", 0.05, 2, G, K)
    assert t.rows()[0] == (0.0, 0.0)
    assert t.rows()[1][0] == 0.05 and t.rows()[1][1] > 0


def test_sweep_arguments():
    with pytest.raises(ValueError):
        sweep("axial", 0.05, 1, G, K)
    with pytest.raises(ValueError):
        sweep("axial", 0.0, 3, G, K)
    with pytest.raises(ValueError):
        sweep("twist", 0.05, 3, G, K)


def test_secant_of_linear_table():
    assert secant_stiffness([(0, 0), (1, 2.5), (2, 5.0)]) == (2.5, 0.0)
    with pytest.raises(InsufficientData):
        secant_stiffness([(0, 0)])
    with pytest.raises(InsufficientData):
        secant_stiffness([(0, 0), (0, 0)])


def test_stiffness_values(sweeps):
    ka, _ = secant_stiffness(sweeps["axial"])
    kr, _ = secant_stiffness(sweeps["radial"])
    km, _ = secant_stiffness(sweeps["moment"])
    assert ka == pytest.approx(2538e3, rel=0.03)
    assert kr == pytest.approx(1269e3, rel=0.03)
    assert moment_stiffness_per_degree(km) == pytest.approx(977518, rel=0.03)
    assert kr / ka == pytest.approx(0.5, rel=0.01)


@pytest.mark.parametrize("axis", ["axial", "radial", "moment"])
def test_sweep_monotone_and_nearly_linear(sweeps, axis):
    t = sweeps[axis]
    assert np.all(np.diff(t.reaction) > 0)
    _, dev = secant_stiffness(t)
    assert dev <= 0.02


def test_radial_sweep_follows_direction():
    a = secant_stiffness(sweep("radial", 0.05, 5, G, K, direction=0.0))[0]
    b = secant_stiffness(sweep("radial", 0.05, 5, G, K, direction=1.234))[0]
    assert b == pytest.approx(a, rel=1e-3)


def test_distribution_axial():
    rows = distribution(LoadCase(axial_displacement=0.03), G, K)
    assert [r.angle for r in rows] == sorted(r.angle for r in rows)
    a = [r for r in rows if r.roller_type is RollerType.A]
    b = [r for r in rows if r.roller_type is RollerType.B]
    assert len({r.normal_force for r in a}) == 1 and a[0].normal_force > 0
    assert all(r.normal_force == 0.0 and not r.engaged for r in b)


def test_distribution_radial():
    rows = distribution(LoadCase(radial_displacement=0.03), G, K)
    peak = max(rows, key=lambda r: r.normal_force)
    assert peak.angle == 0.0
    for r in rows:
        delta = min(r.angle, 2 * math.pi - r.angle)
        if delta > math.pi / 2:
            assert r.normal_force == 0.0
        else:
            assert r.normal_force > 0.0


def test_distribution_moment():
    theta_m = 0.3
    rows = distribution(LoadCase(tilt_angle=1e-4, tilt_axis_direction=theta_m), G, K)
    for r in rows:
        s = math.sin(theta_m - r.angle)
        if r.engaged:
            assert (s > 0) == (r.roller_type is RollerType.A)
    peak = max(rows, key=lambda r: r.normal_force)
    # load peaks 90 degrees away from the tilt axis
    assert abs(abs(math.sin(theta_m - peak.angle)) - 1.0) < 1e-2


def test_capacity_tiny_limit():
    cap = capacity_search("axial", 1e-3, G, K)
    assert cap.displacement < 1e-7
    assert cap.max_normal_force == pytest.approx(1e-3, rel=1e-3)


@pytest.mark.parametrize("axis", ["axial", "radial", "moment"])
def test_capacity_doubling(axis):
    c1 = capacity_search(axis, 1000.0, G, K)
    c2 = capacity_search(axis, 2000.0, G, K)
    assert c2.load / c1.load == pytest.approx(2.0, rel=0.05)
    assert c1.max_normal_force == pytest.approx(1000.0, rel=1e-3)


def test_capacity_consistent_with_distribution():
    cap = capacity_search("axial", 1500.0, G, K)
    rows = distribution(LoadCase(axial_displacement=cap.displacement), G, K)
    assert max(r.normal_force for r in rows) == pytest.approx(cap.max_normal_force, rel=1e-12)


def test_capacity_not_reached():
    with pytest.raises(NotReached):
        capacity_search("axial", 1e7, G, K)
    with pytest.raises(ValueError):
        capacity_search("axial", 0.0, G, K)
