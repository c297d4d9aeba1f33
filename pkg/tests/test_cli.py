import io
import json

import pytest

from wirerace.calibration import synthetic_records, write_records
from wirerace.cli import main
from wirerace.core import REFERENCE_GEOMETRY, REFERENCE_STIFFNESS, dump_geometry, dump_stiffness


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def configs(tmp_path):
    g, k = tmp_path / "geometry.json", tmp_path / "stiffness.json"
    dump_geometry(REFERENCE_GEOMETRY, g)
    dump_stiffness(REFERENCE_STIFFNESS, k)
    return str(g), str(k)


def test_calibrate_reference(tmp_path):
    csv_path, out_path = tmp_path / "probe.csv", tmp_path / "k.json"
    write_records(synthetic_records(REFERENCE_STIFFNESS, [0.002, 0.004, 0.006, 0.008]), csv_path)
    code, out, err = run(["calibrate", "--input", str(csv_path), "--out", str(out_path)])
    assert code == 0, err
    k = json.loads(out_path.read_text())
    assert k["k1"] == pytest.approx(372509, rel=1e-12)
    assert k["k2"] == pytest.approx(368393, rel=1e-12)
    assert k["k3"] == pytest.approx(447544, rel=1e-12)


def test_calibrate_empty(tmp_path):
    p = tmp_path / "empty.csv"
    p.write_text("delta,f1,f2,f3,d1,d2\n")
    code, _, err = run(["calibrate", "--input", str(p), "--out", str(tmp_path / "k.json")])
    assert code == 3
    assert "insufficient data" in err


def test_calibrate_parse_error(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("delta,f1,f2,f3,d1,d2\n0.01,x,1,1,0,0\n")
    code, _, _ = run(["calibrate", "--input", str(p), "--out", str(tmp_path / "k.json")])
    assert code == 2
    code, _, _ = run(["calibrate", "--input", str(tmp_path / "missing.csv"), "--out", "k.json"])
    assert code == 2


def test_calibrate_linearity_warning(tmp_path):
    recs = synthetic_records(REFERENCE_STIFFNESS, [0.002, 0.004, 0.006])
    recs[0] = type(recs[0])(recs[0].delta, recs[0].f1 * 1.2, recs[0].f2, recs[0].f3, recs[0].d1, recs[0].d2)
    p = tmp_path / "p.csv"
    write_records(recs, p)
    code, _, err = run(["calibrate", "--input", str(p), "--out", str(tmp_path / "k.json")])
    assert code == 0
    assert "warning" in err


def test_solve_zero(configs, tmp_path):
    g, k = configs
    code, out, _ = run(["solve", "--geometry", g, "--stiffness", k, "--out", str(tmp_path / "s.csv")])
    assert code == 0
    for name in ("Fx", "Fy", "Fz"):
        assert f"{name} = 0 N" in out
    assert "Mx = 0 N*mm = 0 N*m" in out
    lines = (tmp_path / "s.csv").read_text().splitlines()
    assert len(lines) == 95


def test_solve_axial(configs, tmp_path):
    g, k = configs
    code, out, _ = run(["solve", "--geometry", g, "--stiffness", k, "--axial", "0.05",
                        "--out", str(tmp_path / "s.csv")])
    assert code == 0
    fy = float(out.split("Fy = ")[1].split()[0])
    assert fy / 0.05 == pytest.approx(2538e3, rel=0.03)


def test_solve_missing_geometry(configs, tmp_path):
    _, k = configs
    code, _, err = run(["solve", "--geometry", str(tmp_path / "nope.json"), "--stiffness", k])
    assert code == 2
    assert "error" in err


def test_solve_solver_error(configs):
    g, k = configs
    code, _, err = run(["solve", "--geometry", g, "--stiffness", k, "--axial", "20"])
    assert code == 4
    assert "sector" in err


def test_solve_negative_radial_is_input_error():
    code, _, _ = run(["solve", "--radial", "-0.1"])
    assert code == 2


@pytest.mark.parametrize("axis, maximum, target, unit", [
    ("axial", "0.05", 2538e3, "N/mm"),
    ("radial", "0.05", 1269e3, "N/mm"),
    ("moment", "0.0143", 977518, "N*m/deg"),
])
def test_sweep_summary(configs, tmp_path, axis, maximum, target, unit):
    g, k = configs
    summary = tmp_path / "summary.json"
    code, _, err = run(["sweep", "--geometry", g, "--stiffness", k, "--axis", axis, "--max", maximum,
                        "--steps", "6", "--out", str(tmp_path / "sweep.csv"), "--summary", str(summary)])
    assert code == 0, err
    data = json.loads(summary.read_text())
    assert data["unit"] == unit
    assert data["stiffness"] == pytest.approx(target, rel=0.03)
    assert len((tmp_path / "sweep.csv").read_text().splitlines()) == 7


def test_sweep_needs_two_steps():
    code, _, _ = run(["sweep", "--axis", "axial", "--max", "0.05", "--steps", "1"])
    assert code == 2


def test_bad_axis_is_usage_error():
    code, _, _ = run(["sweep", "--axis", "torsion", "--max", "0.05"])
    assert code == 2


def test_outputs_are_byte_identical(configs, tmp_path):
    g, k = configs
    args = ["solve", "--geometry", g, "--stiffness", k, "--axial", "0.01", "--radial", "0.02",
            "--theta-r", "30", "--moment", "0.005", "--theta-m", "100"]
    a = run(args + ["--out", str(tmp_path / "a.csv")])
    b = run(args + ["--out", str(tmp_path / "b.csv")])
    assert a[1] == b[1]
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    s1 = run(["sweep", "--axis", "radial", "--max", "0.04", "--steps", "5"])
    s2 = run(["sweep", "--axis", "radial", "--max", "0.04", "--steps", "5"])
    assert s1 == s2
