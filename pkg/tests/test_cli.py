import json
import math

import pytest

from longmap.cli import main
from longmap.longitudes import wrap_angle
from longmap.tangles import fig8, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_lift_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "lift")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_mirror(capsys):
    code, out, _ = run(capsys, "verify", "mirror")
    assert code == 0
    assert "mirror" in out


def test_color_fig8_two_seeds(capsys):
    code, out, _ = run(capsys, "color", "--knot", "fig8", "--psi", "2.513")
    assert code == 0
    assert "2 nontrivial seed(s)" in out


def test_color_torus7_three_seeds(capsys):
    code, out, _ = run(capsys, "color", "--knot", "torus:7",
                       "--psi", "2.827")
    assert code == 0
    assert "3 nontrivial seed(s)" in out


def test_color_outside_interval(capsys):
    code, out, _ = run(capsys, "color", "--knot", "fig8", "--psi", "1.571")
    assert code == 0
    assert "0 nontrivial seed(s)" in out


def test_color_json(capsys):
    code, out, _ = run(capsys, "color", "--knot", "torus:3", "--psi", "3.0",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["seeds"]) == 1
    assert len(payload["seeds"][0]["colors"]) == 4


def test_color_degrees(capsys):
    code, out, _ = run(capsys, "color", "--knot", "fig8", "--psi", "180",
                       "--deg")
    assert code == 0
    assert "2 nontrivial seed(s)" in out


def test_color_from_file(tmp_path, capsys):
    path = tmp_path / "fig8.tangle"
    path.write_text(serialize(fig8()))
    code, out, _ = run(capsys, "color", "--file", str(path), "--psi", "3.0")
    assert code == 0
    assert "2 nontrivial seed(s)" in out


def test_unknown_knot_exits_two(capsys):
    code, _, err = run(capsys, "color", "--knot", "granny", "--psi", "3.0")
    assert code == 2
    assert "error" in err


def test_missing_source_exits_two(capsys):
    code, _, err = run(capsys, "color", "--psi", "3.0")
    assert code == 2


def test_sweep_torus3_phi_column(tmp_path, capsys):
    out_path = tmp_path / "t3.csv"
    code, _, _ = run(
        capsys, "sweep", "--knot", "torus:3",
        "--theta-min", "0.6", "--theta-max", "2.5",
        "--steps", "40", "--out", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "theta,branch,beta,L_re,L_im,phi"
    seen = 0
    for row in lines[1:]:
        theta_s, branch, beta, l_re, l_im, phi = row.split(",")
        if beta == "":
            continue
        seen += 1
        theta = float(theta_s)
        assert abs(float(phi) - wrap_angle(math.pi - 6 * theta)) <= 1e-9
        assert abs(float(l_re) - math.cos(float(phi))) <= 1e-12
        assert abs(float(l_im) - math.sin(float(phi))) <= 1e-12
    assert seen >= 30


def test_sweep_marks_uncolorable_rows(capsys):
    code, out, _ = run(
        capsys, "sweep", "--knot", "torus:3",
        "--theta-min", "0.1", "--theta-max", "0.4", "--steps", "4",
    )
    assert code == 0
    body = out.splitlines()[1:]
    assert all(row.endswith(",,,,") for row in body)


def test_sweep_fig8_branches(capsys):
    code, out, _ = run(
        capsys, "sweep", "--knot", "fig8",
        "--theta-min", str(math.pi / 3), "--theta-max", str(2 * math.pi / 3),
        "--steps", "11",
    )
    assert code == 0
    rows = [r.split(",") for r in out.splitlines()[1:]]
    assert len(rows) == 22
    branch1 = {r[0]: r for r in rows if r[1] == "1" and r[2]}
    branch2 = {r[0]: r for r in rows if r[1] == "2" and r[2]}
    for theta, r1 in branch1.items():
        r2 = branch2[theta]
        # conjugate branches: equal real parts, opposite imaginary parts
        assert abs(float(r1[3]) - float(r2[3])) <= 1e-9
        assert abs(float(r1[4]) + float(r2[4])) <= 1e-9


def test_sweep_deterministic(capsys):
    args = ("sweep", "--knot", "fig8", "--theta-min", "1.1",
            "--theta-max", "2.0", "--steps", "25")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_sweep_bad_range(capsys):
    code, _, err = run(capsys, "sweep", "--knot", "fig8",
                       "--theta-min", "2.0", "--theta-max", "1.0")
    assert code == 2


def test_intervals_table(capsys):
    code, out, _ = run(capsys, "intervals", "7")
    assert code == 0
    body = [l for l in out.splitlines() if l.strip() and l.lstrip()[0].isdigit()]
    assert len(body) == 3


def test_intervals_json(capsys):
    code, out, _ = run(capsys, "intervals", "9", "--json")
    assert code == 0
    rows = json.loads(out)
    assert [r["h"] for r in rows] == [1, 2, 3, 4]
    assert abs(rows[0]["psi"][0] - 7 * math.pi / 9) < 1e-12


def test_intervals_n3(capsys):
    code, out, _ = run(capsys, "intervals", "3", "--json")
    rows = json.loads(out)
    assert len(rows) == 1
    assert abs(rows[0]["psi"][0] - math.pi / 3) < 1e-12
    assert abs(rows[0]["psi"][1] - 5 * math.pi / 3) < 1e-12


def test_intervals_bad_n(capsys):
    code, _, err = run(capsys, "intervals", "6")
    assert code == 2
