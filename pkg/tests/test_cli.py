import csv
import io
import math

import pytest

from gaspin import cli
from gaspin.core import EUCLIDEAN4, Multivector
from gaspin.quatrep import matrix_residual, rep_vec


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_passes_and_is_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, ["verify", "--seed", "7", "--cases", "40"])
    code2, out2, _ = run_cli(capsys, ["verify", "--seed", "7", "--cases", "40"])
    assert code1 == 0 and code2 == 0
    assert out1 == out2
    suites = [ln for ln in out1.splitlines() if ln.startswith("suite=")]
    assert len(suites) >= 12
    assert sorted(suites) == suites
    assert "status=fail" not in out1


def test_verify_rejects_zero_cases(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--cases", "0"])
    assert exc.value.code == 2


def test_table_pauli(capsys):
    code, out, _ = run_cli(capsys, ["table", "--signature", "3,0"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 9 and len(rows[0]) == 9
    header = rows[0]
    e1_col = header.index("e1")
    e1_row = next(r for r in rows[1:] if r[0] == "e1")
    assert e1_row[e1_col] == "+1"


def test_table_spacetime_metric_sign(capsys):
    code, out, _ = run_cli(capsys, ["table", "--signature", "1,3"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    header = rows[0]
    g1_col = header.index("g1")
    g1_row = next(r for r in rows[1:] if r[0] == "g1")
    assert g1_row[g1_col] == "-1"


def test_table_consistent_with_representation(capsys):
    # Row e0 of the Cl(4,0) table must reproduce the representation algebra:
    # rep(e0) rep(b) = sign * rep(blade) for each entry.
    code, out, _ = run_cli(capsys, ["table", "--signature", "4,0"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    header = rows[0][1:]
    name_to_mask = {name: mask for mask, name in enumerate(header)}
    e0_row = next(r for r in rows[1:] if r[0] == "e0")
    e0 = Multivector.basis(EUCLIDEAN4, 0)
    for name, cell in zip(header, e0_row[1:]):
        sign = 1.0 if cell[0] == "+" else -1.0
        target = name_to_mask[cell[1:]]
        lhs = rep_vec(e0) * rep_vec(Multivector.blade(EUCLIDEAN4, name_to_mask[name]))
        rhs = rep_vec(Multivector.blade(EUCLIDEAN4, target, sign))
        assert matrix_residual(lhs, rhs) == 0.0


def test_table_bad_signature(capsys):
    code, _, err = run_cli(capsys, ["table", "--signature", "nope"])
    assert code == 2
    assert "bad signature" in err


def test_table_json(capsys):
    import json

    code, out, _ = run_cli(capsys, ["table", "--signature", "1,2", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["signature"] == [1, 2]
    assert len(data["table"]) == 8


def test_project_sphere_origin(capsys):
    code, out, _ = run_cli(capsys, ["project", "sphere", "--point", "0,0,0"])
    assert code == 0
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    assert [float(v) for v in record["a_hat"].split(",")] == [1.0, 0.0, 0.0, 0.0]
    assert float(record["angle"]) == 0.0


def test_project_hyper_values(capsys):
    code, out, _ = run_cli(capsys, ["project", "hyper", "--point", "0.5,0,0"])
    assert code == 0
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    comps = [float(v) for v in record["a_hat"].split(",")]
    assert comps[0] == pytest.approx(5.0 / 3.0, abs=1e-12)
    assert comps[1] == pytest.approx(4.0 / 3.0, abs=1e-12)
    assert math.cosh(float(record["angle"])) == pytest.approx(5.0 / 3.0, abs=1e-12)


def test_project_hyper_boundary_fails(capsys):
    code, _, err = run_cli(capsys, ["project", "hyper", "--point", "1,0,0"])
    assert code == 1
    assert "DomainViolation" in err


def test_prob_examples(capsys):
    code, out, _ = run_cli(
        capsys, ["prob", "sphere", "--point-a", "1,0,0", "--point-b=-1,0,0"]
    )
    assert code == 0
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    assert abs(float(record["fidelity_braket"])) <= 1e-12

    code, out, _ = run_cli(
        capsys, ["prob", "sphere", "--point-a", "0.3,0.4,0", "--point-b", "0.3,0.4,0"]
    )
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    assert float(record["fidelity_braket"]) == pytest.approx(1.0, abs=1e-12)

    code, out, _ = run_cli(
        capsys, ["prob", "hyper", "--point-a", "0,0,0", "--point-b", "0.5,0,0"]
    )
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    assert float(record["fidelity_braket"]) == pytest.approx(4.0 / 3.0, abs=1e-12)
    assert record["label"] == "Bloch hyperboloid quantity (>=1)"


def test_prob_quaternion_route(capsys):
    code, out, _ = run_cli(
        capsys,
        ["prob", "hyper", "--point-a", "0,0,0", "--point-b", "0.5,0,0", "--quaternion"],
    )
    assert code == 0
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    assert float(record["fidelity_braket"]) == pytest.approx(4.0 / 3.0, abs=1e-12)
    assert float(record["residual"]) <= 1e-10

    code, _, err = run_cli(
        capsys,
        ["prob", "sphere", "--point-a", "0,0,0", "--point-b", "0.5,0,0", "--quaternion"],
    )
    assert code == 2


def test_prob_planar_chart_enforced(capsys):
    code, _, err = run_cli(
        capsys, ["prob", "sphere", "--point-a", "0,0,1", "--point-b", "0,0,0"]
    )
    assert code == 2
    assert "third" in err


def test_prob_degenerate_exit(capsys):
    # antipode of the origin is the excluded chart point on the hyperboloid
    code, _, err = run_cli(
        capsys, ["prob", "hyper", "--point-a", "0,0,0", "--point-b", "1.5,0,0"]
    )
    assert code == 1
    assert "NonTimelike" in err


def test_figure_sphere(tmp_path, capsys):
    out_path = tmp_path / "sphere.csv"
    code, _, _ = run_cli(
        capsys, ["figure", "stereo-sphere", "--samples", "3", "--out", str(out_path)]
    )
    assert code == 0
    rows = list(csv.reader(out_path.open()))
    assert rows[0] == ["t", "x_m", "a_e1", "a_e2", "a_e3"]
    mid = rows[2]
    assert float(mid[1]) == 0.0
    assert [float(v) for v in mid[2:]] == [0.0, 0.0, 1.0]  # pole row
    for row in rows[1:]:
        comps = [float(v) for v in row[2:]]
        assert abs(sum(c * c for c in comps) - 1.0) <= 1e-10


def test_figure_hyper_rows_unit(tmp_path, capsys):
    out_path = tmp_path / "hyper.csv"
    code, _, _ = run_cli(
        capsys, ["figure", "stereo-hyper", "--samples", "25", "--out", str(out_path)]
    )
    assert code == 0
    rows = list(csv.reader(out_path.open()))
    for row in rows[1:]:
        a0, a1, a2 = (float(v) for v in row[2:])
        assert abs((a0 * a0 - a1 * a1 - a2 * a2) - 1.0) <= 1e-10


def test_figure_poincare_geodesic(tmp_path, capsys):
    out_path = tmp_path / "geo.csv"
    code, _, _ = run_cli(
        capsys,
        ["figure", "poincare-geodesic", "--samples", "41", "--out", str(out_path)],
    )
    assert code == 0
    rows = list(csv.reader(out_path.open()))
    first, last = rows[1], rows[-1]
    for row in (first, last):
        x1, x2 = float(row[1]), float(row[2])
        assert abs(x1 * x1 + x2 * x2 - 1.0) <= 1e-10
        assert row[3] == ""  # boundary rows carry no lift
    for row in rows[2:-1]:
        a0, a1, a2 = (float(v) for v in row[3:])
        assert abs((a0 * a0 - a1 * a1 - a2 * a2) - 1.0) <= 1e-10


def test_figure_unwritable_path(capsys):
    code, _, err = run_cli(
        capsys,
        ["figure", "stereo-sphere", "--samples", "3", "--out", "/nonexistent/x.csv"],
    )
    assert code == 1
    assert "cannot write" in err


def test_dirac_command(capsys, rng):
    code, out, _ = run_cli(
        capsys, ["dirac", "--components", "1", "0", "0", "0", "0", "0", "0", "0"]
    )
    assert code == 0
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    assert [float(v) for v in record["q0"].split(",")] == pytest.approx([1, 0, 0, 0], abs=1e-12)
    assert [float(v) for v in record["q1"].split(",")] == [0, 0, 0, 0]
    assert float(record["roundtrip_residual"]) <= 1e-12

    comps = [str(v) for v in rng.uniform(-1, 1, size=8)]
    code, out, _ = run_cli(capsys, ["dirac", "--components", *comps])
    assert code == 0
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    assert float(record["roundtrip_residual"]) <= 1e-12


def test_dirac_arity(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dirac", "--components", "1", "2", "3"])
    assert exc.value.code == 2


def test_x3_extraction_example(capsys):
    # components (0,1, 0,0, 0,0, 0,0) = phi1 = j: q0 must come out as i e3.
    code, out, _ = run_cli(
        capsys, ["dirac", "--components", "0", "1", "0", "0", "0", "0", "0", "0"]
    )
    assert code == 0
    record = dict(ln.split("=", 1) for ln in out.splitlines())
    q0 = [float(v) for v in record["q0"].split(",")]
    assert q0 == pytest.approx([0, 0, 0, 1], abs=1e-12)
