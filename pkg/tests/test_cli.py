import json
import subprocess
import sys

import pytest

from eqcorona.cli import main
from eqcorona.io import parse_dimacs


@pytest.fixture
def files(tmp_path):
    (tmp_path / "c3.dimacs").write_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    (tmp_path / "k1.dimacs").write_text("p edge 1 0\n")
    (tmp_path / "wheel5.dimacs").write_text(
        "p edge 6 10\n" + "".join(f"e 1 {v}\n" for v in range(2, 7))
        + "e 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 2\n")
    (tmp_path / "c5.dimacs").write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
    (tmp_path / "c5col.json").write_text('{"k": 3, "colors": [1, 2, 1, 2, 3]}')
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_fig1c(files, capsys):
    code, out, _ = run(capsys, "gen", "--g", str(files / "c3.dimacs"), "--h-kind", "complete",
                       "--h-size", "2", "--l", "2", "--labels", str(files / "lab.json"))
    assert code == 0
    g = parse_dimacs(out.splitlines())
    assert g.n == 27 and g.num_edges == 39
    labels = json.loads((files / "lab.json").read_text())
    assert labels["1"] == [0] and labels["4"] == [0, 0] and len(labels) == 27


def test_gen_guard(files, capsys):
    code, _, err = run(capsys, "gen", "--g", str(files / "c3.dimacs"), "--h-kind", "complete",
                       "--h-size", "2", "--l", "6", "--max-order", "100")
    assert code == 2 and "exceeds" in err


def test_color_k1_c4(files, capsys):
    code, out, _ = run(capsys, "color", "--g", str(files / "k1.dimacs"), "--h-kind", "cycle",
                       "--h-size", "4", "--l", "2")
    cert = json.loads(out)
    assert code == 0 and cert["k"] == 3 and cert["theorem"] == "T8" and sum(cert["sizes"]) == 25


def test_color_with_given_coloring_and_verify(files, capsys):
    code, out, _ = run(capsys, "color", "--g", str(files / "c5.dimacs"), "--h-kind", "cycle",
                       "--h-size", "6", "--g-coloring", str(files / "c5col.json"),
                       "--out", str(files / "cert.json"))
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "--json", "verify", "--cert", str(files / "cert.json"),
                       "--g", str(files / "c5.dimacs"))
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["lower_bound"] == "confirmed" and rep["ecc"]
    cert = json.loads((files / "cert.json").read_text())
    cert["colors"][0] = cert["colors"][1]
    (files / "bad.json").write_text(json.dumps(cert))
    code, out, _ = run(capsys, "verify", "--cert", str(files / "bad.json"))
    assert code == 1 and out.startswith("FAIL")


def test_oracle(files, capsys):
    code, out, _ = run(capsys, "oracle", "--chi-eq", str(files / "wheel5.dimacs"))
    assert code == 0 and json.loads(out)["chi_eq"] == 4
    code, out, _ = run(capsys, "oracle", "--k", "3", str(files / "wheel5.dimacs"))
    assert code == 1 and json.loads(out)["colorable"] is False
    code, out, _ = run(capsys, "oracle", "--k", "4", "wheel:5")
    assert code == 0 and json.loads(out)["witness"]["k"] == 4
    code, _, _ = run(capsys, "oracle", "--k", "2", "cycle:80", "--limit", "10")
    assert code == 1


def test_usage_errors(files, capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "oracle", str(files / "c3.dimacs"))[0] == 2
    assert run(capsys, "oracle", "--k", "2", str(files / "missing.dimacs"))[0] == 2
    assert run(capsys, "color", "--g", str(files / "c3.dimacs"), "--h-kind", "cycle",
               "--h-size", "2")[0] == 2


def test_deterministic_output(files, capsys):
    argv = ["color", "--g", str(files / "c5.dimacs"), "--h-kind", "path", "--h-size", "5", "--l", "2"]
    a = run(capsys, *argv)
    b = run(capsys, "--seed", "7", *argv)
    assert a == b


def test_survey_subprocess(tmp_path):
    csv_path, json_path = tmp_path / "s.csv", tmp_path / "s.json"
    res = subprocess.run([sys.executable, "-m", "eqcorona", "survey", "--csv", str(csv_path),
                          "--json-out", str(json_path), "--jobs", "2"],
                         capture_output=True, text=True, timeout=300)
    assert res.returncode == 0, res.stderr
    rows = json.loads(json_path.read_text())
    assert len(rows) == 80 and all(r["match"] for r in rows)
    assert len(csv_path.read_text().splitlines()) == 81
