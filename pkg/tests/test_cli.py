import json
import subprocess
import sys

import pytest

from vkhov.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jones_text(capsys):
    code, out, _ = run(capsys, "jones", "trefoil")
    assert code == 0
    assert "J(q)  = 1*q^1 + 1*q^3 + 1*q^5 - 1*q^9" in out


def test_homology_json(capsys):
    code, out, _ = run(capsys, "--json", "homology", "virtual_trefoil", "--coeff", "z")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok"
    assert report["input"] == "O1+U2+U1+O2+"
    assert len(report["input_hash"]) == 16
    assert report["results"]["table"]["(2,4)"] == {"free": 0, "torsion": ["2^1"]}
    assert "timing_s" not in report


def test_json_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "homology", "trefoil", "--coeff", "z2", "--json", "--timing")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["coeffs"] == "Z2" and "timing_s" in report


def test_output_is_deterministic(capsys):
    first = run(capsys, "--json", "s", "trefoil")[1]
    assert first == run(capsys, "--json", "s", "trefoil")[1]


def test_s_commands(capsys):
    code, out, _ = run(capsys, "--json", "s", "vsigma2")
    slow = json.loads(out)["results"]
    assert code == 0 and slow["s_bar"] == 2
    code, out, _ = run(capsys, "--json", "s", "vsigma2", "--positive-fast")
    assert json.loads(out)["results"] == slow
    code, out, _ = run(capsys, "s", "figure_eight", "--positive-fast")
    assert code == 2


def test_s_link_levels(capsys):
    code, out, _ = run(capsys, "--json", "s", "hopf")
    assert code == 0
    assert json.loads(out)["results"]["levels"] == {"0": [0, 2], "2": [4, 6]}


def test_check_passes(capsys):
    code, out, _ = run(capsys, "--json", "check", "figure_eight")
    assert code == 0
    checks = json.loads(out)["results"]["checks"]
    assert len(checks) == 9 and all(checks.values())


def test_corrupt_signs_detected(capsys):
    code, out, err = run(capsys, "--json", "check", "trefoil", "--corrupt-signs")
    assert code == 3
    report = json.loads(out)
    assert report["status"] == "failed"
    assert report["results"]["checks"]["d2_zero"] is False
    assert report["results"]["offending_faces"]
    assert "FAIL d2_zero" in err


@pytest.mark.parametrize("argv", [["jones", "O1+U1"], ["jones", "O1+U2+O2+U1-"],
                                  ["homology", "random:x"], ["--max-crossings", "3", "homology", "figure_eight"],
                                  ["jones", "trefoil", "--catalog", "/nonexistent/cat.txt"]])
def test_bad_input(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_catalog_file_and_code_file(capsys, tmp_path):
    cat = tmp_path / "cat.txt"
    cat.write_text("# mine\nmyknot: O1+U2+O3+U1+O2+U3+\n")
    code, out, _ = run(capsys, "--json", "jones", "myknot", "--catalog", str(cat))
    assert code == 0 and json.loads(out)["input"] == "O1+U2+O3+U1+O2+U3+"
    f = tmp_path / "k.txt"
    f.write_text("O1+U2+U1+O2+\n")
    assert run(capsys, "jones", str(f))[0] == 0


def test_random_input_seeded(capsys):
    a = run(capsys, "--json", "--seed", "5", "homology", "random:4")[1]
    b = run(capsys, "--json", "--seed", "5", "homology", "random:4")[1]
    assert a == b and json.loads(a)["status"] == "ok"
    assert run(capsys, "--seed", "2", "check", "random:3:2")[0] == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "vkhov", "--json", "jones", "unknot"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["results"]["J"]
