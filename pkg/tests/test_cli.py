import json
import subprocess
import sys

import pytest

from qsymbasis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "B", "--n", "3")
    data = json.loads(out.out)
    assert code == 0 and data["count"] == 6
    assert set(data["compositions"]) == {"0", "2,1", "2,1,1", "1,2,1", "2,2,1", "2,1,2"}


def test_hilbert(capsys):
    code, out = run(capsys, "hilbert", "--n", "3", "--dmax", "6")
    data = json.loads(out.out)
    assert code == 0
    assert data["coefficients"] == [1, 0, 0, 1, 2, 2]
    assert data["census_check"]["status"] == "pass"


def test_expand(capsys):
    code, out = run(capsys, "expand", "qschur", "--alpha", "3,1,2", "--vars", "4")
    terms = {t["comp"]: t["coeff"] for t in json.loads(out.out)["terms"]}
    assert terms == {"3,1,2": 1, "3,1,1,1": 1, "2,1,1,2": 1, "1,2,1,2": 1}
    code, out = run(capsys, "expand", "monomial", "--alpha", "2,1", "--vars", "3")
    assert len(json.loads(out.out)["terms"]) == 3
    code, out = run(capsys, "expand", "qschur", "--alpha", "312", "--vars", "4", "--tableaux")
    assert len(json.loads(out.out)["tableaux"]) == 7


def test_multiply_both_routes(capsys):
    _, a = run(capsys, "multiply", "--lambda", "1", "--beta", "2,1")
    _, b = run(capsys, "multiply", "--lambda", "1", "--beta", "2,1", "--oracle")
    assert json.loads(a.out) == json.loads(b.out)


def test_phi_roundtrip(capsys):
    _, out = run(capsys, "phi", "--lambda", "5,4,4,4,2,2,1,1,1,1,1", "--beta", "2,4,3,1,1,3,4,2,3", "--n", "13")
    assert json.loads(out.out)["phi"] == "3,8,5,2,2,7,9,4,7,1,1"
    _, out = run(capsys, "phi-inverse", "--alpha", "38522794711", "--n", "13")
    data = json.loads(out.out)
    assert (data["lambda"], data["beta"]) == ("5,4,4,4,2,2,1,1,1,1,1", "2,4,3,1,1,3,4,2,3")


def test_matrix_formats(capsys):
    _, out = run(capsys, "matrix", "--n", "2", "--d", "3", "--family", "M", "--format", "csv")
    assert out.out.splitlines()[1] == "s_3,1,0,0"
    _, out = run(capsys, "matrix", "--n", "3", "--d", "4")
    assert len(json.loads(out.out)["entries"]) == 7


def test_certify_exit_codes(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = run(capsys, "certify", "--n", "3", "--dmax", "4", "--output", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["passed"] and set(data) >= {"params", "checks", "timings"}
    code, out = run(capsys, "certify", "--n", "3", "--dmax", "6", "--family", "S", "--no-timings")
    assert code == 1
    assert "timings" not in json.loads(out.out)
    code, out = run(capsys, "certify", "--n", "6", "--dmax", "2")
    assert code == 2 and "guard" in out.err


def test_usage_errors(capsys):
    code, out = run(capsys, "phi", "--lambda", "1,2", "--beta", "1")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["matrix", "--n", "2"])
    assert exc.value.code == 2


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "qsymbasis", "enumerate", "D", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 2
