import json
import subprocess
import sys

import pytest

from fjl.cli import main
from fjl.solutions import Catalog


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_solution_lehmer(capsys):
    code, out, _ = run(capsys, "check-solution", "lehmer", "--no-timing")
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"][0]["observed"] == "0"
    assert rep["schema_version"] == 1 and rep["verdict"] == "pass"


def test_user_file_constants(capsys, tmp_path):
    p = tmp_path / "const.txt"
    p.write_text("f = 3^(-1/3)\ng = 3^(-1/3)\nh = 3^(-1/3)\n", encoding="utf-8")
    code, out, _ = run(capsys, "check-solution", str(p), "--n", "3")
    rep = json.loads(out)
    assert code == 0
    assert rep["data"]["classification"] == "trivial-constant"


def test_user_file_parse_error_column(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("f = 9α^\ng = 1\nh = 1\n", encoding="utf-8")
    code, _, err = run(capsys, "check-solution", str(p), "--n", "3")
    assert code == 2
    assert "line 1, column 8" in err


def test_missing_exponent_relation(capsys, tmp_path):
    p = tmp_path / "rad.txt"
    p.write_text("radicals = r: r^7 = 2\nf = r\ng = 0\nh = 0\n", encoding="utf-8")
    code, _, err = run(capsys, "check-solution", str(p), "--n", "3")
    assert code == 2


def test_mutated_fixture(capsys, tmp_path):
    text = open(Catalog().path, encoding="utf-8").read().replace("h = -9*α^3 + 1", "h = -9*α^3 + 2")
    p = tmp_path / "cat.ini"
    p.write_text(text, encoding="utf-8")
    code, out, _ = run(capsys, "verify-paper", "--catalog", str(p), "--no-timing")
    rep = json.loads(out)
    assert code == 1
    failed = [c for c in rep["checks"] if c["verdict"] == "fail"]
    assert [c["name"] for c in failed] == ["catalog/lehmer"]
    assert failed[0]["observed"] != "0"


def test_unknown_entry(capsys):
    code, _, err = run(capsys, "check-solution", "nosuchthing")
    assert code == 2


def test_verdict(capsys):
    code, out, _ = run(capsys, "verdict", "8", "8", "8")
    rep = json.loads(out)
    assert code == 0
    mero = next(c for c in rep["checks"] if c["name"] == "meromorphic")
    assert mero["observed"] == "None" and mero["citation"] == "THM-1.2"


def test_pole_order_assume(capsys):
    code, out, _ = run(capsys, "pole-order", "xyzPhi", "--assume", "n>=9")
    rep = json.loads(out)
    w = next(c for c in rep["checks"] if c["name"] == "xyzPhi/w=0")
    assert w["observed"]["vanishing"] is True


def test_nevanlinna_csv(capsys):
    code, out, _ = run(capsys, "nevanlinna", "green4", "--grid", "5,10,20", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) >= 1 + 3 * 3
    assert "," in lines[0]


def test_surface_and_ode(capsys):
    code, out, _ = run(capsys, "surface", "delsarte-b", "--n", "9")
    assert code == 0 and json.loads(out)["data"]["verdict"]["status"] == "IsolatedSingular"
    code, out, _ = run(capsys, "ode-check", "--n", "6")
    assert code == 0


def test_bad_grid_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["nevanlinna", "green", "--grid", "10,5"])
    assert info.value.code == 2


def test_determinism(capsys):
    outs = []
    for _ in range(2):
        run(capsys, "verify-paper", "--no-timing", "--seed", "3")
    for _ in range(2):
        main(["verify-paper", "--no-timing", "--seed", "3"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_pretty(capsys):
    code, out, _ = run(capsys, "verify-paper", "--pretty")
    assert code == 0
    assert "paper typo flags: 3" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "fjl", "verdict", "5", "5", "5", "--no-timing"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["data"]["verdict"]["entire"] == "Exists"
