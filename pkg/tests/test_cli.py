import json
import subprocess
import sys

import pytest

from elldp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tables_single_type(capsys):
    code, out, _ = run(capsys, "tables", "--type", "E8")
    doc = json.loads(out)
    assert code == 0 and doc["all_pass"]
    assert len(doc["reports"]) == 6
    assert {r["status"] for r in doc["reports"]} == {"pass"}


def test_tables_all_types(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    assert len(json.loads(out)["reports"]) == 24


def test_unsupported_type(capsys):
    code, out, err = run(capsys, "tables", "--type", "F4")
    assert code == 2 and out == ""
    assert "unsupported type" in err


def test_lines_count_only(capsys):
    code, out, err = run(capsys, "lines", "--type", "E6", "--count-only")
    assert code == 0 and json.loads(out) == {"count": 27}
    assert "certificate" in err


def test_roots_full_listing(capsys):
    code, out, _ = run(capsys, "roots", "--type", "D5")
    doc = json.loads(out)
    assert doc["count"] == 40 == len(doc["vectors"])


def test_cochar(capsys):
    _, out, _ = run(capsys, "cochar", "classify", "--type", "D5", "--mode", "subregular")
    assert json.loads(out)["cocharacters"] == [[0, 0, 0, -1, -1], [0, 0, 0, 0, -1]]


def test_ci(capsys):
    _, out, _ = run(capsys, "ci", "--type", "D5")
    doc = json.loads(out)
    assert doc["relations"] == [2, 2] and doc["ambient"] == [1, 1, 1, 1]


def test_marked_dp_roundtrip(capsys):
    code, out, _ = run(capsys, "marked-dp", "--roundtrip", "--seed", "3", "--count", "20")
    assert code == 0 and json.loads(out)["all_pass"]


def test_marked_dp_from_file(capsys, tmp_path):
    f = tmp_path / "psi.json"
    f.write_text(json.dumps(["infinity"] * 6))
    code, out, _ = run(capsys, "marked-dp", "--type", "E6", "--psi", str(f))
    doc = json.loads(out)
    assert code == 0 and doc["roundtrip_ok"] and doc["effective_root_count"] == 72
    f.write_text("[[1, 1]]")
    assert run(capsys, "marked-dp", "--type", "E6", "--psi", str(f))[0] == 2


def test_milnor(capsys):
    code, out, _ = run(capsys, "milnor", "--poly", "z^2+y^3+x^6")
    assert code == 0 and json.loads(out)["mu"] == 10
    code, out, _ = run(capsys, "milnor", "--poly", "x^2+y^2+z^2", "--rational")
    assert json.loads(out)["field"] == "Q"
    assert run(capsys, "milnor", "--poly", "x+y")[0] == 2
    assert run(capsys, "milnor", "--poly", "x^^2")[0] == 2
    assert run(capsys, "milnor", "--poly", "z^2+y^3+x^5", "--cap", "3")[0] == 1


def test_nef(capsys):
    # kappa of E6 in (delta, gamma) coordinates
    from elldp.dplattice import build_dplattice
    from elldp.rootdata import root_system

    k = build_dplattice(root_system("E6")).kappa
    code, out, _ = run(capsys, "nef", "--type", "E6", "--class", ",".join(map(str, k)),
                       "--effective", "all")
    doc = json.loads(out)
    assert code == 0 and doc["nef"] and doc["square"] == 3
    assert run(capsys, "nef", "--type", "E6", "--class", "1,2")[0] == 2
    assert run(capsys, "nef", "--type", "E6", "--class", "0,0,0,0,0,0,1")[0] == 2


def test_deterministic_and_thread_independent(capsys):
    outs = [run(capsys, *a)[1] for a in (["tables"], ["tables"], ["--threads", "4", "tables"])]
    assert outs[0] == outs[1] == outs[2]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "elldp", "ci", "--type", "E8"],
                       capture_output=True, text=True, check=True)
    assert json.loads(r.stdout)["presentation"] == "X0 = (6) in A3(1,2,3)"
