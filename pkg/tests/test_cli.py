import json
import subprocess
import sys

import pytest

from qstraighten.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rs(capsys):
    code, out, _ = run(capsys, "rs", "2143512")
    assert code == 0
    data = json.loads(out)
    assert data["P"] == {"rows": [[1, 1, 2], [2, 3, 5], [4]]}
    assert data["Q"] == {"rows": [[1, 3, 5], [2, 4, 7], [6]]}


def test_rs_empty_and_small(capsys):
    assert json.loads(run(capsys, "rs", "")[1])["P"] == {"rows": []}
    assert json.loads(run(capsys, "rs", "213")[1])["P"] == {"rows": [[1, 3], [2]]}


def test_malformed_word_is_usage_error(capsys):
    code, _, err = run(capsys, "rs", "21x")
    assert code == 2 and "malformed" in err


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_plactic(capsys):
    assert run(capsys, "plactic", "213", "231")[1].strip() == "equivalent"
    data = json.loads(run(capsys, "plactic", "12", "21", "--json")[1])
    assert data["equivalent"] is False


def test_straighten_t23_t11_t32(capsys):
    code, out, _ = run(capsys, "straighten", "213", "312", "-n", "3")
    data = json.loads(out)
    assert code == 0 and data["match"] is True
    assert len(data["expansion"]) == 6
    assert data["q0_class"] == {"left": {"rows": [[1, 3], [2]]}, "right": {"rows": [[1, 2], [3]]}}
    assert set(data) == {"input", "expansion", "q0_class", "rs_prediction", "match"}
    assert {"left", "right", "coeff"} == set(data["expansion"][0])


def test_straighten_trivial_and_null(capsys):
    data = json.loads(run(capsys, "straighten", "1", "1", "-n", "1")[1])
    assert data["expansion"] == [{"coeff": "1", "left": {"rows": [[1]]}, "right": {"rows": [[1]]}}]
    data = json.loads(run(capsys, "straighten", "12", "21", "-n", "2")[1])
    assert data["q0_class"] is None and data["match"] is True


def test_resource_caps(capsys):
    assert run(capsys, "straighten", "1", "1", "-n", "5")[0] == 2
    assert run(capsys, "straighten", "1111111", "1111111", "-n", "2")[0] == 2
    assert run(capsys, "straighten", "12", "1", "-n", "2")[0] == 2
    assert run(capsys, "straighten", "13", "11", "-n", "2")[0] == 2


def test_straighten_flag(capsys):
    code, out, _ = run(capsys, "straighten-flag", "15|236", "-n", "6", "--max-n", "6")
    data = json.loads(out)
    assert code == 0 and data["match"]
    assert len(data["expansion"]) == 5
    assert data["q0_class"] == {"rows": [[1, 2], [3, 6], [5]]}


def test_crystal_counts(capsys):
    assert run(capsys, "crystal", "--shape", "2,1", "-n", "3")[1].strip() == "8 vertices, 8 edges"
    assert run(capsys, "crystal", "--shape", "2,2", "-n", "4")[1].startswith("20 vertices")
    assert run(capsys, "crystal", "--word-graph", "-n", "2", "-m", "2")[1].strip() == "4 vertices, 2 edges"


def test_crystal_dot_and_json(capsys):
    dot = run(capsys, "crystal", "--shape", "2,1", "-n", "3", "--dot")[1]
    assert dot.startswith("digraph {") and dot.count("->") == 8
    data = json.loads(run(capsys, "crystal", "211", "-n", "3", "--json")[1])
    assert len(data["vertices"]) == 8 and len(data["edges"]) == 8


def test_crystal_errors(capsys):
    assert run(capsys, "crystal", "112", "-n", "3")[0] == 2
    assert run(capsys, "crystal", "--shape", "1,2", "-n", "3")[0] == 2
    assert run(capsys, "crystal", "--word-graph", "-n", "2")[0] == 2
    assert run(capsys, "crystal", "-n", "2")[0] == 2


def test_qdet_and_qminor(capsys):
    assert run(capsys, "qdet", "-n", "2")[1].strip() == "(1)*t[1,1]*t[2,2] + (-q^-1)*t[1,2]*t[2,1]"
    data = json.loads(run(capsys, "qminor", "12", "23", "-n", "3", "--json")[1])
    assert data[0] == {"monomial": [[1, 2], [2, 3]], "coeff": "1"}
    assert run(capsys, "qminor", "21", "23", "-n", "3")[0] == 2


@pytest.mark.parametrize("suite,extra", [
    ("figures", []),
    ("centrality", ["-n", "3"]),
    ("theorem1", ["-n", "2", "-k", "3"]),
    ("module-relations", ["-n", "2", "-k", "2"]),
])
def test_verify(capsys, suite, extra):
    code, out, _ = run(capsys, "verify", suite, *extra)
    assert code == 0
    assert out.startswith("PASS")


def test_verify_json(capsys):
    data = json.loads(run(capsys, "verify", "figures", "--json")[1])
    assert data["ok"] and data["suites"][0]["cases"] == 7


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    from qstraighten import verify as V

    monkeypatch.setitem(V.REFERENCE_CHECKS, "broken", lambda: False)
    code, out, _ = run(capsys, "verify", "figures")
    assert code == 1 and "FAIL" in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "qstraighten.cli", "crystal", "--shape", "2,2", "-n", "4", "--dot"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and a.count("->") == 30
