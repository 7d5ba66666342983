"""Command-line interface: payloads and exit codes, driven in-process."""

import json

import pytest

from degseq import SimpleGraph, graph6_decode, graph6_encode
from degseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "degseq" in capsys.readouterr().out


# -- check -------------------------------------------------------------------


def test_check_plain(capsys):
    doc = run_json(capsys, "check", "2,2,2,2,2")
    assert doc["schema"] == 1
    assert doc["tool"]["name"] == "degseq"
    assert doc["input"] == [2, 2, 2, 2, 2]
    assert doc["graphic"] is True
    assert doc["omega"] == {"value": 2, "method": "rao-exact"}
    assert doc["profile"] == {"verdict": "NontrivialBasicProfile", "m": 2}
    assert "chi" not in doc


def test_check_oracle_bounds(capsys):
    doc = run_json(capsys, "check", "2,2,2,2,2", "--oracle")
    assert doc["chi"] == {"value": 3, "method": "oracle-enumeration"}
    assert doc["h1"] == {"value": 3, "method": "oracle-enumeration"}
    for name in ("sf", "reed", "hajos", "hajos2a", "hajos2b"):
        assert doc["bounds"][name]["holds"] is True
        assert doc["bounds"][name]["tight"] is True
        assert doc["bounds"][name]["slack"] == "0"


def test_check_non_graphic_is_a_valid_certificate(capsys):
    doc = run_json(capsys, "check", "3,3,1,1")
    assert doc["graphic"] is False
    assert "omega" not in doc


def test_check_oracle_respects_cap_and_max_n(monkeypatch, capsys):
    monkeypatch.setenv("DEGSEQ_ORACLE_LIMIT", "4")
    code, out, err = run(capsys, "check", "2,2,2,2,2", "--oracle")
    assert code == 3
    assert "exceeds" in err
    doc = run_json(capsys, "check", "2,2,2,2,2", "--oracle", "--max-n", "5")
    assert doc["chi"]["value"] == 3


def test_check_out_file(tmp_path, capsys):
    target = tmp_path / "cert.json"
    code, out, err = run(capsys, "check", "2,1,1", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["graphic"] is True


def test_check_parse_error_exit_two(capsys):
    code, out, err = run(capsys, "check", "2,x,1")
    assert code == 2
    assert "'x'" in err


# -- realize -----------------------------------------------------------------


def test_realize_default(capsys):
    code, out, err = run(capsys, "realize", "2,2,2,2,2")
    assert code == 0
    g = graph6_decode(out.strip())
    assert sorted(g.degrees()) == [2] * 5


def test_realize_tree(capsys):
    code, out, err = run(capsys, "realize", "2,1,1", "--tree")
    assert code == 0 and out.strip() == "Bo"


def test_realize_clique_with_dot(capsys):
    code, out, err = run(capsys, "realize", "3,3,2,2,2", "--clique", "3", "--dot")
    assert code == 0
    lines = out.splitlines()
    g = graph6_decode(lines[0])
    assert g.has_edge(1, 2) and g.has_edge(1, 3) and g.has_edge(2, 3)
    assert lines[1].startswith("graph")


def test_realize_bipartite(capsys):
    code, out, err = run(capsys, "realize", "--bipartite", "2,2/2,1,1")
    assert code == 0
    g = graph6_decode(out.strip())
    assert g.degrees() == (2, 2, 2, 1, 1)


def test_realize_bipartite_bad_shape(capsys):
    code, out, err = run(capsys, "realize", "--bipartite", "2,2,2,1,1")
    assert code == 2
    assert "a1,a2,../b1,b2,.." in err


def test_realize_missing_sequence(capsys):
    code, out, err = run(capsys, "realize")
    assert code == 2


def test_realize_infeasible_exit_four(capsys):
    code, out, err = run(capsys, "realize", "2,2", "--tree")
    assert code == 4
    assert "2n-2" in err.replace(" ", "")
    code, out, err = run(capsys, "realize", "2,2,2,2,2", "--clique", "3")
    assert code == 4


def test_realize_non_graphic_exit_four(capsys):
    code, out, err = run(capsys, "realize", "3,3,1,1")
    assert code == 4


# -- hajos -------------------------------------------------------------------


def test_hajos_sequence_certificate(capsys):
    doc = run_json(capsys, "hajos", "2,2,2,2,2")
    assert doc["omega"] == {"value": 2, "method": "rao-exact"}
    assert doc["h1_lower_bound"] == {"value": 3, "method": "witness-lower-bound"}
    assert doc["artifacts"]["graph6"] == "DdW"
    assert doc["artifacts"]["plan"]["case"] == "CaseOne"
    w = doc["artifacts"]["witness"]
    assert w["order"] == 3 and w["branch_vertices"] == [1, 2, 3]


def test_hajos_wrong_profile_exit_four(capsys):
    code, out, err = run(capsys, "hajos", "2,2,2,2")
    assert code == 4
    assert "NotOddLength" in err


def test_hajos_pipeline(capsys):
    g6 = graph6_encode(SimpleGraph.complete(4))
    doc = run_json(capsys, "hajos", g6, "--pipeline")
    assert doc["chi"] == {"value": 4, "method": "oracle-enumeration"}
    assert doc["h1_lower_bound"]["value"] == 4
    assert doc["artifacts"]["plan"] is None
    host = graph6_decode(doc["artifacts"]["graph6"])
    assert host.n == 4


def test_hajos_pipeline_bad_graph6(capsys):
    code, out, err = run(capsys, "hajos", "notagraph", "--pipeline")
    assert code == 2


# -- sweep -------------------------------------------------------------------


def test_sweep_ok(capsys):
    code, out, err = run(capsys, "sweep", "--max-n", "4", "--checks", "sf,reed")
    assert code == 0
    assert "0 violations" in out


def test_sweep_writes_report(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, err = run(
        capsys, "sweep", "--max-n", "4", "--checks", "sf", "--out", str(target)
    )
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["checks"]["sf"]["violations"] == []


def test_sweep_capped_exit_three(capsys):
    code, out, err = run(capsys, "sweep", "--max-n", "99", "--checks", "sf")
    assert code == 3
    assert "force" in err


def test_sweep_unknown_check_exit_four(capsys):
    code, out, err = run(capsys, "sweep", "--max-n", "3", "--checks", "bogus")
    assert code == 4
