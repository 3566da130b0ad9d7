import io
import json

import pytest

from laga import to_json
from laga.cli import main


def _graph_file(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.fixture()
def boolean3_file(tmp_path):
    code = main(["build", "boolean", "3", "-o", str(tmp_path / "b3.json")])
    assert code == 0
    return str(tmp_path / "b3.json")


def test_build_json_and_determinism(capsys):
    assert main(["build", "boolean", "3"]) == 0
    first = capsys.readouterr().out
    data = json.loads(first)
    assert data["levels"] == [1, 3, 3, 1]
    assert main(["build", "boolean", "3"]) == 0
    assert capsys.readouterr().out == first


def test_build_subspace_and_complete(capsys):
    assert main(["build", "subspace", "2", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["levels"] == [1, 7, 7, 1]
    assert main(["build", "complete", "1,2,2"]) == 0
    assert json.loads(capsys.readouterr().out)["levels"] == [1, 2, 2]


def test_build_dot(capsys):
    assert main(["build", "boolean", "2", "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph") and "->" in out


def test_info(boolean3_file, capsys):
    assert main(["info", boolean3_file]) == 0
    out = capsys.readouterr().out
    assert "levels [1, 3, 3, 1]" in out and "uniform True" in out
    assert main(["info", boolean3_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["vertices"] == 8 and data["uniform"] is True


def test_hilbert_both_algebras(boolean3_file, capsys):
    assert main(["hilbert", boolean3_file, "--max", "2,4"]) == 0
    assert capsys.readouterr().out.startswith("m\\n")
    assert main(["hilbert", boolean3_file, "--algebra", "grA", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["algebra"] == "grA"
    assert [1, 1, 3] in data["entries"]


def test_kappa(boolean3_file, capsys):
    assert main(["kappa", boolean3_file, "--level", "2", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["k"] for row in rows] == [2, 2, 2]


def test_uniform(boolean3_file, tmp_path, nonuniform_graph, capsys):
    assert main(["uniform", boolean3_file]) == 0
    assert capsys.readouterr().out.strip() == "uniform"
    bad = _graph_file(tmp_path, "bad.json", to_json(nonuniform_graph))
    assert main(["uniform", bad]) == 0
    assert "not uniform" in capsys.readouterr().out


def test_dual_check(boolean3_file, capsys):
    assert main(["dual-check", boolean3_file, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"2": True, "3": True}


def test_scramble_reconstruct_pipeline(boolean3_file, tmp_path, capsys):
    view_file = str(tmp_path / "view.json")
    assert main(["scramble", boolean3_file, "--seed", "7", "-o", view_file]) == 0
    envelope = json.loads((tmp_path / "view.json").read_text())
    assert set(envelope) == {"view", "source"}
    assert main(["reconstruct", view_file, "--family", "boolean", "-n", "3"]) == 0
    out = capsys.readouterr().out
    assert "recovered levels [1, 3, 3, 1]" in out
    assert "CERTIFIED isomorphic" in out


def test_reconstruct_from_stdin(boolean3_file, tmp_path, capsys, monkeypatch):
    view_file = str(tmp_path / "view.json")
    assert main(["scramble", boolean3_file, "--seed", "2", "-o", view_file]) == 0
    payload = (tmp_path / "view.json").read_text()
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    assert main(["reconstruct", "-", "--family", "nonnesting", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["certified"] is True
    assert report["levels"] == [3, 1]


def test_reconstruct_without_reference_is_uncertified(
    boolean3_file, tmp_path, capsys
):
    view_file = str(tmp_path / "view.json")
    assert main(["scramble", boolean3_file, "--seed", "2", "-o", view_file]) == 0
    envelope = json.loads((tmp_path / "view.json").read_text())
    bare = _graph_file(tmp_path, "bare.json", json.dumps(envelope["view"]))
    assert main(["reconstruct", bare, "--family", "nonnesting"]) == 0
    assert "UNCERTIFIED" in capsys.readouterr().out


def test_compare_agreeing_nonisomorphic_pair(tmp_path, retarget_pair, capsys):
    g1, g2 = retarget_pair
    f1 = _graph_file(tmp_path, "g1.json", to_json(g1))
    f2 = _graph_file(tmp_path, "g2.json", to_json(g2))
    assert main(["compare", f1, f2, "--max", "3,5"]) == 0
    out = capsys.readouterr().out
    assert "invariants agree (this does not imply the graphs are isomorphic)" in out
    assert "NOT isomorphic" in out


def test_compare_mismatch_exit_code(boolean3_file, tmp_path, capsys):
    other = str(tmp_path / "complete.json")
    assert main(["build", "complete", "1,3,3,1", "-o", other]) == 0
    capsys.readouterr()
    assert main(["compare", boolean3_file, other, "--max", "2,5"]) == 1
    assert "invariants differ" in capsys.readouterr().out


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["build", "dodecahedron", "3"])
    assert exc.value.code == 2


def test_computation_errors_exit_three(boolean3_file, tmp_path, capsys):
    assert main(["info", str(tmp_path / "missing.json")]) == 3
    assert "error:" in capsys.readouterr().err
    view_file = str(tmp_path / "view.json")
    assert main(["scramble", boolean3_file, "--seed", "1", "-o", view_file]) == 0
    assert main(["reconstruct", view_file, "--family", "boolean", "-n", "4"]) == 3
    assert "error:" in capsys.readouterr().err
