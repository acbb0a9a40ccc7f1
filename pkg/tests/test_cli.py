import io
import json

import pytest

from weiduality.cli import run
from weiduality.documents import demimatroid_document, parse_document
from weiduality.errors import InputError

CODE = {"type": "code", "field": {"p": 2}, "generator": [[1, 0, 1, 0, 0], [0, 1, 1, 0, 0], [0, 0, 0, 1, 1]]}
GRAPH = {"type": "graph", "vertices": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0], [1, 3]]}
SYSTEM = {"type": "setsystem", "n": 5, "labels": list("abcde"), "sets": [[0, 1], [0, 2], [3], [3]]}
SMALL = {"type": "demimatroid", "n": 3, "s": [0] * 7 + [1], "t": [0, 0, 0, 1, 0, 1, 1, 2]}


def invoke(args, doc=None, tmp_path=None):
    argv = list(args)
    if doc is not None:
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(doc))
        argv.insert(1, str(path))
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_code_json(tmp_path):
    code, out, _ = invoke(["verify", "--json", "--oracle"], CODE, tmp_path)
    assert code == 0
    report = json.loads(out)
    assert report["U_C"] == [2, 3, 5] and report["V_C"] == [1, 4]
    assert report["feature_sets"] == {"S": [2, 3, 5], "T": [1, 4], "U": [1, 2, 3], "V": [4, 5]}
    assert all(report["verdicts"].values())


def test_json_is_deterministic(tmp_path):
    first = invoke(["verify", "--json"], GRAPH, tmp_path)[1]
    second = invoke(["verify", "--json"], GRAPH, tmp_path)[1]
    assert first == second


def test_text_output(tmp_path):
    code, out, _ = invoke(["sets"], SMALL, tmp_path)
    assert code == 0
    assert "S = {1}" in out and "V = {1,2}" in out


def test_graph_bc(tmp_path):
    code, out, _ = invoke(["graph-bc", "--json", "--oracle"], GRAPH, tmp_path)
    report = json.loads(out)
    assert code == 0 and report["b"] == [2, 4, 5] and report["c"] == [3, 5]


def test_plugs_warns(tmp_path):
    code, out, _ = invoke(["plugs", "--json", "--oracle"], SYSTEM, tmp_path)
    report = json.loads(out)
    assert code == 0
    assert report["U_A"] == [2, 3, 5] and report["V_A"] == [1, 4]
    assert report["plugs"] == ["{e}", "{a,b,c}"]
    assert any("{2, 4, 5}" in w for w in report["warnings"])


def test_weights_and_pmd(tmp_path):
    uniform = {"type": "uniform", "n": 4, "k": 2}
    code, out, _ = invoke(["weights", "--json", "--oracle"], uniform, tmp_path)
    assert code == 0 and json.loads(out)["S_M"] == [3, 4]
    code, out, _ = invoke(["pmd", "--json"], uniform, tmp_path)
    assert code == 0 and json.loads(out)["pmd"] is True


def test_profile_round_trip(tmp_path):
    code, out, _ = invoke(["profile", "--json"], SMALL, tmp_path)
    assert code == 0
    doc = json.loads(out)["demimatroid"]
    assert doc == SMALL
    assert demimatroid_document(parse_document(doc).demimatroid) == SMALL


def test_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(SMALL)))
    out = io.StringIO()
    assert run(["validate", "-", "--json"], out, io.StringIO()) == 0
    assert json.loads(out.getvalue())["valid"] is True


@pytest.mark.parametrize("doc", [
    {"type": "demimatroid", "n": 2, "s": [0, 1, 1, 2], "t": [0, 1, 1, 2]},
    {"type": "demimatroid", "n": 2, "s": [0, 1, 1]},
    {"type": "nonsense"},
    {"type": "code", "field": {"p": 4}, "generator": [[1]]},
    {"type": "matroid-bases", "n": 2, "bases": [[0, 5]]},
    {"type": "graph", "vertices": 1, "edges": [[0, 1]]},
])
def test_bad_input_exit_2(doc, tmp_path):
    code, out, err = invoke(["validate"], doc, tmp_path)
    assert code == 2 and out == "" and err.startswith("error")


def test_wrong_document_type_exit_2(tmp_path):
    assert invoke(["graph-bc"], CODE, tmp_path)[0] == 2


def test_missing_file_and_bad_json(tmp_path):
    out, err = io.StringIO(), io.StringIO()
    assert run(["verify", str(tmp_path / "absent.json")], out, err) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(["verify", str(bad)], out, err) == 2


def test_cap_and_max_n(tmp_path):
    big = {"type": "uniform", "n": 21, "k": 1}
    assert invoke(["verify"], big, tmp_path)[0] == 2
    assert run(["verify", "--max-n", "64", "x"], io.StringIO(), io.StringIO()) == 2


def test_parse_document_rejects_non_object():
    with pytest.raises(InputError):
        parse_document([1, 2])


def test_corpus_command():
    out = io.StringIO()
    assert run(["corpus", "--seed", "3", "--json"], out, io.StringIO()) == 0
    report = json.loads(out.getvalue())
    assert report["instances"] >= 500 and report["failures"] == []


def test_failed_verdict_exit_1(tmp_path, monkeypatch):
    import weiduality.cli as cli

    monkeypatch.setattr(cli, "audit", lambda D: {"difference_lemma": False})
    code, out, _ = invoke(["verify"], SMALL, tmp_path)
    assert code == 1 and "[FAIL] difference_lemma" in out


def test_internal_error_exit_1(tmp_path, monkeypatch):
    import weiduality.cli as cli
    from weiduality.errors import InternalError

    def boom(doc, args):
        raise InternalError("routes disagree")

    monkeypatch.setitem(cli.HANDLERS, "sets", boom)
    code, _, err = invoke(["sets"], SMALL, tmp_path)
    assert code == 1 and "routes disagree" in err
