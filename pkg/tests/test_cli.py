import json

import pytest

from laplat import __version__
from laplat.main import run

G7 = {"vertices": 3, "edges": [[0, 1, 3], [0, 2, 2], [1, 2, 2]]}
K3 = {"vertices": 3, "edges": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]}
P3 = {"vertices": 3, "edges": [[0, 1, 1], [1, 2, 1]]}
STAR = {"vertices": 3, "edges": [[0, 1, 1], [0, 2, 1]]}


@pytest.fixture
def g7_file(tmp_path):
    path = tmp_path / "g7.json"
    path.write_text(json.dumps(G7))
    return str(path)


def _output(capsys):
    return json.loads(capsys.readouterr().out)


def _error(capsys):
    return json.loads(capsys.readouterr().err)


def test_invariants(capsys, g7_file):
    assert run(["invariants", g7_file]) == 0
    result = _output(capsys)
    assert result["trees"] == 16
    assert result["genus"] == 5
    assert (result["nu"], result["pac"], result["cov"]) == ("2", "4/3", "7/3")
    assert result["shortest_witness"] == [-2, -2, 4]
    assert result["ramanujan"]["verdict"] == "not_applicable"
    assert result["ramanujan_bounds"] is None


def test_invariants_with_ramanujan_bounds(capsys):
    k4 = {"vertices": 4, "edges": [[i, j, 1] for i in range(4) for j in range(i + 1, 4)]}
    assert run(["invariants", json.dumps(k4), "--ramanujan-bounds"]) == 0
    result = _output(capsys)
    assert result["ramanujan"]["verdict"] == "ramanujan"
    assert result["ramanujan_bounds"]["theta_upper"] is not None


def test_pretty_format(capsys, g7_file):
    assert run(["--format", "pretty", "spectrum", g7_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("{\n  ")
    spectrum = json.loads(out)["spectrum"]
    assert spectrum[0] == 0
    assert spectrum[1:] == pytest.approx([6, 8])


def test_graph_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(K3)))
    assert run(["invariants", "-"]) == 0
    assert _output(capsys)["cov"] == "1"


def test_delaunay(capsys, g7_file):
    assert run(["delaunay", g7_file, "--hull-check"]) == 0
    result = _output(capsys)
    assert result["f_vector"] == [6, 6, 6]
    assert len(result["vertices"]) == 6
    assert all(facet["size"] == 2 for facet in result["facets"])
    assert result["hull_check"]["vertices_match"]


def test_delaunay_locate(capsys):
    assert run(["delaunay", json.dumps(K3), "--locate", '["1/3", "1/3", "-2/3"]']) == 0
    result = _output(capsys)
    assert result["translate"] == [0, 0, 0]
    assert sorted(result["sigma"]) == [0, 1, 2]


def test_reconstruct(capsys):
    points = [[1, -1, 0], [-1, 2, -1], [0, -1, 1], [0, 1, -1], [1, -2, 1], [-1, 1, 0]]
    assert run(["reconstruct", json.dumps(points)]) == 0
    result = _output(capsys)
    assert result["laplacian"] == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    assert result["graph"] == P3


def test_reconstruct_rejects_a_broken_vertex_set(capsys):
    points = [[-1, 2, -1], [0, -1, 1], [0, 1, -1], [1, -2, 1], [-1, 1, 0]]
    assert run(["reconstruct", json.dumps({"vertices": points})]) == 1
    assert _error(capsys)["error"] == "not_a_delaunay_polytope"


def test_isomorphic(capsys):
    assert run(["isomorphic", json.dumps(P3), json.dumps(STAR)]) == 0
    assert _output(capsys) == {"isomorphic": True, "perm": [1, 0, 2]}
    assert run(["isomorphic", json.dumps(P3), json.dumps(K3)]) == 0
    assert _output(capsys) == {"isomorphic": False, "perm": None}


def test_census(capsys):
    assert run(["census", "--vertices", "3", "--max-mult", "2"]) == 0
    result = _output(capsys)
    assert result["graphs"] == sum(entry["size"] for entry in result["classes"])
    assert result["classes"][0]["trees"] == 1


def test_chip_firing(capsys):
    assert run(["equiv", json.dumps(K3), "[2, -1, 0]", "[0, 0, 1]"]) == 0
    assert _output(capsys) == {"equivalent": True, "witness": [1, 0, 0]}
    assert run(["effective", json.dumps(K3), "[2, -1, 0]"]) == 0
    assert _output(capsys) == {"effective": True, "representative": [0, 0, 1], "firing": [1, 0, 0]}
    assert run(["effective", json.dumps(K3), "[1, -1, 0]"]) == 0
    assert _output(capsys)["effective"] is False


def test_oracles(capsys):
    assert run(["oracle", "critical", json.dumps(K3)]) == 0
    result = _output(capsys)
    assert result["all_equal_cov"]
    assert len(result["points"]) == 6

    assert run(["oracle", "critical", json.dumps(G7)]) == 0
    result = _output(capsys)
    assert result["all_equal_cov"]
    assert {point["value"] for point in result["points"]} == {"7/3"}

    assert run(["oracle", "voronoi", json.dumps(K3), "--resolution", "24"]) == 0
    assert [2, -1, -1] in _output(capsys)["neighbours"]

    assert run(["oracle", "limit", json.dumps(P3), "--epsilons", "1/2,1/4", "--mode", "zeros"]) == 0
    result = _output(capsys)
    assert result["mode"] == "zeros"
    assert [step["pac_gap"] for step in result["steps"]] == ["1/6", "1/12"]


def test_svg(capsys):
    assert run(["svg", json.dumps(K3), "--resolution", "3"]) == 0
    assert capsys.readouterr().out.startswith("<svg")


def test_malformed_json(capsys):
    assert run(["invariants", '{"vertices": 3,']) == 1
    assert _error(capsys)["error"] == "invalid_input"


def test_invalid_graph(capsys):
    assert run(["invariants", '{"vertices": 3, "edges": [[1, 0, 1]]}']) == 1
    assert _error(capsys)["error"] == "invalid_input"
    assert run(["invariants", '{"vertices": 3, "edges": [[0, 1, 1]]}']) == 1
    assert _error(capsys)["error"] == "disconnected_graph"
    assert run(["invariants", '{"vertices": 3, "edges": [[0, 1, 1], [0, 2, 1], [1, 2, 0]]}']) == 1
    assert _error(capsys)["error"] == "invalid_input"


def test_guard_violation(capsys):
    assert run(["census", "--vertices", "5", "--max-mult", "1"]) == 1
    error = _error(capsys)
    assert error["error"] == "enumeration_limit"
    assert error["detail"]["limit"] == 4


def test_usage_errors(capsys, tmp_path):
    assert run(["invariants", str(tmp_path / "missing.json")]) == 2
    assert _error(capsys)["error"] == "usage_error"
    assert run(["oracle", "limit", json.dumps(K3), "--epsilons", "1/0"]) == 2
    capsys.readouterr()
    assert run(["frobnicate"]) == 2
    assert run(["--log-level", "LOUD", "spectrum", json.dumps(K3)]) == 2


def test_version(capsys):
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out
