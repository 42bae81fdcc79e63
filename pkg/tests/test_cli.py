import json
import subprocess
import sys
from importlib import resources

import pytest

from coverideal.cli import main

INSTANCES = resources.files("coverideal.instances")
PENDANTS = str(INSTANCES / "triangle_pendant_pairs.json")
SQUARE = str(INSTANCES / "square_two_triangles.json")
EDGE = '{"vertices": ["x1", "x2"], "edges": [["x1", "x2"]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def report(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_graph_gen_star_triangle(capsys):
    code, rep = report(capsys, "graph", "gen", '{"family": "star_complete", "sizes": [3, 3]}')
    assert code == 0 and rep["outcome"] == "value"
    assert len(rep["result"]["vertices"]) == 5 and len(rep["result"]["edges"]) == 6
    assert set(rep) >= {"command", "params", "outcome", "result", "wall_time", "version", "input_sha256"}


def test_graph_info(capsys):
    code, rep = report(capsys, "graph", "info", SQUARE)
    # {x1, x3} is a maximal independent set, so the largest minimal cover has 6 vertices
    assert rep["result"]["vertices"] == 8 and rep["result"]["max_cover_size"] == 6


def test_ideal_commands(capsys):
    _, rep = report(capsys, "ideal", "cover", EDGE)
    assert rep["result"]["generators"] == [[1, 0], [0, 1]]
    _, rep = report(capsys, "ideal", "symbolic-power", PENDANTS, "--k", "2")
    gens = rep["result"]["generators"]
    assert len(gens) == 11 and [1] * 9 in gens
    _, rep = report(capsys, "ideal", "polarize", '{"ring": ["x"], "generators": [[2]]}')
    assert rep["result"] == {"ring": ["x_1", "x_2"], "generators": [[1, 1]]}
    _, rep = report(capsys, "ideal", "power", '{"ring": ["a", "b"], "generators": [[1, 0], [0, 1]]}', "--k", "2")
    assert len(rep["result"]["generators"]) == 3
    ideal = '{"ring": ["a", "b"], "generators": [[1, 0]]}'
    _, rep = report(capsys, "ideal", "intersect", ideal, '{"ring": ["a", "b"], "generators": [[0, 1]]}')
    assert rep["result"]["generators"] == [[1, 1]]
    _, rep = report(capsys, "ideal", "dual", '{"ring": ["a", "b"], "generators": [[1, 1]]}')
    assert rep["result"]["generators"] == [[1, 0], [0, 1]]
    _, rep = report(capsys, "ideal", "edge", EDGE)
    assert rep["result"]["generators"] == [[1, 1]]


def test_regularity_and_betti(capsys):
    _, rep = report(capsys, "reg", PENDANTS)
    assert rep["result"]["regularity"] == 4
    _, rep = report(capsys, "reg", PENDANTS, "--k", "2", "--field", "3")
    assert rep["result"]["regularity"] == 9
    _, rep = report(capsys, "reg", '{"ring": ["a", "b"], "generators": [[1, 0], [0, 1]]}')
    assert rep["result"]["regularity"] == 1
    code, out = run(capsys, "betti", '{"ring": ["a", "b", "c"], "generators": [[1, 1, 0], [0, 1, 1]]}',
                    "--format", "text")
    assert code == 0 and "    2: 2 1" in out
    _, rep = report(capsys, "betti", PENDANTS, "--method", "hochster")
    assert rep["result"]["entries"] == [[0, 3, 1], [0, 4, 3], [1, 5, 3]]


def test_checks(capsys):
    code, rep = report(capsys, "check", "lq", SQUARE, "--k", "2", "--polarize")
    assert code == 0 and rep["outcome"] == "refutation"
    code, rep = report(capsys, "check", "vd", '{"vertices": ["a"], "edges": []}')
    assert rep["outcome"] == "certificate" and rep["result"]["nodes"] == [{"leaf": ["a"]}]
    _, rep = report(capsys, "check", "cwl", PENDANTS)
    assert rep["result"]["componentwise_linear"] is True
    _, rep = report(capsys, "check", "cwl", SQUARE, "--k", "2")
    assert rep["result"] == {"componentwise_linear": False, "failing_degree": 8, "field": 2}
    _, rep = report(capsys, "check", "linres", EDGE)
    assert rep["result"]["linear_resolution"] is True
    _, rep = report(capsys, "check", "seqcm", SQUARE)
    assert rep["result"]["sequentially_cm"] is True


def test_certificates_chain_into_validate(capsys, tmp_path):
    out = tmp_path / "lq.json"
    code, _ = run(capsys, "check", "lq", PENDANTS, "--k", "2", "--out", str(out))
    assert code == 0
    code, rep = report(capsys, "validate", str(out))
    assert code == 0 and rep["result"] == {"type": "linear-quotients", "valid": True}
    data = json.loads(out.read_text())
    data["result"]["colon_vars"][1] = []
    out.write_text(json.dumps(data))
    code, rep = report(capsys, "validate", str(out))
    assert code == 1 and rep["result"]["valid"] is False


def test_budget_exceeded_exit_code(capsys):
    code, rep = report(capsys, "check", "lq", SQUARE, "--k", "2", "--budget-nodes", "10")
    assert code == 2 and rep["outcome"] == "budget-exceeded"


def test_error_exit_codes(capsys, tmp_path):
    code, rep = report(capsys, "reg", str(tmp_path / "missing.json"))
    assert code == 3 and rep["outcome"] == "error"
    code, rep = report(capsys, "ideal", "cover", '{"vertices": ["a"], "edges": [["a", "b"]]}')
    assert code == 1 and "undeclared" in rep["message"]
    code, rep = report(capsys, "reg", EDGE, "--field", "4")
    assert code == 1
    code, rep = report(capsys, "ideal", "cover", "{not json")
    assert code == 1
    code, rep = report(capsys, "reg", EDGE, "--out", str(tmp_path / "no" / "dir.json"))
    assert code == 3
    with pytest.raises(SystemExit):
        main(["reg", EDGE, "--k", "0"])


def test_reports_are_deterministic(capsys):
    first = report(capsys, "check", "vd", SQUARE)[1]
    second = report(capsys, "check", "vd", SQUARE)[1]
    first.pop("wall_time"), second.pop("wall_time")
    assert first == second


def test_verify_matrix(capsys):
    code, out = run(capsys, "verify", "ex-4.12", "lem-2.9", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("PASS  ex-4.12") and '"reg_F2": [4, 9]' in lines[2]
    assert lines[3].startswith("PASS  lem-2.9")
    code, rep = report(capsys, "verify", "nope")
    assert code == 1 and rep["outcome"] == "error"


def test_module_entry_point_and_logging():
    proc = subprocess.run(
        [sys.executable, "-m", "coverideal", "graph", "gen", '{"family": "star_complete", "sizes": [2]}'],
        capture_output=True, text=True, env={"COVERIDEAL_LOG": "debug", "PATH": ""},
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["vertices"] == ["a", "a_c1_1"]
