import json

import pytest

from unicellular.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "--json", "info", "1 2 -1 -2")
    d = json.loads(out)[0]
    assert code == 0
    assert (d["genus"], d["vertices"], d["edges"], d["degrees"]) == (1, 1, 2, [4])


def test_json_after_subcommand(capsys):
    code, out, _ = run(capsys, "info", "1 2 -1 -2", "--json")
    assert code == 0 and json.loads(out)[0]["genus"] == 1


def test_malformed(capsys):
    code, _, err = run(capsys, "info", "1 2 1 -2")
    assert code == 1 and "error" in err


def test_unrealizable(capsys):
    assert run(capsys, "enumerate", "--degrees", "2")[0] == 1


def test_neighbors_empty(capsys):
    code, out, _ = run(capsys, "--json", "neighbors", "1 2 -1 -2")
    d = json.loads(out)[0]
    assert code == 0 and d["neighbors"] == [] and d["count"] == 0


def test_neighbors_count_only(capsys):
    code, out, _ = run(capsys, "neighbors", "1 2 -1 3 4 -2 -4 5 6 -3 -5 -6", "--count-only")
    assert code == 0 and out.strip().startswith("#")


def test_canon(capsys):
    code, out, _ = run(capsys, "canon", "2 1 -2 -1")
    assert out.strip() == "1 2 -1 -2  symmetry 4"


def test_file_input(capsys, tmp_path):
    f = tmp_path / "in.umf"
    f.write_text("# two maps\n1 2 -1 -2\n1 -1 2 -2\n")
    code, out, _ = run(capsys, "--json", "info", str(f))
    assert [d["genus"] for d in json.loads(out)] == [1, 0]


def test_enumerate_out_and_threads(capsys, tmp_path):
    f = tmp_path / "c.umf"
    code, out, _ = run(capsys, "--threads", "2", "enumerate", "--degrees", "3,3,3,3,3,3",
                       "--out", str(f))
    lines = [l for l in f.read_text().splitlines() if not l.startswith("#")]
    assert code == 0 and len(lines) == 9
    code, out1, _ = run(capsys, "--threads", "1", "enumerate", "--degrees", "3,3,3,3,3,3")
    code, out2, _ = run(capsys, "--threads", "3", "enumerate", "--degrees", "3,3,3,3,3,3")
    assert out1 == out2
    assert out1.splitlines()[:9] == lines


def test_enumerate_resume(capsys, tmp_path):
    cur = tmp_path / "cursor.json"
    code, out, _ = run(capsys, "--json", "enumerate", "--degrees", "3,3,3,3,3,3",
                       "--max-classes", "4", "--cursor-out", str(cur))
    first = json.loads(out)
    assert code == 2 and not first["complete"] and first["count"] == 4
    assert {"prefix", "stack"} <= set(json.loads(cur.read_text()))
    code, out, _ = run(capsys, "--json", "enumerate", "--degrees", "3,3,3,3,3,3",
                       "--resume", str(cur))
    rest = json.loads(out)
    code, out, _ = run(capsys, "--json", "enumerate", "--degrees", "3,3,3,3,3,3")
    assert first["words"] + rest["words"] == json.loads(out)["words"]


def test_bad_cursor(capsys, tmp_path):
    cur = tmp_path / "bad.json"
    cur.write_text("not json")
    assert run(capsys, "enumerate", "--degrees", "4", "--resume", str(cur))[0] == 1


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "--degrees", "4,4,4", "--export", "json")
    d = json.loads(out)
    assert code == 0 and len(d["nodes"]) == 6 and len(d["edges"]) == 7


def test_graph_dot_file(capsys, tmp_path):
    f = tmp_path / "k.dot"
    code, _, _ = run(capsys, "export", "--degrees", "4,4,4", "--export", "dot", "--out", str(f))
    assert code == 0 and f.read_text().startswith("graph K {")


def test_graph_cap(capsys):
    code, _, _ = run(capsys, "graph", "--degrees", "3,3,3,3,3,3", "--max-nodes", "3")
    assert code == 2
    assert run(capsys, "components", "--degrees", "3,3,3,3,3,3", "--max-nodes", "3")[0] == 2


def test_components_and_diameter(capsys):
    code, out, _ = run(capsys, "--json", "components", "--degrees", "8")
    d = json.loads(out)
    assert d["connected"] is False and d["isolated"] == [3]
    code, out, _ = run(capsys, "--json", "diameter", "--degrees", "4,4,4")
    d = json.loads(out)
    assert 3 <= d["diameter"] <= 18 and d["exact"]
    code, out, _ = run(capsys, "--json", "diameter", "--degrees", "8")
    assert json.loads(out)["diameter"] == "infinite"


def test_structure_commands(capsys):
    code, out, _ = run(capsys, "--json", "bridges", "1 -1 2 -2")
    assert json.loads(out)[0]["bridges"] == [1, 2]
    code, out, _ = run(capsys, "--json", "matching", "1 2 3 -1 -2 -3")
    assert len(json.loads(out)[0]["matching"]) == 1
    code, out, _ = run(capsys, "eliminate-bridges", "1 2 3 -1 -2 -3")
    assert out.strip() == "1 2 3 -1 -2 -3"
    assert run(capsys, "eliminate-bridges", "1 2 -1 -2")[0] == 1


def test_invariant(capsys):
    code, out, _ = run(capsys, "--json", "invariant", "1 2 -1 -2")
    d = json.loads(out)[0]
    assert d["even"] and d["rank"] == 2 and d["certificate"]["u"] == [1, 1]
    code, out, _ = run(capsys, "--json", "invariant", "1 2 3 -1 -2 -3")
    assert json.loads(out)[0]["certificate"] is None


@pytest.mark.parametrize("suite, flags", [
    ("involution", ["--degrees", "3,3,3,3,3,3"]),
    ("rank-genus", ["--degrees", "4,4,4"]),
    ("card-shuffle", ["--degrees", "4,4,4"]),
    ("petersen", ["--degrees", "3,3,3,3,3,3"]),
    ("even-invariant", ["--max-edges", "5"]),
])
def test_verify(capsys, suite, flags):
    code, out, _ = run(capsys, "--json", "verify", suite, *flags)
    d = json.loads(out)
    assert code == 0
    assert {"suite", "checks", "failures", "seconds"} <= set(d)
    assert d["suite"] == suite and d["failures"] == [] and d["checks"] > 0


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 1 and "unknown suite" in err


def test_usage_error_is_invalid_input(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--degrees", "a,b"])
    assert info.value.code == 1


def test_count_report(capsys):
    code, out, _ = run(capsys, "--json", "count-report")
    rows = json.loads(out)
    assert [(r["genus"], r["classes"], r["formula"]) for r in rows] == [(1, 1, 1), (2, 6, 45)]


def test_deterministic_output(capsys):
    outs = {run(capsys, "graph", "--degrees", "3,3,3,3,3,3", "--export", "json")[1] for _ in range(2)}
    assert len(outs) == 1
