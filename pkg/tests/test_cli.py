"""Command-line driver: round trips, exit codes, output formats."""

import json

import pytest

from magilab.cli import main, to_dot
from magilab.graphs import build_lobster, graph_from_dict
from magilab.labelings import TotalLabeling


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_caterpillar_json(capsys):
    code, out, _ = run(capsys, "gen", "caterpillar", "--spine", "2,1,2")
    assert code == 0
    record = json.loads(out)
    assert record["vertex_count"] == 8
    handle = graph_from_dict(record)
    assert handle.family["kind"] == "caterpillar"


def test_gen_allows_zero_leaf_counts(capsys):
    code, out, _ = run(capsys, "gen", "caterpillar", "--spine", "0,0,0,0")
    assert code == 0
    assert json.loads(out)["vertex_count"] == 4


def test_gen_to_file_then_search_all(tmp_path, capsys):
    path = tmp_path / "L3.json"
    code, _, _ = run(capsys, "gen", "lobster", "-p", "3", "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "search", "--graph", str(path), "--b", "all")
    assert code == 0
    assert json.loads(out) == {"feasible_b": [0, 7], "exhausted": True}


def test_construct_verify_pipeline(tmp_path, capsys):
    bundle_path = tmp_path / "bundle.json"
    code, out, _ = run(capsys, "construct", "caterpillar-beta", "--spine", "1,1",
                       "-o", str(bundle_path))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(bundle_path))
    assert code == 0
    got = json.loads(out)
    assert got["k"] == 12 and got["b"] == 2 and got["super"] is False


def test_verify_bundle_on_stdin(capsys, monkeypatch, tmp_path):
    import io
    import sys as _sys
    code, out, _ = run(capsys, "construct", "double-star", "2", "2", "--variant", "2")
    bundle = out
    monkeypatch.setattr(_sys, "stdin", io.StringIO(bundle))
    code, out, _ = run(capsys, "verify", "-")
    assert code == 0
    assert json.loads(out)["k"] == 18


def test_verify_two_files_and_failure_exit(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    lpath = tmp_path / "lab.json"
    run(capsys, "gen", "path", "-n", "3", "-o", str(gpath))
    lpath.write_text(json.dumps(TotalLabeling((1, 5, 2), (4, 3)).to_dict()))
    code, out, _ = run(capsys, "verify", str(gpath), str(lpath))
    assert code == 0
    assert json.loads(out)["b"] == 2
    # a bijection that is not magic verifies with exit 1
    lpath.write_text(json.dumps(TotalLabeling((1, 2, 3), (4, 5)).to_dict()))
    code, out, _ = run(capsys, "verify", str(gpath), str(lpath))
    assert code == 1
    assert json.loads(out)["k"] is None


def test_transform_dual_and_graceful(tmp_path, capsys):
    bundle_path = tmp_path / "bundle.json"
    run(capsys, "construct", "caterpillar-beta", "--spine", "1,1", "-o", str(bundle_path))
    code, out, _ = run(capsys, "transform", "dual", str(bundle_path))
    assert code == 0
    got = json.loads(out)
    assert got["classification"]["k"] == 12 and got["classification"]["b"] == 2

    code, out, _ = run(capsys, "transform", "graceful", str(bundle_path))
    assert code == 0
    got = json.loads(out)
    assert got["is_graceful"] is True
    assert got["graceful"]["vertex_labels"] == [3, 0, 1, 2]


def test_transform_super_rejects_wrong_offset(tmp_path, capsys):
    bundle_path = tmp_path / "bundle.json"
    run(capsys, "construct", "caterpillar-super", "--spine", "1,1", "-o", str(bundle_path))
    code, _, err = run(capsys, "transform", "super", str(bundle_path))
    assert code == 1
    assert "error" in err


def test_search_reports_match_with_and_without_pruning(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    run(capsys, "gen", "double-star", "1", "2", "-o", str(gpath))
    code, fast, _ = run(capsys, "search", "--graph", str(gpath), "--b", "2")
    assert code == 0
    code, plain, _ = run(capsys, "search", "--graph", str(gpath), "--b", "2", "--no-prune")
    assert code == 0
    assert fast == plain
    record = json.loads(plain)
    assert record["b"] == 2 and record["exhausted"] is True
    assert record["constants"] == [14]
    # CLI output never disagrees with the in-process search
    from magilab.graphs import build_double_star
    from magilab.search import SearchQuery, find_consecutive
    in_process = find_consecutive(SearchQuery(build_double_star(1, 2).graph, b=2))
    assert record == json.loads(json.dumps(in_process.to_dict()))


def test_search_edge_magic_mode(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    run(capsys, "gen", "path", "-n", "3", "-o", str(gpath))
    code, out, _ = run(capsys, "search", "--graph", str(gpath))
    assert code == 0
    record = json.loads(out)
    assert record["b"] is None
    assert record["constants"] == [8, 9, 10]


def test_search_budget_refusal_and_env(tmp_path, capsys, monkeypatch):
    gpath = tmp_path / "g.json"
    run(capsys, "gen", "lobster", "-p", "3", "-o", str(gpath))
    code, _, err = run(capsys, "search", "--graph", str(gpath), "--b", "all",
                       "--budget", "5")
    assert code == 1
    assert "budget exceeded" in err
    monkeypatch.setenv("MAGILAB_BUDGET", "5")
    code, _, err = run(capsys, "search", "--graph", str(gpath), "--b", "all")
    assert code == 1
    assert "budget exceeded" in err
    monkeypatch.setenv("MAGILAB_BUDGET", "30")
    code, out, _ = run(capsys, "search", "--graph", str(gpath), "--b", "all")
    assert code == 0


def test_analyze_constant_form(capsys):
    code, out, _ = run(capsys, "analyze", "constant-form", "2", "2", "18")
    assert code == 0
    assert json.loads(out)["t"] == 6
    code, out, _ = run(capsys, "analyze", "constant-form", "3", "6", "7")
    assert code == 1
    assert json.loads(out)["t"] is None


def test_suite_closing(capsys):
    code, out, _ = run(capsys, "suite", "closing")
    assert code == 0
    assert "pass" in out and "fail" not in out.replace("pass", "")
    code, out, _ = run(capsys, "suite", "closing", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert all(r["verdict"] == "pass" for r in reports)


def test_suite_lobster_table(capsys):
    code, out, _ = run(capsys, "suite", "lobster")
    assert code == 0
    assert "L_4" in out


def test_malformed_spine_exits_2(capsys):
    code, _, err = run(capsys, "gen", "caterpillar", "--spine", "2,x")
    assert code == 2
    assert "malformed spine" in err


def test_bad_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, _, err = run(capsys, "search", "--graph", str(path), "--b", "1")
    assert code == 2
    assert "cannot read JSON" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["definitely-not-a-command"])
    assert exc.value.code == 2


def test_dot_output(capsys):
    code, out, _ = run(capsys, "construct", "caterpillar-beta", "--spine", "1,1",
                       "--format", "dot")
    assert code == 0
    assert out.startswith("graph G {")
    assert '0 [label="6"];' in out
    assert '0 -- 2 [label="4"];' in out


def test_dot_without_labeling_uses_names():
    handle = build_lobster(2)
    text = to_dot(handle.graph, name_map=handle.name_map)
    assert '[label="x"]' in text and '[label="y1"]' in text


def test_search_reads_graph_from_stdin(capsys, monkeypatch):
    import io
    import sys as _sys
    monkeypatch.setattr(_sys, "stdin",
                        io.StringIO(json.dumps(build_lobster(3).to_dict())))
    code, out, _ = run(capsys, "search", "--graph", "-", "--b", "all")
    assert code == 0
    assert json.loads(out)["feasible_b"] == [0, 7]


def test_module_entry_point():
    import subprocess
    import sys as _sys
    proc = subprocess.run([_sys.executable, "-m", "magilab", "analyze",
                           "constant-form", "2", "2", "18"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["t"] == 6
