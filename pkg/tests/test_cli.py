import json

import pytest

from leakyforcing.cli import load_graph, main
from leakyforcing.graph import cycle_graph, emit_graph6, path_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    return str(path)


def test_closure_on_edge_list(capsys, p3_file):
    code, out, _ = run(capsys, "closure", p3_file, "--blue", "0")
    assert code == 0
    assert "closure: {0, 1, 2}" in out and "steps: 0->1,1->2" in out
    code, out, _ = run(capsys, "closure", p3_file, "--blue", "0", "--leaks", "1")
    assert "closure: {0, 1} (2/3)" in out


def test_closure_with_labels(capsys):
    code, out, _ = run(capsys, "closure", "prism:2", "--blue", "u1,u2,u3", "--leaks", "u2,u3",
                       "--json")
    d = json.loads(out)
    assert code == 0 and d["size"] == 4 and not d["complete"]


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "cycle:4", "--blue", "0,1", "--l", "1",
                       "--method", "both")
    d = json.loads(out)
    assert code == 0 and d["accepted"] and d["agree"]
    code, out, _ = run(capsys, "verify", "prism:2", "--blue", "u1,u2,u3", "--l", "2",
                       "--method", "both")
    d = json.loads(out)
    assert code == 1 and not d["accepted"] and d["agree"]
    assert d["witness"] == [0, 1] and d["witness_labels"] == ["u1", "u2"]
    assert [m["accepted"] for m in d["methods"]] == [False, False]
    code, out, _ = run(capsys, "verify", "grid:3,3", "--blue", ",".join(map(str, range(9))),
                       "--l", "0")
    assert code == 0


def test_solve_examples(capsys):
    for graph, l, value in [("grid:4,5", 1, 5), ("supertriangle:4", 4, 9), ("path:7", 1, 2)]:
        code, out, _ = run(capsys, "solve", graph, "--l", str(l))
        d = json.loads(out)
        assert code == 0 and d["value"] == value and d["certified"]
        assert set(d) == {"graph", "l", "value", "witness", "certified"}


def test_family_grid_construction(capsys):
    code, out, _ = run(capsys, "family", "grid", "8", "13", "--l", "1", "--construct", "--verify")
    d = json.loads(out)
    assert code == 0 and d["size"] == 13 and d["verdict"]["accepted"]


def test_family_transposed_grid(capsys):
    code, out, _ = run(capsys, "family", "grid", "7", "4", "--l", "1", "--verify", "--adversary")
    d = json.loads(out)
    assert code == 0 and d["size"] == 7 and d["adversary"]["accepted"]


def test_family_tree_prints_seed(capsys):
    code, out, err = run(capsys, "family", "tree", "--seed", "7", "--size", "12", "--l", "2",
                         "--construct", "--verify")
    d = json.loads(out)
    assert code == 0 and d["seed"] == 7 and "seed: 7" in err
    assert d["verdict"]["accepted"] and d["size"] == d["predicted"]["exact"]


def test_family_clique_with_leaves_report(capsys):
    code, out, _ = run(capsys, "family", "cliqueleaves", "1", "--l", "1")
    d = json.loads(out)
    assert code == 0 and d["unique"] and d["minimum_sets"] == [[3, 4, 5]]


def test_sweep_enumerate(capsys):
    code, out, _ = run(capsys, "sweep", "--enumerate", "5", "--checks", "max,lower,cycle",
                       "--l", "2")
    assert code == 0 and "n=5: 21" in out
    code, out, _ = run(capsys, "sweep", "--enumerate", "6", "--checks", "delete", "--l", "1",
                       "--json")
    d = json.loads(out)
    assert code == 0 and min(int(k) for k in d["delta_witnesses"]) >= -2


def test_sweep_corpus_csv(capsys, tmp_path):
    path = tmp_path / "c.g6"
    path.write_text("\n".join(emit_graph6(g) for g in (path_graph(4), cycle_graph(5))) + "\n")
    code, out, _ = run(capsys, "sweep", "--corpus", str(path), "--checks", "ineq", "--l", "2",
                       "--csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "graph6,n,m,Z0,Z1,Z2,ineq"
    assert lines[1].endswith(",1,2,4,pass") and lines[2].endswith(",2,2,5,pass")


def test_sweep_failure_exit_code(capsys, monkeypatch):
    import leakyforcing.corpus as corpus
    monkeypatch.setattr(corpus, "zl", lambda g, l, prune=False: 3 - l)
    code, out, _ = run(capsys, "sweep", "--enumerate", "3", "--checks", "ineq", "--l", "1")
    assert code == 1 and "FAIL ineq" in out


@pytest.mark.parametrize("argv", [
    ["solve", "nonsense:3"],
    ["solve", "A"],
    ["verify", "path:3", "--blue", "9", "--l", "1"],
    ["verify", "path:3", "--blue", "0", "--l", "5"],
    ["sweep", "--enumerate", "8"],
    ["sweep", "--enumerate", "4", "--checks", "bogus"],
    ["sweep"],
    ["solve", "path:30", "--l", "1", "--exhaustive"],
    ["family", "grid", "3", "--l", "1"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "path:3", "--l", "1"])
    assert exc.value.code == 2


def test_input_auto_detection(tmp_path):
    edges = tmp_path / "g.txt"
    edges.write_text("# comment\n4 3\n0 1\n1 2\n2 3\n")
    assert load_graph(str(edges)) == path_graph(4)
    g6 = tmp_path / "g.g6"
    g6.write_text(emit_graph6(cycle_graph(5)) + "\n")
    assert load_graph(str(g6)) == cycle_graph(5)
    assert load_graph(str(g6), fmt="graph6") == cycle_graph(5)
    assert load_graph(emit_graph6(cycle_graph(5))) == cycle_graph(5)
    assert load_graph("tree:8", seed=4) == load_graph("tree:8", seed=4)
