import io
import json
import subprocess
import sys

import pytest

from majdom import generators as gen
from majdom.cli import main
from majdom.io import serialize_graph


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(serialize_graph(g))
        return str(p)
    return write


def test_solve_exact_k5(graph_file):
    code, text = run("solve", "--input", graph_file(gen.complete(5)), "--method", "exact")
    assert code == 0 and "gamma=1" in text


def test_solve_exact_json(graph_file):
    code, text = run("solve", "--input", graph_file(gen.cycle(7)), "--method", "exact", "--json")
    rec = json.loads(text)
    assert code == 0 and rec["gamma"] == 1 and rec["optimal"] and len(rec["witness"]) == 7


def test_solve_auto_on_tree(graph_file):
    code, text = run("solve", "--input", graph_file(gen.random_tree(9, 2)), "--json")
    rec = json.loads(text)
    assert code == 0
    assert rec["selected"]["method"] == "tree"
    assert rec["selected"]["certificate"]["width"] == 0
    assert [r["method"] for r in rec["ranking"]][0] == "tree"


@pytest.mark.parametrize("method", ["tree", "complete", "regular"])
def test_solve_each_heuristic(graph_file, method):
    code, text = run("solve", "--input", graph_file(gen.random_connected(8, 0.3, 1)), "--method", method)
    assert code == 0 and f"method={method}" in text


def test_solve_cap_exceeded(graph_file, capsys):
    code, _ = run("solve", "--input", graph_file(gen.cycle(25)), "--method", "exact")
    assert code == 2
    assert "oracle cap exceeded" in capsys.readouterr().err


def test_solve_input_errors(tmp_path, graph_file, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 2\n")
    assert run("solve", "--input", str(bad))[0] == 2
    assert run("solve", "--input", str(tmp_path / "missing.txt"))[0] == 2
    split = graph_file(gen.gnp(4, 0.0, 0), "split.txt")
    assert run("solve", "--input", split, "--method", "tree")[0] == 2
    assert "disconnected" in capsys.readouterr().err
    assert run("solve", "--input", split, "--method", "nope")[0] == 2


def test_tally(tmp_path, graph_file):
    op = tmp_path / "f.txt"
    op.write_text("1 1 -1 1 -1\n")
    code, text = run("tally", "--input", graph_file(gen.cycle(5)), "--opinions", str(op))
    assert code == 0 and text == "yes=4 n=5 accepted=1 sum=1\n"


def test_validate_lemmas():
    code, text = run("validate-lemmas", "--trials", "60", "--n-max", "7", "--seed", "3")
    assert code == 0 and "total_violations=0" in text and "seed=3" in text
    hits = [int(l.split("hits=")[1].split()[0]) for l in text.splitlines() if "hits=" in l]
    assert sum(hits) == 2 * 60


def test_validate_lemmas_empty_and_cap():
    code, text = run("validate-lemmas", "--trials", "0")
    assert code == 0 and "total_violations=0" in text
    assert run("validate-lemmas", "--n-max", "25")[0] == 2


def test_bench_gnp(tmp_path):
    out, summ = tmp_path / "b.csv", tmp_path / "s.csv"
    code, _ = run("bench", "--generator", "gnp", "--n", "10", "--p", "0.3", "--trials", "5",
                  "--seed", "1", "--out", str(out), "--summary", str(summ))
    assert code == 0
    lines = out.read_text().splitlines()
    assert out.read_text().endswith("\n")
    header = lines[0].split(",")
    rows = [dict(zip(header, l.split(","))) for l in lines[1:]]
    assert sum(r["method"] == "exact" for r in rows) == 5
    assert sum(r["method"] != "exact" for r in rows) == 15
    assert all(r["contained"] == "1" for r in rows)
    assert all(int(r["abs_error"]) >= 0 for r in rows)
    assert summ.read_text().splitlines()[0].startswith("method,instances,mean_abs_error")


def test_bench_empty_and_unwritable(tmp_path):
    out = tmp_path / "e.csv"
    assert run("bench", "--generator", "gnp", "--n", "6", "--trials", "0", "--out", str(out))[0] == 0
    assert out.read_text() == ("instance_id,n,m,method,gamma_found,lb,ub,gamma_exact,abs_error,"
                               "contained,flips,runtime_ms,seed\n")
    bad = tmp_path / "nodir" / "x.csv"
    assert run("bench", "--generator", "gnp", "--n", "6", "--trials", "1", "--out", str(bad))[0] == 2


def test_bench_above_cap_has_no_exact(tmp_path):
    out = tmp_path / "big.csv"
    code, _ = run("bench", "--generator", "circulant", "--n", "22", "--degree", "4",
                  "--trials", "1", "--out", str(out), "--cap", "20")
    assert code == 0
    rows = out.read_text().splitlines()[1:]
    assert len(rows) == 3 and all(",na,na,na," in r for r in rows)


def test_gamma_regular():
    code, text = run("gamma-regular", "--n", "5", "--k", "3")
    assert code == 0 and "5 3 3 na unchecked" in text
    code, text = run("gamma-regular", "--n", "7", "--k", "2", "--oracle")
    assert code == 0 and "7 2 3 1 disagree" in text
    assert run("gamma-regular", "--n", "6")[0] == 2
    assert run("gamma-regular", "--n", "5", "--k", "3", "--oracle")[0] == 2


def test_module_entry_point(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(serialize_graph(gen.complete(4)))
    proc = subprocess.run([sys.executable, "-m", "majdom", "solve", "--input", str(p), "--method", "exact"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "gamma=2" in proc.stdout
