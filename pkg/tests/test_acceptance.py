"""Exit criteria.  Each test records one PASS/FAIL line, shown in the summary."""

import io
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from majdom import bench
from majdom import generators as gen
from majdom.certificates import posthoc_check
from majdom.cli import main
from majdom.edits import PairClass
from majdom.exact import gamma_bruteforce, gamma_tree
from majdom.graph import is_majoritarian
from majdom.heuristics import complete_heuristic, regular_heuristic, run_all, tree_heuristic
from majdom.io import serialize_graph

pytestmark = pytest.mark.acceptance


@pytest.fixture
def record(request):
    name = request.node.name

    def _record(ok, detail):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        return ok
    return _record


def test_c1_complete_closed_form(record):
    t0 = time.perf_counter()
    got = {n: gamma_bruteforce(gen.complete(n)).gamma for n in range(2, 13)}
    elapsed = time.perf_counter() - t0
    want = {n: 1 if n % 2 else 2 for n in range(2, 13)}
    ok = got == want and elapsed < 60
    record(ok, f"gamma(K_n) for n=2..12 = {list(got.values())}, {elapsed:.1f}s")
    assert ok


def test_c2_tree_solver_equivalence(record):
    rng = np.random.default_rng(20240923)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(200):
        n = int(rng.integers(1, 15))
        t = gen.random_tree(n, rng)
        r = gamma_tree(t)
        if r.gamma != gamma_bruteforce(t).gamma or not is_majoritarian(t, r.witness) \
                or int(r.witness.sum()) != r.gamma:
            mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 300
    record(ok, f"200 trees, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_c3_lemma_campaign(record):
    t0 = time.perf_counter()
    for seed in range(5):
        report = bench.lemma_campaign(trials=500, n_max=10, seed=seed)
        if report.min_class_hits() >= 30:
            break
    out = io.StringIO()
    code = main(["validate-lemmas", "--trials", "500", "--n-max", "10", "--seed", str(seed)], out=out)
    elapsed = time.perf_counter() - t0
    hits = {f"{lem}.{c.value}": report.hits[lem][c.value] for lem in ("lemma2", "lemma3") for c in PairClass}
    ok = (report.total_violations == 0 and report.min_class_hits() >= 30 and code == 0
          and out.getvalue() == report.format() and elapsed < 600)
    record(ok, f"seed={seed} violations={report.total_violations} hits={hits}, {elapsed:.1f}s")
    assert ok


@pytest.fixture(scope="module")
def campaign():
    rng = np.random.default_rng(7)
    rows = []
    t0 = time.perf_counter()
    for _ in range(100):
        n = int(rng.integers(4, 13))
        p = float(rng.choice([0.1, 0.25, 0.4, 0.6, 0.8]))
        g = gen.random_connected(n, p, rng)
        oracle = gamma_bruteforce(g)
        for o in run_all(g):
            rows.append((g, o, posthoc_check(o, oracle)))
    return rows, time.perf_counter() - t0


def test_c4_theorem_containment(campaign, record):
    rows, elapsed = campaign
    missed = sum(not rep.contained for _, _, rep in rows)
    infeasible = sum(not is_majoritarian(g, o.result.witness) for g, o, _ in rows)
    ok = missed == 0 and infeasible == 0 and len(rows) == 300 and elapsed < 600
    record(ok, f"{len(rows)} outcomes, {missed} containment misses, {infeasible} infeasible, {elapsed:.1f}s")
    assert ok


def test_c5_heuristic_dominance(campaign, record, tmp_path):
    rows, _ = campaign
    below = sum(rep.abs_error < 0 for _, _, rep in rows)
    records = [bench.BenchRecord(i // 3, g.n, g.m, o.method, o.result.gamma, rep.lb, rep.ub,
                                 rep.gamma_exact, rep.abs_error, rep.contained,
                                 len(o.repair_log), None, 7)
               for i, (g, o, rep) in enumerate(rows)]
    path = tmp_path / "summary.csv"
    path.write_text(bench.summary_csv(records))
    lines = path.read_text().splitlines()
    stats = "; ".join(lines[1:])
    ok = below == 0 and lines[0] == ",".join(bench.SUMMARY_HEADER) and len(lines) == 4
    record(ok, f"{below} below optimum; {stats}")
    assert ok


def test_c6_exactness_collapses(record):
    errors = []
    for s in range(30):
        t = gen.random_tree(1 + s % 14, s)
        errors.append(("tree", tree_heuristic(t).result.gamma - gamma_bruteforce(t).gamma))
    for n in range(1, 13):
        k = gen.complete(n)
        errors.append(("complete", complete_heuristic(k).result.gamma - gamma_bruteforce(k).gamma))
    for n in range(3, 13):
        for d in range(2, n):
            if n * d % 2 == 0:
                g = gen.circulant(n, d)
                o = regular_heuristic(g)
                assert o.meta["distance"] == 0
                errors.append(("regular", o.result.gamma - gamma_bruteforce(g).gamma))
    bad = [e for e in errors if e[1] != 0]
    ok = not bad
    record(ok, f"{len(errors)} special-case inputs, nonzero errors: {bad}")
    assert ok


def test_c7_formula_audit(record):
    out = io.StringIO()
    code = main(["gamma-regular", "--n", "5", "7", "9", "11", "--oracle"], out=out)
    lines = out.getvalue().splitlines()
    rows = [l.split() for l in lines[1:] if l and l[0].isdigit()]
    expected = [(n, k) for n in (5, 7, 9, 11) for k in range(2, n, 2)]
    got = [(int(r[0]), int(r[1])) for r in rows]
    verdicts = {r[4] for r in rows}
    disagree = sum(r[4] == "disagree" for r in rows)
    ok = code == 0 and got == expected and verdicts <= {"agree", "disagree"}
    record(ok, f"{len(rows)} (n,k) rows, {disagree} disagreements flagged")
    assert ok


def test_c8_determinism(record, tmp_path):
    gfile = tmp_path / "g.txt"
    gfile.write_text(serialize_graph(gen.random_connected(9, 0.35, 5)))
    commands = [
        ["solve", "--input", str(gfile), "--method", "auto", "--json", "--seed", "4"],
        ["solve", "--input", str(gfile), "--method", "exact"],
        ["validate-lemmas", "--trials", "100", "--n-max", "8", "--seed", "9"],
        ["gamma-regular", "--n", "7", "9", "--oracle"],
    ]
    same = []
    for argv in commands:
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            main(argv, out=buf)
            outs.append(buf.getvalue().encode())
        same.append(outs[0] == outs[1])
    files = []
    for i in range(2):
        path = tmp_path / f"bench{i}.csv"
        summ = tmp_path / f"summary{i}.csv"
        main(["bench", "--generator", "gnp", "--n", "9", "--p", "0.4", "--trials", "6", "--seed", "3",
              "--out", str(path), "--summary", str(summ)], out=io.StringIO())
        files.append(path.read_bytes() + summ.read_bytes())
    same.append(files[0] == files[1])
    proc = [subprocess.run([sys.executable, "-m", "majdom", *commands[0]], capture_output=True).stdout
            for _ in range(2)]
    same.append(proc[0] == proc[1] and proc[0] != b"")
    ok = all(same)
    record(ok, f"{sum(same)}/{len(same)} commands byte-identical across two runs")
    assert ok
