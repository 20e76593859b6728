"""Experiment campaigns: lemma validation, heuristic benchmarks, and the
closed-form audit for odd regular graphs.

All randomness flows from one seed through ``numpy.random.SeedSequence`` so
that every run with the same arguments is byte-identical.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field, fields
from fractions import Fraction

import numpy as np

from . import generators
from .certificates import METHOD_ORDER, posthoc_check
from .edits import PairClass, classify_pair, lemma1_bound, lemma2_bound, lemma3_bound
from .exact import DEFAULT_CAP, gamma_bruteforce
from .graph import Graph
from .heuristics import HEURISTICS, regular_formula_gamma


class InvariantViolation(AssertionError):
    pass


def instance_seeds(seed: int, count: int) -> list[int]:
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(c.generate_state(1)[0]) for c in children]


# -- lemma campaign -----------------------------------------------------------

@dataclass
class LemmaReport:
    seed: int
    trials: int
    n_max: int
    lemma1_violations: int = 0
    hits: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    def __post_init__(self):
        for lemma in ("lemma2", "lemma3"):
            self.hits.setdefault(lemma, {c.value: 0 for c in PairClass})
            self.violations.setdefault(lemma, {c.value: 0 for c in PairClass})

    @property
    def total_violations(self) -> int:
        return self.lemma1_violations + sum(
            v for per in self.violations.values() for v in per.values())

    def min_class_hits(self) -> int:
        return min(v for per in self.hits.values() for v in per.values())

    def format(self) -> str:
        out = [f"validate-lemmas seed={self.seed} trials={self.trials} n_max={self.n_max}",
               f"lemma1 checked={self.trials} violations={self.lemma1_violations}"]
        for lemma in ("lemma2", "lemma3"):
            for c in PairClass:
                out.append(f"{lemma} {c.value} hits={self.hits[lemma][c.value]} "
                           f"violations={self.violations[lemma][c.value]}")
        for ce in self.counterexamples:
            out.append("counterexample " + ce)
        out.append(f"total_violations={self.total_violations}")
        return "\n".join(out) + "\n"


def lemma_campaign(trials: int, n_max: int, seed: int, cap: int = DEFAULT_CAP) -> LemmaReport:
    """Check the single-edge bounds against exact values on random graphs.

    Each trial draws a connected graph G on 2..n_max vertices, removes a
    uniformly chosen edge to get H, and compares gamma(G) - gamma(H) with the
    opinion-free bound and with the bounds keyed on the optimal functions of
    G and of H.
    """
    if n_max < 2 or n_max > cap:
        raise ValueError(f"n_max must lie in [2, {cap}], got {n_max}")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    report = LemmaReport(seed, trials, n_max)
    for i, s in enumerate(instance_seeds(seed, trials)):
        rng = generators.as_rng(s)
        n = int(rng.integers(2, n_max + 1))
        p = float(rng.uniform(0.05, 0.8))
        g = generators.random_connected(n, p, rng)
        edges = g.sorted_edges
        u, v = edges[int(rng.integers(len(edges)))]
        h = g.without_edge(u, v)
        rg, rh = gamma_bruteforce(g, cap), gamma_bruteforce(h, cap)
        delta = rg.gamma - rh.gamma
        where = f"trial={i} n={n} edges={list(edges)} removed=({u},{v}) delta={delta}"
        if delta not in lemma1_bound():
            report.lemma1_violations += 1
            report.counterexamples.append(f"lemma1 {where}")
        for lemma, f, bound in (("lemma2", rg.witness, lemma2_bound),
                                ("lemma3", rh.witness, lemma3_bound)):
            cls = classify_pair(f, u, v)
            report.hits[lemma][cls.value] += 1
            if delta not in bound(cls):
                report.violations[lemma][cls.value] += 1
                report.counterexamples.append(f"{lemma} {cls.value} {where}")
    return report


# -- benchmark -----------------------------------------------------------------

@dataclass
class BenchRecord:
    instance_id: int
    n: int
    m: int
    method: str
    gamma_found: int
    lb: int
    ub: int
    gamma_exact: int | None
    abs_error: int | None
    contained: bool | None
    flips: int
    runtime_ms: float | None
    seed: int

    def check(self) -> None:
        if self.gamma_exact is None:
            return
        if not self.lb <= self.gamma_exact <= self.ub:
            raise InvariantViolation(f"certificate misses exact value: {self}")
        if self.gamma_found < self.gamma_exact or self.abs_error != self.gamma_found - self.gamma_exact:
            raise InvariantViolation(f"heuristic below the optimum: {self}")

    def row(self) -> list[str]:
        out = []
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                out.append("na")
            elif isinstance(v, bool):
                out.append(str(int(v)))
            elif isinstance(v, float):
                out.append(f"{v:.3f}")
            else:
                out.append(str(v))
        return out


BENCH_HEADER = [f.name for f in fields(BenchRecord)]


def bench_graph(generator: str, n: int, rng, p: float, degree: int) -> Graph:
    if generator == "gnp":
        return generators.connected_gnp(n, p, rng)
    if generator == "random_tree":
        return generators.random_tree(n, rng)
    if generator == "complete":
        return generators.complete(n)
    if generator == "circulant":
        return generators.circulant(n, degree)
    raise ValueError(f"unknown generator {generator!r}")


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, (time.perf_counter() - t0) * 1000.0


def bench_records(generator: str, n: int, trials: int, seed: int, *, p: float = 0.5,
                  degree: int = 2, cap: int = DEFAULT_CAP, timing: bool = False) -> list[BenchRecord]:
    """One record per (instance, heuristic), plus an exact row when ``n <= cap``.

    ``gnp`` instances are resampled until connected.  Without ``timing`` the
    runtime column is left empty so that output is reproducible.
    """
    if n < 1 or trials < 0:
        raise ValueError("need n >= 1 and trials >= 0")
    records = []
    for iid, s in enumerate(instance_seeds(seed, trials)):
        g = bench_graph(generator, n, generators.as_rng(s), p, degree)
        oracle, t_exact = _timed(gamma_bruteforce, g, cap) if g.n <= cap else (None, 0.0)
        if oracle is not None:
            records.append(BenchRecord(iid, g.n, g.m, "exact", oracle.gamma, oracle.gamma,
                                       oracle.gamma, oracle.gamma, 0, True, 0,
                                       t_exact if timing else None, s))
        for method in METHOD_ORDER:
            if method == "regular" and g.n < 3:
                continue
            out, dt = _timed(HEURISTICS[method], g)
            cert = out.certificate
            if oracle is not None:
                rep = posthoc_check(out, oracle)
                exact, err, ok = oracle.gamma, rep.abs_error, rep.contained
            else:
                exact = err = ok = None
            rec = BenchRecord(iid, g.n, g.m, method, out.result.gamma, cert.lb, cert.ub,
                              exact, err, ok, len(out.repair_log), dt if timing else None, s)
            rec.check()
            records.append(rec)
    return records


def records_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


SUMMARY_HEADER = ["method", "instances", "mean_abs_error", "max_abs_error", "containment_failures"]


def summarize(records) -> list[list[str]]:
    rows = []
    for method in METHOD_ORDER:
        errs = [r.abs_error for r in records if r.method == method and r.abs_error is not None]
        fails = sum(1 for r in records if r.method == method and r.contained is False)
        if not errs:
            continue
        rows.append([method, str(len(errs)), f"{sum(errs) / len(errs):.4f}", str(max(errs)), str(fails)])
    return rows


def summary_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_HEADER)
    w.writerows(summarize(records))
    return buf.getvalue()


# -- odd regular closed form audit ---------------------------------------------

@dataclass(frozen=True)
class FormulaRow:
    n: int
    k: int
    formula: Fraction
    oracle: int | None

    @property
    def verdict(self) -> str:
        if self.oracle is None:
            return "unchecked"
        return "agree" if self.formula == self.oracle else "disagree"

    def format(self) -> str:
        oracle = "na" if self.oracle is None else str(self.oracle)
        return f"{self.n} {self.k} {self.formula} {oracle} {self.verdict}"


def feasible_degrees(n: int) -> list[int]:
    return [k for k in range(1, n) if (n * k) % 2 == 0]


def formula_row(n: int, k: int, oracle: bool, cap: int = DEFAULT_CAP) -> FormulaRow:
    value = regular_formula_gamma(n, k)
    exact = None
    if oracle:
        # raises ValueError when no k-regular graph on n vertices exists
        exact = gamma_bruteforce(generators.circulant(n, k), cap).gamma
    return FormulaRow(n, k, value, exact)
