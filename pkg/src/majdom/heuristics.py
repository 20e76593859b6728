"""Certified heuristics built on three special cases: trees, complete graphs
and regular graphs.

Each heuristic solves a nearby special-case graph, walks edge edits from it
to the input graph while repairing the opinion function, and attaches a
certificate bounding gamma of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import generators
from .certificates import (
    SimilarityCertificate,
    certificate_complete,
    certificate_regular,
    certificate_tree,
)
from .edits import (
    EdgeEdit,
    PairClass,
    RepairLog,
    apply_script_with_repair,
    classify_pair,
)
from .exact import DEFAULT_CAP, GammaResult, gamma_bruteforce, gamma_tree, result_for
from .graph import (
    Configuration,
    Graph,
    cyclomatic_number,
    is_connected,
    is_majoritarian,
    neighborhood_sums,
    spanning_tree,
)


@dataclass
class HeuristicOutcome:
    method: str
    result: GammaResult
    certificate: SimilarityCertificate
    repair_log: RepairLog
    special: Graph
    base: GammaResult
    edits: list[EdgeEdit]
    meta: dict = field(default_factory=dict)

    @property
    def edit_counts(self) -> dict:
        c = self.certificate
        return {"k": c.k, "l": c.l, "s": c.s, "m": c.m}


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("graph is disconnected")


def _finish(method, g, base, special, edits, cert, meta=None) -> HeuristicOutcome:
    conf, log = apply_script_with_repair(Configuration(special, base.witness), edits)
    assert conf.graph == g
    res = result_for(g, conf.opinions, optimal=False)
    return HeuristicOutcome(method, res, cert, log, special, base, list(edits), meta or {})


# -- spanning tree --------------------------------------------------------------

def tree_heuristic(g: Graph, strategy: str = "bfs", root: int = 0,
                   pair_rule: str = "opinion") -> HeuristicOutcome:
    """Solve a spanning tree exactly, then add the missing edges back one by one.

    ``pair_rule="vote"`` counts an edge as free when both endpoints vote yes
    under the tree optimum instead of when both hold opinion +1; it exists
    only to probe that alternative reading; the repair argument behind the
    upper end does not cover it.
    """
    _require_connected(g)
    t = spanning_tree(g, strategy, root)
    base = gamma_tree(t, root=root)
    extra = sorted(g.edges - t.edges)
    edits = [EdgeEdit.add(u, v) for u, v in extra]
    k = cyclomatic_number(g)
    if pair_rule == "opinion":
        s = sum(classify_pair(base.witness, u, v) is PairClass.PLUS_PLUS for u, v in extra)
    elif pair_rule == "vote":
        votes = neighborhood_sums(t, base.witness) > 0
        s = sum(bool(votes[u] and votes[v]) for u, v in extra)
    else:
        raise ValueError(f"unknown pair_rule {pair_rule!r}")
    cert = certificate_tree(base.gamma, k, s, k - s)
    return _finish("tree", g, base, t, edits, cert, {"strategy": strategy, "root": root})


# -- complete graph -------------------------------------------------------------

def complete_gamma(n: int) -> int:
    return 1 if n % 2 else 2


def complete_heuristic(g: Graph) -> HeuristicOutcome:
    """Start from K_n with (n-1)//2 opinions -1 and delete the non-edges of ``g``.

    The -1 opinions go first to vertices touching the most deleted edges, so
    that as many deletions as possible join two -1 vertices.
    """
    n = g.n
    kn = generators.complete(n)
    missing = sorted(kn.edges - g.edges)
    deficit = [n - 1 - d for d in g.degrees().tolist()]
    order = sorted(range(n), key=lambda v: (-deficit[v], v))
    f = np.ones(n, dtype=np.int8)
    f[order[: (n - 1) // 2]] = -1
    base = result_for(kn, f, optimal=True)
    assert base.gamma == complete_gamma(n)
    counts = {c: 0 for c in PairClass}
    for u, v in missing:
        counts[classify_pair(f, u, v)] += 1
    cert = certificate_complete(base.gamma, counts[PairClass.PLUS_PLUS],
                                counts[PairClass.MINUS_MINUS], counts[PairClass.MIXED])
    edits = [EdgeEdit.remove(u, v) for u, v in missing]
    return _finish("complete", g, base, kn, edits, cert)


# -- regular graph ----------------------------------------------------------------

def choose_degree(g: Graph, use_median: bool = False) -> int:
    n = g.n
    if n < 3:
        raise ValueError("need n >= 3")
    deg = g.degrees()
    target = float(np.median(deg)) if use_median else 2 * g.m / n
    cands = [k for k in range(1, n) if (n * k) % 2 == 0]
    return min(cands, key=lambda k: (abs(k - target), k % 2, k))


@dataclass
class RegularTarget:
    degree: int
    graph: Graph              # regular graph in the input's vertex labels
    circulant: Graph          # the same graph in its native labels
    mapping: list[int]        # input vertex -> circulant vertex
    removals: list[tuple[int, int]]   # target edges absent from the input
    additions: list[tuple[int, int]]  # input edges absent from the target

    @property
    def distance(self) -> int:
        return len(self.removals) + len(self.additions)

    @property
    def edit_script(self) -> list[EdgeEdit]:
        """Edits turning the target into the input: removals first."""
        return ([EdgeEdit.remove(u, v) for u, v in self.removals]
                + [EdgeEdit.add(u, v) for u, v in self.additions])


def _pull_back(circ: Graph, mapping: list[int]) -> set:
    inv = [0] * len(mapping)
    for v, t in enumerate(mapping):
        inv[t] = v
    out = set()
    for a, b in circ.edges:
        u, v = inv[a], inv[b]
        out.add((u, v) if u < v else (v, u))
    return out


def _sym_diff_size(g: Graph, adj_t: np.ndarray, mapping: np.ndarray) -> int:
    a_g = g.closed_matrix - np.eye(g.n, dtype=np.int32)
    a_t = adj_t[np.ix_(mapping, mapping)]
    return int(np.abs(a_g - a_t).sum()) // 2


def _initial_mappings(g: Graph) -> list[list[int]]:
    n = g.n
    deg = g.degrees()
    by_degree = sorted(range(n), key=lambda v: (-deg[v], v))
    start = by_degree[0]
    bfs = [start]
    seen = {start}
    for v in bfs:
        for w in sorted(g.neighbors(v), key=lambda w: (-deg[w], w)):
            if w not in seen:
                seen.add(w)
                bfs.append(w)
    out = [list(range(n))]
    for seq in (by_degree, bfs):
        mapping = [0] * n
        for pos, v in enumerate(seq):
            mapping[v] = pos
        out.append(mapping)
    return out


def _align(g: Graph, circ: Graph, max_passes: int = 50) -> tuple[list[int], int]:
    """Greedy vertex alignment: best seed mapping, then improving swaps."""
    adj_t = circ.closed_matrix - np.eye(circ.n, dtype=np.int32)
    best = None
    for seed in _initial_mappings(g):
        m = np.array(seed)
        d = _sym_diff_size(g, adj_t, m)
        if best is None or d < best[1]:
            best = (m, d)
    mapping, d = best
    n = g.n
    for _ in range(max_passes):
        improved = False
        for i in range(n):
            for j in range(i + 1, n):
                mapping[i], mapping[j] = mapping[j], mapping[i]
                dd = _sym_diff_size(g, adj_t, mapping)
                if dd < d:
                    d, improved = dd, True
                else:
                    mapping[i], mapping[j] = mapping[j], mapping[i]
        if not improved or d == 0:
            break
    return mapping.tolist(), d


def nearest_regular(g: Graph, widen: bool = False, use_median: bool = False) -> RegularTarget:
    """Closest circulant graph under a greedy vertex alignment.

    The degree is the feasible integer nearest the mean degree.  With
    ``widen`` the degrees ``k-2`` and ``k+2`` are tried as well and the
    smallest edit distance wins.
    """
    _require_connected(g)
    n = g.n
    k0 = choose_degree(g, use_median)
    degrees = [k0]
    if widen:
        degrees += [k for k in (k0 - 2, k0 + 2) if 1 <= k < n]
    best = None
    for k in degrees:
        circ = generators.circulant(n, k)
        mapping, d = _align(g, circ)
        if best is None or d < best[0]:
            best = (d, k, circ, mapping)
    _, k, circ, mapping = best
    target_edges = _pull_back(circ, mapping)
    target = Graph.from_edges(n, target_edges)
    return RegularTarget(
        degree=k,
        graph=target,
        circulant=circ,
        mapping=mapping,
        removals=sorted(target.edges - g.edges),
        additions=sorted(g.edges - target.edges),
    )


def regular_formula_gamma(n: int, k: int) -> Fraction:
    """Closed-form value for odd n with the unnamed denominator taken as ``k``."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    if k < 1:
        raise ValueError("k must be >= 1")
    val = Fraction(k + 1, 2) * max(Fraction(n + 1, 2 * k), Fraction(1))
    if (n, k) in ((5, 3), (9, 5)):
        val += 1
    return val


def greedy_opinions(g: Graph) -> np.ndarray:
    """All +1, then flip to -1 in index order while strict majority survives."""
    f = np.ones(g.n, dtype=np.int8)
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if f[v] == 1:
                f[v] = -1
                if is_majoritarian(g, f):
                    changed = True
                else:
                    f[v] = 1
    return f


def regular_base_opinions(t: RegularTarget | Graph, cap: int = DEFAULT_CAP) -> GammaResult:
    """Exact optimum on the target when the oracle allows it, else the greedy."""
    graph = t.graph if isinstance(t, RegularTarget) else t
    if graph.n <= cap:
        return gamma_bruteforce(graph, cap=cap)
    return result_for(graph, greedy_opinions(graph), optimal=False)


def regular_heuristic(g: Graph, cap: int = DEFAULT_CAP, widen: bool = False,
                      use_median: bool = False) -> HeuristicOutcome:
    if g.n < 3:
        raise ValueError("regular heuristic needs n >= 3")
    target = nearest_regular(g, widen=widen, use_median=use_median)
    base = regular_base_opinions(target, cap=cap)
    # going from the input to the target removes the input-only edges and
    # adds the target-only ones
    cert = certificate_regular(base.gamma, l=len(target.additions), m=len(target.removals),
                               exact_base=base.optimal, n=g.n)
    meta = {"degree": target.degree, "distance": target.distance,
            "formula": regular_formula_gamma(g.n, target.degree) if g.n % 2 else None}
    return _finish("regular", g, base, target.graph, target.edit_script, cert, meta)


HEURISTICS = {
    "tree": tree_heuristic,
    "complete": complete_heuristic,
    "regular": regular_heuristic,
}


def run_all(g: Graph, cap: int = DEFAULT_CAP) -> list[HeuristicOutcome]:
    """Every heuristic applicable to ``g`` (which must be connected)."""
    _require_connected(g)
    outs = [tree_heuristic(g), complete_heuristic(g)]
    if g.n >= 3:
        outs.append(regular_heuristic(g, cap=cap))
    return outs
