"""Exact strict majority domination numbers.

``gamma_bruteforce`` enumerates all ``2**n`` opinion vectors and is the
reference oracle.  ``gamma_tree`` is a dynamic program over a rooted tree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, is_majoritarian, is_tree, make_opinions, neighborhood_sums

DEFAULT_CAP = 20
_CHUNK = 1 << 15


class OracleCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class GammaResult:
    gamma: int
    witness: np.ndarray
    yes_count: int
    optimal: bool
    graph: Graph

    def __post_init__(self):
        object.__setattr__(self, "witness", make_opinions(self.witness, self.graph.n))

    def check(self) -> None:
        """Raise ``AssertionError`` if the witness does not back the claimed value."""
        assert int(self.witness.sum()) == self.gamma
        assert is_majoritarian(self.graph, self.witness)


def result_for(graph: Graph, f, optimal: bool) -> GammaResult:
    f = make_opinions(f, graph.n)
    yes = int((neighborhood_sums(graph, f) > 0).sum())
    return GammaResult(int(f.sum()), f, yes, optimal, graph)


def _mask_block(lo: int, hi: int, n: int) -> np.ndarray:
    # vertex 0 is the most significant bit, bit 1 means +1, so ascending masks
    # are lexicographically ascending opinion vectors with -1 < +1
    masks = np.arange(lo, hi, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (masks[:, None] >> shifts) & 1
    return (2 * bits - 1).astype(np.int32)


def _best_in_range(graph: Graph, lo: int, hi: int):
    """Best (value, mask) over masks in ``[lo, hi)``, or None if none feasible."""
    n = graph.n
    a = graph.closed_matrix
    best = None
    for start in range(lo, hi, _CHUNK):
        stop = min(hi, start + _CHUNK)
        f = _mask_block(start, stop, n)
        yes = ((f @ a) > 0).sum(axis=1)
        feasible = 2 * yes > n
        if not feasible.any():
            continue
        values = np.where(feasible, f.sum(axis=1), n + 1)
        i = int(np.argmin(values))  # first minimiser = smallest mask
        cand = (int(values[i]), start + i)
        if best is None or cand < best:
            best = cand
    return best


def gamma_bruteforce(g: Graph, cap: int = DEFAULT_CAP, parts: int = 1) -> GammaResult:
    """Minimum opinion sum over all strictly majoritarian functions.

    Among minimisers the lexicographically least witness is returned.
    ``parts`` splits the enumeration into independent mask ranges; the
    reduction is deterministic so the result does not depend on it.
    """
    if g.n > cap:
        raise OracleCapExceeded(f"oracle cap exceeded: n={g.n} > cap={cap}")
    total = 1 << g.n
    bounds = np.linspace(0, total, max(1, parts) + 1).astype(np.int64).tolist()
    found = [_best_in_range(g, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    value, mask = min(b for b in found if b is not None)
    f = _mask_block(mask, mask + 1, g.n)[0]
    res = result_for(g, f, optimal=True)
    assert res.gamma == value
    return res


# -- trees ------------------------------------------------------------------

def _rooted(t: Graph, root: int):
    parent = [-1] * t.n
    order = [root]
    seen = [False] * t.n
    seen[root] = True
    for v in order:
        for w in t.neighbors(v):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
    children = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    return order, parent, children


def gamma_tree(t: Graph, root: int = 0) -> GammaResult:
    """Exact domination number of a tree by a subtree merge.

    For each vertex ``v`` and each pair (opinion of ``v``, opinion of its
    parent) the table maps a yes-count inside the subtree to the smallest
    opinion sum inside that subtree.  Children are merged one at a time while
    tracking the running sum of child opinions, which fixes ``v``'s own vote
    once the parent opinion is known.  Runs in O(n^2 * max_degree).
    """
    if not is_tree(t):
        raise ValueError("gamma_tree needs a tree (connected, n-1 edges)")
    n = t.n
    order, parent, children = _rooted(t, root)

    # table[v][(fv, fp)] = {y: (sum, merge_key)}
    table: list[dict] = [None] * n
    # back[v][fv][i] = {(c, y): (prev_key, fc, yc)} for the i-th child merge
    back: list[dict] = [None] * n

    for v in reversed(order):
        parent_opts = (0,) if parent[v] < 0 else (-1, 1)
        tv = {}
        bv = {}
        for fv in (-1, 1):
            merged = {(0, 0): 0}
            steps = []
            for ch in children[v]:
                nxt: dict = {}
                ptr: dict = {}
                tables = [(fc, table[ch][(fc, fv)]) for fc in (-1, 1)]
                for (c, y), s in merged.items():
                    for fc, sub in tables:
                        for yc, (sc, _) in sub.items():
                            key = (c + fc, y + yc)
                            val = s + sc
                            if key not in nxt or val < nxt[key]:
                                nxt[key] = val
                                ptr[key] = ((c, y), fc, yc)
                merged = nxt
                steps.append(ptr)
            bv[fv] = steps
            for fp in parent_opts:
                row: dict = {}
                for (c, y), s in merged.items():
                    yy = y + (fv + fp + c > 0)
                    val = fv + s
                    if yy not in row or val < row[yy][0]:
                        row[yy] = (val, (c, y))
                tv[(fv, fp)] = row
        table[v] = tv
        back[v] = bv

    best = None
    for fv in (-1, 1):
        for y, (val, _) in sorted(table[root][(fv, 0)].items()):
            if 2 * y > n and (best is None or val < best[0]):
                best = (val, fv, y)
    assert best is not None  # all +1 is always feasible

    f = [0] * n
    stack = [(root, best[1], 0, best[2])]
    while stack:
        v, fv, fp, y = stack.pop()
        f[v] = fv
        _, key = table[v][(fv, fp)][y]
        steps = back[v][fv]
        for i in range(len(children[v]) - 1, -1, -1):
            key, fc, yc = steps[i][key]
            stack.append((children[v][i], fc, fv, yc))

    res = result_for(t, f, optimal=True)
    assert res.gamma == best[0]
    return res
