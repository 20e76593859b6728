"""Deterministic and seeded graph generators.

Random generators take a ``numpy.random.Generator`` or an integer seed; no
global RNG state is touched.
"""

from __future__ import annotations

import networkx as nx
import numpy as np

from .graph import Graph, is_connected


def as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return circulant(n, 2)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def circulant(n: int, degree: int) -> Graph:
    """``degree``-regular circulant graph on ``n`` vertices.

    Vertex ``i`` joins ``i ± 1, ..., i ± degree // 2``; an odd degree adds the
    antipodal matching ``i -- i + n/2``, which needs ``n`` even.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= degree < n:
        raise ValueError(f"degree must satisfy 0 <= degree < n, got degree={degree}, n={n}")
    if (n * degree) % 2:
        raise ValueError(f"no {degree}-regular graph on {n} vertices (n*degree is odd)")
    edges = set()
    for i in range(n):
        for off in range(1, degree // 2 + 1):
            j = (i + off) % n
            edges.add((min(i, j), max(i, j)))
        if degree % 2:
            j = (i + n // 2) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, edges)


def gnp(n: int, p: float, seed=None) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = as_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return path(n)
    rng = as_rng(seed)
    seq = rng.integers(0, n, size=n - 2).tolist()
    t = nx.from_prufer_sequence(seq)
    return Graph.from_edges(n, t.edges())


def random_connected(n: int, p: float, seed=None) -> Graph:
    """Random tree plus each remaining pair independently with probability ``p``."""
    rng = as_rng(seed)
    t = random_tree(n, rng)
    iu, ju = np.triu_indices(n, k=1)
    extra = rng.random(iu.size) < p
    edges = set(t.edges)
    edges.update(zip(iu[extra].tolist(), ju[extra].tolist()))
    return Graph.from_edges(n, edges)


def connected_gnp(n: int, p: float, seed=None, max_tries: int = 10_000) -> Graph:
    """Rejection-sample ``gnp`` until the draw is connected."""
    rng = as_rng(seed)
    for _ in range(max_tries):
        g = gnp(n, p, rng)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) draw in {max_tries} tries")


def generate(kind: str, n: int, *, p: float = 0.5, degree: int = 2, seed=None) -> Graph:
    if kind == "gnp":
        return gnp(n, p, seed)
    if kind == "random_tree":
        return random_tree(n, seed)
    if kind == "complete":
        return complete(n)
    if kind == "circulant":
        return circulant(n, degree)
    raise ValueError(f"unknown generator {kind!r}")
