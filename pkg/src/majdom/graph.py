"""Graphs, opinion functions and the two-level voting rule.

Every vertex implicitly carries a self-loop: the closed neighbourhood of ``v``
is its adjacency list plus ``v`` itself.  Self-loops are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import networkx as nx
import numpy as np


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Use :meth:`from_edges` to build one; it validates and canonicalises the
    edge list.
    """

    n: int
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        n = int(n)
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        seen: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u} (loops are implicit)")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def closed_matrix(self) -> np.ndarray:
        """Adjacency matrix plus identity, as int32."""
        a = np.eye(self.n, dtype=np.int32)
        if self.edges:
            idx = np.array(self.sorted_edges)
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        a.flags.writeable = False
        return a

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def with_edge(self, u: int, v: int) -> "Graph":
        e = _norm(u, v)
        if e in self.edges:
            raise ValueError(f"edge {e} already present")
        return Graph.from_edges(self.n, self.edges | {e})

    def without_edge(self, u: int, v: int) -> "Graph":
        e = _norm(u, v)
        if e not in self.edges:
            raise ValueError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges)
        return g


# -- opinions ---------------------------------------------------------------

def make_opinions(values, n: int | None = None) -> np.ndarray:
    """Validate a ±1 vector and return it as a read-only int8 array."""
    f = np.array(values, dtype=np.int64).ravel()
    if n is not None and f.size != n:
        raise ValueError(f"expected {n} opinions, got {f.size}")
    if f.size and not np.all((f == 1) | (f == -1)):
        bad = f[(f != 1) & (f != -1)][0]
        raise ValueError(f"opinion value {bad} is not -1 or +1")
    out = f.astype(np.int8)
    out.flags.writeable = False
    return out


def opinion_sum(f) -> int:
    return int(np.asarray(f, dtype=np.int64).sum())


@dataclass(frozen=True)
class Configuration:
    graph: Graph
    opinions: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "opinions", make_opinions(self.opinions, self.graph.n))


@dataclass(frozen=True)
class VoteTally:
    yes_count: int
    votes: np.ndarray
    accepted: bool


def neighborhood_sums(graph: Graph, f) -> np.ndarray:
    return graph.closed_matrix @ np.asarray(f, dtype=np.int32)


def neighborhood_sum(c: Configuration, v: int) -> int:
    if not 0 <= v < c.graph.n:
        raise IndexError(f"vertex {v} out of range for n={c.graph.n}")
    f = c.opinions
    return int(f[v]) + sum(int(f[w]) for w in c.graph.neighbors(v))


def tally_votes(c: Configuration) -> VoteTally:
    votes = neighborhood_sums(c.graph, c.opinions) > 0
    votes.flags.writeable = False
    yes = int(votes.sum())
    return VoteTally(yes, votes, 2 * yes > c.graph.n)


def is_majoritarian(graph: Graph, f) -> bool:
    """True when strictly more than half the vertices vote yes under ``f``."""
    yes = int((neighborhood_sums(graph, f) > 0).sum())
    return 2 * yes > graph.n


# -- structure ---------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    return nx.is_connected(g.to_networkx())


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("graph is disconnected")


def cyclomatic_number(g: Graph) -> int:
    _require_connected(g)
    return g.m - g.n + 1


def spanning_tree(g: Graph, strategy: str = "bfs", root: int = 0) -> Graph:
    """Spanning tree of a connected graph, neighbours visited in ascending order."""
    _require_connected(g)
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} out of range")
    nxg = g.to_networkx()
    if strategy == "bfs":
        tree_edges = nx.bfs_edges(nxg, root, sort_neighbors=sorted)
    elif strategy == "dfs":
        tree_edges = nx.dfs_edges(nxg, root, sort_neighbors=sorted)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return Graph.from_edges(g.n, tree_edges)
