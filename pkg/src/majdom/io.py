"""Plain-text graph and opinion files.

Graph file::

    # comment
    n m
    u v        (m lines, 0-based endpoints)

Opinion file: ``n`` lines ``v x`` with ``x`` in {-1, 1}, or one line of ``n``
signed integers.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, make_opinions


class FormatError(ValueError):
    pass


def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def _ints(tokens, where) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"{where}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Graph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 2:
        raise FormatError("header must be 'n m'")
    n, m = _ints(rows[0], "header")
    if n < 1 or m < 0:
        raise FormatError(f"bad header values n={n}, m={m}")
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for i, row in enumerate(body, start=1):
        if len(row) != 2:
            raise FormatError(f"edge line {i}: expected 'u v'")
        edges.append(tuple(_ints(row, f"edge line {i}")))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def parse_opinions(text: str, n: int | None = None) -> np.ndarray:
    rows = _data_lines(text)
    if not rows:
        raise FormatError("empty opinion file")
    # a lone "v x" row is only the pair form when n == 1
    if len(rows) == 1 and not (n == 1 and len(rows[0]) == 2):
        return _checked(_ints(rows[0], "opinions"), n)
    pairs = [_ints(r, f"opinion line {i}") for i, r in enumerate(rows, start=1)]
    if any(len(p) != 2 for p in pairs):
        raise FormatError("opinion lines must be 'v x'")
    size = len(pairs) if n is None else n
    values = [0] * size
    seen = set()
    for v, x in pairs:
        if not 0 <= v < size:
            raise FormatError(f"opinion for vertex {v} out of range")
        if v in seen:
            raise FormatError(f"vertex {v} listed twice")
        seen.add(v)
        values[v] = x
    if len(seen) != size:
        raise FormatError(f"expected opinions for {size} vertices, got {len(seen)}")
    return _checked(values, n)


def _checked(values, n):
    try:
        return make_opinions(values, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_opinions(f) -> str:
    return " ".join(str(int(x)) for x in f) + "\n"
