"""Single-edge edits: deviation bounds on the domination number and repair.

Bounds are intervals on ``gamma(G) - gamma(H)`` where ``H`` is ``G`` with one
edge removed.  The repair keeps an opinion function strictly majoritarian
across an edit by flipping ``-1`` opinions to ``+1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .graph import Configuration, Graph, neighborhood_sums


class EditKind(str, enum.Enum):
    ADD = "add"
    REMOVE = "remove"


@dataclass(frozen=True, order=True)
class EdgeEdit:
    kind: EditKind
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("edit endpoints must differ")
        object.__setattr__(self, "kind", EditKind(self.kind))
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @classmethod
    def add(cls, u, v):
        return cls(EditKind.ADD, u, v)

    @classmethod
    def remove(cls, u, v):
        return cls(EditKind.REMOVE, u, v)

    def apply(self, g: Graph) -> Graph:
        if self.kind is EditKind.ADD:
            return g.with_edge(self.u, self.v)
        return g.without_edge(self.u, self.v)


class PairClass(str, enum.Enum):
    PLUS_PLUS = "plus_plus"
    MINUS_MINUS = "minus_minus"
    MIXED = "mixed"


def classify_pair(f, u: int, v: int) -> PairClass:
    a, b = int(f[u]), int(f[v])
    if a == b == 1:
        return PairClass.PLUS_PLUS
    if a == b == -1:
        return PairClass.MINUS_MINUS
    return PairClass.MIXED


@dataclass(frozen=True)
class DeltaBound:
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    def __add__(self, other: "DeltaBound") -> "DeltaBound":
        return DeltaBound(self.lower + other.lower, self.upper + other.upper)

    def __contains__(self, x) -> bool:
        return self.lower <= x <= self.upper

    def reversed(self) -> "DeltaBound":
        """The same inequality read for ``gamma(H) - gamma(G)``."""
        return DeltaBound(-self.upper, -self.lower)


# keyed on opinions taken from an optimal function of the larger graph G
_LEMMA2 = {
    PairClass.PLUS_PLUS: DeltaBound(-4, 2),
    PairClass.MINUS_MINUS: DeltaBound(0, 2),
    PairClass.MIXED: DeltaBound(-2, 2),
}
# keyed on opinions taken from an optimal function of the smaller graph H
_LEMMA3 = {
    PairClass.PLUS_PLUS: DeltaBound(-4, 0),
    PairClass.MINUS_MINUS: DeltaBound(-4, 2),
    PairClass.MIXED: DeltaBound(-4, 2),
}


def lemma1_bound(kind: EditKind | str = EditKind.REMOVE) -> DeltaBound:
    """Opinion-free bound on ``gamma(before) - gamma(after)`` for one edit."""
    base = DeltaBound(-4, 2)
    return base if EditKind(kind) is EditKind.REMOVE else base.reversed()


def lemma2_bound(cls: PairClass | str) -> DeltaBound:
    return _LEMMA2[PairClass(cls)]


def lemma3_bound(cls: PairClass | str) -> DeltaBound:
    return _LEMMA3[PairClass(cls)]


# -- repair -------------------------------------------------------------------

@dataclass(frozen=True)
class Flip:
    vertex: int
    edit: EdgeEdit


@dataclass
class RepairLog:
    flips: list[Flip] = field(default_factory=list)

    def __len__(self):
        return len(self.flips)

    def extend(self, other: "RepairLog") -> None:
        self.flips.extend(other.flips)

    @property
    def vertices(self) -> list[int]:
        return [fl.vertex for fl in self.flips]


def _repair_candidate(g: Graph, f: np.ndarray, e: EdgeEdit, lost: list[int]) -> int:
    for w in (e.u, e.v):
        if f[w] == -1:
            return w
    near = set()
    for x in lost:
        near.add(x)
        near.update(g.neighbors(x))
    near = sorted(w for w in near if f[w] == -1)
    if near:
        return near[0]
    rest = np.flatnonzero(f == -1)
    if rest.size == 0:
        raise RuntimeError("no -1 opinion left to flip")  # unreachable: all +1 is feasible
    return int(rest[0])


def apply_edit_with_repair(c: Configuration, e: EdgeEdit) -> tuple[Configuration, RepairLog]:
    """Apply ``e`` to ``c.graph`` and flip opinions until strict majority holds.

    Candidates, lowest index first within each tier: a ``-1`` endpoint of the
    edited edge; a ``-1`` vertex in the closed neighbourhood of an endpoint
    that lost its yes vote; any ``-1`` vertex.
    """
    g = e.apply(c.graph)
    f = np.array(c.opinions, dtype=np.int8)
    before = neighborhood_sums(c.graph, f) > 0
    log = RepairLog()
    n = g.n
    while True:
        votes = neighborhood_sums(g, f) > 0
        if 2 * int(votes.sum()) > n:
            break
        lost = [w for w in (e.u, e.v) if before[w] and not votes[w]]
        w = _repair_candidate(g, f, e, lost)
        f[w] = 1
        log.flips.append(Flip(w, e))
    return Configuration(g, f), log


def apply_script_with_repair(c: Configuration, edits) -> tuple[Configuration, RepairLog]:
    log = RepairLog()
    for e in edits:
        c, step = apply_edit_with_repair(c, e)
        log.extend(step)
    return c, log
