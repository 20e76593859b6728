"""Similarity certificates: intervals guaranteed to contain gamma(G).

Each certificate starts from the exact (or best known) value of a nearby
special-case graph and widens it by the per-edit bounds summed over the
edits that separate the two graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

METHOD_ORDER = ("tree", "complete", "regular")
RECORD_FIELDS = ("method", "base_gamma", "k", "l", "s", "m", "lb", "ub", "width", "degraded")


@dataclass(frozen=True)
class SimilarityCertificate:
    method: str
    base_gamma: int
    k: int
    l: int
    s: int
    m: int
    lb: int
    ub: int
    degraded: bool = False

    def __post_init__(self):
        if self.lb > self.ub:
            raise ValueError(f"certificate interval [{self.lb}, {self.ub}] is empty")

    @property
    def width(self) -> int:
        return self.ub - self.lb

    def contains(self, gamma: int) -> bool:
        return self.lb <= gamma <= self.ub

    def to_record(self) -> str:
        vals = [self.method, self.base_gamma, self.k, self.l, self.s, self.m,
                self.lb, self.ub, self.width, int(self.degraded)]
        return ",".join(str(v) for v in vals)

    @classmethod
    def from_record(cls, line: str) -> "SimilarityCertificate":
        parts = line.strip().split(",")
        if len(parts) != len(RECORD_FIELDS):
            raise ValueError(f"expected {len(RECORD_FIELDS)} fields, got {len(parts)}")
        method, *nums = parts
        base, k, l, s, m, lb, ub, width, degraded = (int(x) for x in nums)
        cert = cls(method, base, k, l, s, m, lb, ub, bool(degraded))
        if cert.width != width:
            raise ValueError("width field disagrees with lb/ub")
        return cert

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in RECORD_FIELDS}


def certificate_tree(base_gamma: int, k: int, s: int, l: int) -> SimilarityCertificate:
    """Spanning tree T plus ``k`` edges; ``s`` of them join two +1 vertices of T's optimum."""
    if s + l != k or min(k, s, l) < 0:
        raise ValueError(f"need s + l == k with nonnegative counts, got k={k}, s={s}, l={l}")
    return SimilarityCertificate("tree", base_gamma, k, l, s, 0,
                                 base_gamma - 4 * k, base_gamma + 2 * l)


def certificate_complete(base_gamma: int, l: int, s: int, m: int) -> SimilarityCertificate:
    """Complete graph minus ``l`` (+1,+1), ``s`` (-1,-1) and ``m`` mixed edges."""
    if min(l, s, m) < 0:
        raise ValueError("edge counts must be nonnegative")
    k = l + s + m
    return SimilarityCertificate("complete", base_gamma, k, l, s, m,
                                 base_gamma - 2 * k, base_gamma + 4 * l + 2 * m)


def certificate_regular(base_gamma: int, l: int, m: int, exact_base: bool = True,
                        n: int | None = None) -> SimilarityCertificate:
    """Input graph G reaches the regular graph H by removing ``l`` and adding ``m`` edges.

    A base value that is only feasible (not optimal) overestimates gamma(H), so
    the lower end is unusable and is clamped to ``-n``.
    """
    if min(l, m) < 0:
        raise ValueError("edge counts must be nonnegative")
    lb = base_gamma - 4 * l - 2 * m
    ub = base_gamma + 2 * l + 4 * m
    if not exact_base:
        if n is None:
            raise ValueError("n is required for a degraded certificate")
        lb = -n
    return SimilarityCertificate("regular", base_gamma, l + m, l, 0, m, lb, ub,
                                 degraded=not exact_base)


# -- selection --------------------------------------------------------------

def _rank_key(outcome):
    return (outcome.certificate.width, outcome.result.gamma, METHOD_ORDER.index(outcome.method))


def rank_outcomes(candidates) -> list:
    candidates = list(candidates)
    if not candidates:
        raise ValueError("no candidate outcomes to select from")
    return sorted(candidates, key=_rank_key)


def select_best(candidates):
    """Outcome with the narrowest certificate; ties by value, then method order."""
    return rank_outcomes(candidates)[0]


@dataclass(frozen=True)
class PosthocReport:
    method: str
    gamma_found: int
    gamma_exact: int
    lb: int
    ub: int
    contained: bool
    abs_error: int

    @property
    def width(self) -> int:
        return self.ub - self.lb


def posthoc_check(outcome, oracle) -> PosthocReport:
    if outcome.result.graph != oracle.graph:
        raise ValueError("outcome and oracle refer to different graphs")
    cert = outcome.certificate
    return PosthocReport(
        method=outcome.method,
        gamma_found=outcome.result.gamma,
        gamma_exact=oracle.gamma,
        lb=cert.lb,
        ub=cert.ub,
        contained=cert.contains(oracle.gamma),
        abs_error=outcome.result.gamma - oracle.gamma,
    )
