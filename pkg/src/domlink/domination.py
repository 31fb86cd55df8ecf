"""Exact domination and connected-domination solvers.

Candidate sets are scanned in ascending cardinality and, within one
cardinality, in lexicographic order, so the first qualifying set found
is the lexicographically smallest witness of minimum size.  The graphs
this package cares about have order <= 17 and tiny connected domination
numbers, so the binomial scans stay cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, mask_of

INFINITE = math.inf


@dataclass(frozen=True, slots=True)
class DominationResult:
    """Minimum cardinality plus a witness bitmask (None when infinite)."""

    value: int | float
    witness: int | None

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE


def gamma(g: Graph) -> DominationResult:
    """Domination number: min |S| with N[S] covering every vertex."""
    n = g.n
    full = g.full_mask
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover == full:
                return DominationResult(k, mask_of(combo))
    raise AssertionError("unreachable: V itself dominates")


def gamma_c(g: Graph) -> DominationResult:
    """Connected domination number; infinite iff g is disconnected (n >= 2)."""
    n = g.n
    if n == 1:
        return DominationResult(1, 1)
    if not g.is_connected():
        return DominationResult(INFINITE, None)
    full = g.full_mask
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover != full:
                continue
            smask = mask_of(combo)
            if g.connected_within(smask):
                return DominationResult(k, smask)
    raise AssertionError("unreachable: a connected graph is dominated by V")


def gamma_c_value(g: Graph) -> int | float:
    return gamma_c(g).value


def three_set_witness(g: Graph, s_mask: int) -> int | None:
    """Lemma-style witness for a connected triple.

    If the induced subgraph on the 3-set is connected and some outside
    vertex has no neighbour in it, return the lowest such vertex,
    otherwise None.
    """
    if s_mask.bit_count() != 3:
        raise ValueError("three_set_witness needs a vertex set of size exactly 3")
    if s_mask & ~g.full_mask:
        raise ValueError("vertex set has bits >= n")
    if not g.connected_within(s_mask):
        return None
    dominated = s_mask
    m = s_mask
    while m:
        b = m & -m
        dominated |= g.adj[b.bit_length() - 1]
        m ^= b
    missing = ~dominated & g.full_mask
    if missing == 0:
        return None
    return (missing & -missing).bit_length() - 1
