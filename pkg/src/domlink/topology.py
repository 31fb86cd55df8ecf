"""Minor containment, the Petersen family, and linking-related tests.

The minor search maps target vertices (in descending degree order) to
disjoint connected branch sets in the host.  Candidate branch sets for
each position are enumerated by rooted connected-set growth that stops
as soon as the adjacency constraints towards earlier branch sets are
met; every constraint-minimal set is generated, which suffices because
any witness can be normalised position by position (surplus vertices
move to the pool and later sets absorb them through connecting paths).
An optional node budget turns the search into a three-valued test:
witness / definitely-absent / UNKNOWN, never a silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, bits
from .iso import canonical_form

MAX_TARGET_VERTICES = 10
MAX_HOST_VERTICES = 20
MAX_SATURATE_VERTICES = 14


class _Unknown:
    __slots__ = ()

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __bool__(self) -> bool:
        raise TypeError("UNKNOWN minor-search outcome has no truth value; "
                        "compare with `is UNKNOWN` / `is not None`")


UNKNOWN = _Unknown()


class BudgetExhausted(Exception):
    pass


@dataclass(frozen=True, slots=True)
class MinorWitness:
    """One branch-set bitmask per target vertex, in target vertex order."""

    branch_sets: tuple[int, ...]


def check_minor_witness(host: Graph, target: Graph, witness: MinorWitness) -> bool:
    """Pure re-check of the MinorWitness invariants."""
    sets = witness.branch_sets
    if len(sets) != target.n:
        return False
    seen = 0
    for s in sets:
        if s == 0 or s & ~host.full_mask or s & seen:
            return False
        seen |= s
        if not host.connected_within(s):
            return False
    hoods = []
    for s in sets:
        nb = 0
        for v in bits(s):
            nb |= host.adj[v]
        hoods.append(nb)
    for i in range(target.n):
        for j in bits(target.adj[i] & ((1 << i) - 1)):
            if not hoods[i] & sets[j]:
                return False
    return True


def has_minor(host: Graph, target: Graph,
              budget: int | None = None) -> MinorWitness | None | _Unknown:
    """Search for target as a minor of host.

    Returns a re-checkable MinorWitness, None when target is provably
    not a minor, or UNKNOWN when the node budget ran out first.
    """
    if target.n > MAX_TARGET_VERTICES:
        raise ValueError(f"minor targets support n <= {MAX_TARGET_VERTICES}")
    if host.n > MAX_HOST_VERTICES:
        raise ValueError(f"minor hosts support n <= {MAX_HOST_VERTICES}")
    if target.n > host.n or target.edge_count > host.edge_count:
        return None

    tn = target.n
    torder = sorted(range(tn), key=lambda v: (-target.adj[v].bit_count(), v))
    tpos = {v: i for i, v in enumerate(torder)}
    # req_idx[t] = positions < t whose target vertex is adjacent to torder[t]
    req_idx = [[tpos[u] for u in bits(target.adj[torder[t]]) if tpos[u] < t]
               for t in range(tn)]

    rows = host.adj
    full = host.full_mask
    assigned = [0] * tn
    nodes_left = [budget if budget is not None else -1]

    def tick() -> None:
        if nodes_left[0] == 0:
            raise BudgetExhausted
        nodes_left[0] -= 1

    def candidates(free: int, reqs: list[int], max_size: int):
        """Connected subsets of free touching every req mask, grown minimally."""

        def satisfied(nbhd: int) -> bool:
            return all(nbhd & r for r in reqs)

        def extend(smask: int, size: int, nbhd: int, allowed: int):
            tick()
            if satisfied(nbhd):
                yield smask
                return
            if size == max_size:
                return
            ext = nbhd & allowed & ~smask
            banned = 0
            for u in bits(ext):
                yield from extend(smask | (1 << u), size + 1, nbhd | rows[u],
                                  allowed & ~banned)
                banned |= 1 << u
        m = free
        while m:
            b = m & -m
            r = b.bit_length() - 1
            m ^= b
            # sets whose minimum vertex is r
            yield from extend(b, 1, rows[r], free & ~(b - 1) & ~b)

    def place(t: int, used: int) -> bool:
        if t == tn:
            return True
        free = full & ~used
        remaining_after = tn - t - 1
        if free.bit_count() <= remaining_after:
            return False
        reqs = [assigned[i] for i in req_idx[t]]
        for s in candidates(free, reqs, free.bit_count() - remaining_after):
            assigned[t] = s
            if place(t + 1, used | s):
                return True
        return False

    try:
        found = place(0, 0)
    except BudgetExhausted:
        return UNKNOWN
    if not found:
        return None
    sets = [0] * tn
    for t, v in enumerate(torder):
        sets[v] = assigned[t]
    witness = MinorWitness(tuple(sets))
    assert check_minor_witness(host, target, witness)
    return witness


# -- delta-Y exchange --------------------------------------------------


def delta_y(g: Graph, triangle_mask: int) -> Graph:
    """Replace a triangle by a new degree-3 vertex joined to its corners."""
    corners = list(bits(triangle_mask))
    if len(corners) != 3:
        raise ValueError("delta_y needs a vertex set of size exactly 3")
    a, b, c = corners
    for u, v in ((a, b), (a, c), (b, c)):
        if not g.has_edge(u, v):
            raise ValueError(f"vertices {corners} do not induce a triangle")
    h = g.delete_edge(a, b).delete_edge(a, c).delete_edge(b, c)
    n = g.n
    rows = [row | (1 << n) if triangle_mask >> v & 1 else row
            for v, row in enumerate(h.adj)]
    rows.append(triangle_mask)
    return Graph(n + 1, tuple(rows))


def y_delta(g: Graph, v: int) -> Graph:
    """Remove a degree-3 vertex and pairwise connect its neighbours.

    Neighbours may already be adjacent; only the missing edges are added
    (the move is the exact inverse of delta_y when they are independent).
    """
    if g.degree(v) != 3:
        raise ValueError(f"y_delta needs a vertex of degree exactly 3, got {g.degree(v)}")
    nbs = [u - (u > v) for u in bits(g.adj[v])]
    h = g.delete_vertex(v)
    for i in range(3):
        for j in range(i + 1, 3):
            if not h.has_edge(nbs[i], nbs[j]):
                h = h.add_edge(nbs[i], nbs[j])
    return h


_PETERSEN_FAMILY: list[Graph] | None = None


def petersen_family() -> list[Graph]:
    """The seven graphs reachable from K_6 by delta-Y / Y-delta moves.

    Y-delta is applied only at degree-3 vertices with pairwise
    non-adjacent neighbours (the clean inverse case), which keeps the
    edge count at 15 and closes the family.  Sorted by (order, form).
    """
    global _PETERSEN_FAMILY
    if _PETERSEN_FAMILY is not None:
        return _PETERSEN_FAMILY
    start = Graph.complete(6)
    seen = {canonical_form(start).blob: start}
    frontier = [start]
    while frontier:
        g = frontier.pop()
        nxt = []
        for tri in _triangles(g):
            nxt.append(delta_y(g, tri))
        for v in range(g.n):
            if g.degree(v) == 3 and _independent(g, g.adj[v]):
                nxt.append(y_delta(g, v))
        for h in nxt:
            cf = canonical_form(h).blob
            if cf not in seen:
                seen[cf] = h
                frontier.append(h)
    _PETERSEN_FAMILY = [seen[b] for b in sorted(seen, key=lambda b: (b[0], b))]
    return _PETERSEN_FAMILY


def _triangles(g: Graph):
    for v in range(g.n):
        for u in bits(g.adj[v] & ((1 << v) - 1)):
            for w in bits(g.adj[v] & g.adj[u] & ((1 << u) - 1)):
                yield (1 << v) | (1 << u) | (1 << w)


def _independent(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if g.adj[v] & mask:
            return False
    return True


# -- intrinsic linking and knotting -----------------------------------


def il_witness(g: Graph) -> tuple[Graph, MinorWitness] | None:
    """The Petersen-family member found as a minor, with its witness."""
    if g.n > MAX_HOST_VERTICES:
        raise ValueError(f"is_il supports n <= {MAX_HOST_VERTICES}")
    if g.edge_count < 15:
        return None  # every family member has 15 edges
    for member in petersen_family():
        if member.n > g.n:
            continue
        w = has_minor(g, member)
        if w is not None:
            return member, w
    return None


def is_il(g: Graph) -> bool:
    """Intrinsically linked iff some Petersen-family graph is a minor."""
    return il_witness(g) is not None


class IkStatus(Enum):
    IK_BY_K7 = "ik-by-k7-minor"
    IK_BY_CONE_OVER_IL = "ik-by-cone-over-il"
    UNKNOWN = "unknown"


def is_ik_sufficient(g: Graph) -> IkStatus:
    """Sufficient-condition intrinsic knotting test (UNKNOWN proves nothing)."""
    if g.n > MAX_HOST_VERTICES:
        raise ValueError(f"is_ik_sufficient supports n <= {MAX_HOST_VERTICES}")
    if g.n >= 7 and has_minor(g, Graph.complete(7)) is not None:
        return IkStatus.IK_BY_K7
    for v in range(g.n):
        if g.adj[v] == g.full_mask ^ (1 << v) and g.n >= 2:
            if is_il(g.delete_vertex(v)):
                return IkStatus.IK_BY_CONE_OVER_IL
    return IkStatus.UNKNOWN


# -- linkless saturation -----------------------------------------------


def saturate_nil(g: Graph) -> Graph:
    """Extend a linklessly-embeddable graph to an edge-maximal one.

    Non-edges are tried in lexicographic order; an addition is kept when
    the result stays linkless.  Rejections stay rejected (the family
    minor relation is monotone under edge addition), so one pass is
    complete and the output is deterministic.
    """
    if g.n > MAX_SATURATE_VERTICES:
        raise ValueError(f"saturate_nil supports n <= {MAX_SATURATE_VERTICES}")
    if is_il(g):
        raise ValueError("saturate_nil needs a linklessly embeddable input")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                cand = g.add_edge(u, v)
                if not is_il(cand):
                    g = cand
    return g


def is_max_nil(g: Graph) -> bool:
    """True iff g is linkless and every single edge addition is linked."""
    if g.n > MAX_SATURATE_VERTICES:
        raise ValueError(f"is_max_nil supports n <= {MAX_SATURATE_VERTICES}")
    if is_il(g):
        raise ValueError("is_max_nil needs a linklessly embeddable input")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and not is_il(g.add_edge(u, v)):
                return False
    return True
