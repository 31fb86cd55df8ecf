"""k-compliance, necessary-condition filters, f(n), and complement bounds.

A graph is k-compliant when it or its complement has a minor with a
vertex of degree at least n - k; equivalently (the compliance theorem)
when min(gamma_c(G), gamma_c(complement)) <= k.  Both routes are
implemented: `is_k_compliant` goes through the connected-domination
solver, `compliance_by_minor` independently searches small connected
sets whose contraction produces the high-degree vertex, and the two
must always agree.

`compute_f` evaluates f(n) = n - max over all order-n graphs of the
least compliance threshold, by exhaustive scan over labelled graphs
with complement-pair deduplication.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .domination import INFINITE, gamma_c
from .graph import Graph, common_neighbors, delta_star, mask_of, pair_table
from .topology import has_minor

MAX_MINOR_ROUTE_K = 5
MAX_F_ORDER = 8


class TheoremFalsificationError(RuntimeError):
    """An invariant the underlying theorems guarantee failed to hold."""


@dataclass(frozen=True, slots=True)
class ComplianceReport:
    """Outcome of a k-compliance test.

    min_k is the least threshold at which the graph is compliant; the
    minor route leaves it None when non-compliant (it only searches up
    to the requested k).  The witness is a vertex bitmask: a connected
    dominating set for the domination route, the contracted connected
    set for the minor route.
    """

    k: int
    compliant: bool
    min_k: int | None
    side: str | None
    witness: int | None
    route: str


def min_k_of(g: Graph) -> int:
    """Least k for which g is k-compliant: min of the two gamma_c values."""
    a = gamma_c(g).value
    b = gamma_c(g.complement()).value
    m = min(a, b)
    if m == INFINITE:
        raise TheoremFalsificationError(
            "a graph and its complement cannot both be disconnected")
    return int(m)


def is_k_compliant(g: Graph, k: int) -> ComplianceReport:
    """Compliance via connected domination of the graph and its complement."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be within 1..{g.n}, got {k}")
    a = gamma_c(g)
    b = gamma_c(g.complement())
    if a.value <= b.value:
        side, res = "graph", a
    else:
        side, res = "complement", b
    if res.value == INFINITE:
        raise TheoremFalsificationError(
            "a graph and its complement cannot both be disconnected")
    min_k = int(res.value)
    return ComplianceReport(k=k, compliant=min_k <= k, min_k=min_k,
                            side=side, witness=res.witness, route="domination")


def compliance_by_minor(g: Graph, k: int) -> ComplianceReport:
    """Independent compliance oracle through explicit contractions.

    Contracting a connected set S to one vertex yields a minor whose
    merged vertex has degree |N(S) \\ S|; the graph is k-compliant iff
    some side has a connected S with |S| <= k and |N(S) \\ S| >= n - k.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be within 1..{g.n}, got {k}")
    if k > MAX_MINOR_ROUTE_K:
        raise ValueError(f"minor-route compliance supports k <= {MAX_MINOR_ROUTE_K}")
    n = g.n
    sides = (("graph", g), ("complement", g.complement()))
    for kk in range(1, k + 1):
        need = n - kk
        for size in range(1, kk + 1):
            for side, h in sides:
                for combo in combinations(range(n), size):
                    smask = mask_of(combo)
                    if size > 1 and not h.connected_within(smask):
                        continue
                    nb = 0
                    for v in combo:
                        nb |= h.adj[v]
                    if (nb & ~smask).bit_count() >= need:
                        return ComplianceReport(k=k, compliant=True, min_k=kk,
                                                side=side, witness=smask,
                                                route="minor")
    return ComplianceReport(k=k, compliant=False, min_k=None, side=None,
                            witness=None, route="minor")


# -- necessary-condition filters ---------------------------------------


@dataclass(frozen=True, slots=True)
class FilterVerdict:
    """Pass/fail of one necessary condition, with re-checkable evidence."""

    lemma: str
    passed: bool
    evidence: dict | None = None


def filter_basic(g: Graph) -> FilterVerdict:
    """Common-neighbour floor every 3-non-compliant graph satisfies.

    Adjacent pairs need at least 2 common neighbours, non-adjacent pairs
    at least 3; a graph violating this has a connected dominating set of
    size <= 3 on one side.
    """
    for u, v in combinations(range(g.n), 2):
        c = common_neighbors(g, u, v).bit_count()
        adjacent = g.has_edge(u, v)
        need = 2 if adjacent else 3
        if c < need:
            return FilterVerdict("common-neighbors-basic", False,
                                 {"pair": [u, v], "adjacent": adjacent,
                                  "common": c, "required": need})
    return FilterVerdict("common-neighbors-basic", True)


def _neighbor_degree_sum(g: Graph, v: int) -> int:
    total = 0
    m = g.adj[v]
    while m:
        b = m & -m
        total += g.adj[b.bit_length() - 1].bit_count()
        m ^= b
    return total


def filter_order14(g: Graph) -> FilterVerdict:
    """Necessary conditions for 3-non-compliance at order 14.

    Degree window {6,7} (minimum degree 6 on both sides), edge count in
    45..49 jointly with the complement's window (so effectively 45..46),
    neighbour-degree sums at degree-6 vertices at least 39, common
    neighbour floors 4/3 for degree-7 pairs, and at 45 edges the
    degree-7 neighbour-degree sum floor 44.
    """
    if g.n != 14:
        raise ValueError("filter_order14 needs a graph of order 14")
    degs = g.degrees()
    for v, d in enumerate(degs):
        if not 6 <= d <= 7:
            return FilterVerdict("degree-window-14", False,
                                 {"vertex": v, "degree": d, "window": [6, 7]})
    m = g.edge_count
    if not (45 <= m <= 49 and 45 <= 91 - m <= 49):
        return FilterVerdict("edge-window-14", False,
                             {"edges": m, "window": [45, 46]})
    for v in range(14):
        if degs[v] == 6:
            s = _neighbor_degree_sum(g, v)
            if s < 39:
                return FilterVerdict("deg6-neighbor-sum-39", False,
                                     {"vertex": v, "sum": s, "required": 39})
    for u, v in combinations(range(14), 2):
        if degs[u] == 7 and degs[v] == 7:
            c = common_neighbors(g, u, v).bit_count()
            if g.has_edge(u, v):
                if c < 3:
                    return FilterVerdict("deg7-pairs-adjacent-3", False,
                                         {"pair": [u, v], "common": c, "required": 3})
            elif c < 4:
                return FilterVerdict("deg7-pairs-nonadjacent-4", False,
                                     {"pair": [u, v], "common": c, "required": 4})
    if m == 45:
        for v in range(14):
            if degs[v] == 7:
                s = _neighbor_degree_sum(g, v)
                if s < 44:
                    return FilterVerdict("deg7-neighbor-sum-45edges", False,
                                         {"vertex": v, "sum": s, "required": 44})
    return FilterVerdict("order14", True)


def filter_order15(g: Graph) -> FilterVerdict:
    """Necessary conditions for 3-non-compliance at order 15.

    Degree window {6,7,8}, edge count outside the excluded 45..48 band
    on both sides (leaving 49..56), and neighbour-degree sums at
    degree-6 vertices at least 42.
    """
    if g.n != 15:
        raise ValueError("filter_order15 needs a graph of order 15")
    degs = g.degrees()
    for v, d in enumerate(degs):
        if not 6 <= d <= 8:
            return FilterVerdict("degree-window-15", False,
                                 {"vertex": v, "degree": d, "window": [6, 8]})
    m = g.edge_count
    if not (49 <= m <= 56):
        return FilterVerdict("edge-window-15", False,
                             {"edges": m, "window": [49, 56]})
    for v in range(15):
        if degs[v] == 6:
            s = _neighbor_degree_sum(g, v)
            if s < 42:
                return FilterVerdict("deg6-neighbor-sum-42", False,
                                     {"vertex": v, "sum": s, "required": 42})
    return FilterVerdict("order15", True)


FILTERS = {
    "basic": filter_basic,
    "order14": filter_order14,
    "order15": filter_order15,
}

FILTER_ORDERS = {"basic": None, "order14": 14, "order15": 15}


# -- the order-15 trichotomy -------------------------------------------


class ThreeWay(Enum):
    COMPLIANT3 = "3-compliant"
    K7_IN_GRAPH = "k7-minor-in-graph"
    K7_IN_COMPLEMENT = "k7-minor-in-complement"


def verify_one_of_three(g: Graph) -> ThreeWay:
    """Every order-15 graph is 3-compliant or has a K7 minor on a side.

    Alternatives are checked in that listed order, so overlaps resolve
    to the first match.  If none holds the trichotomy itself is false
    and a TheoremFalsificationError is raised (must never happen).
    """
    if g.n != 15:
        raise ValueError("verify_one_of_three needs a graph of order 15")
    if is_k_compliant(g, 3).compliant:
        return ThreeWay.COMPLIANT3
    k7 = Graph.complete(7)
    if has_minor(g, k7) is not None:
        return ThreeWay.K7_IN_GRAPH
    if has_minor(g.complement(), k7) is not None:
        return ThreeWay.K7_IN_COMPLEMENT
    raise TheoremFalsificationError(
        "order-15 graph neither 3-compliant nor with a K7 minor on either side")


# -- f(n) ---------------------------------------------------------------


def _fast_min_k_le3(rows: list[int], n: int, full: int) -> int:
    """Smallest k in {1,2,3} with min(gc, gc-of-complement) <= k, else 4.

    Works on raw adjacency rows.  Closed complement rows are ~rows[i]
    masked to n bits, which collapses the complement-side checks to
    plain intersection tests.
    """
    for i in range(n):
        r = rows[i]
        if r | (1 << i) == full or r == 0:
            return 1
    for u in range(n - 1):
        ru = rows[u]
        cu = ru | (1 << u)
        for v in range(u + 1, n):
            if ru >> v & 1:
                if cu | rows[v] | (1 << v) == full:
                    return 2
            elif ru & rows[v] == 0:
                return 2
    for u in range(n - 2):
        ru = rows[u]
        bu = 1 << u
        for v in range(u + 1, n - 1):
            rv = rows[v]
            euv = ru >> v & 1
            uv_or = ru | rv | bu | (1 << v)
            uv_and = ru & rv
            for w in range(v + 1, n):
                e = euv + (ru >> w & 1) + (rv >> w & 1)
                if e >= 2:
                    if uv_or | rows[w] | (1 << w) == full:
                        return 3
                if e <= 1:
                    if uv_and & rows[w] == 0:
                        return 3
    return 4


def _scan_masks(n: int, start: int, stop: int) -> tuple[int, int]:
    """Scan labelled-graph edge masks in [start, stop); return (max min_k,
    first mask attaining it).  Masks above their complement are skipped."""
    pairs = pair_table(n)
    pu = [p[0] for p in pairs]
    pv = [p[1] for p in pairs]
    totmask = (1 << len(pairs)) - 1
    full = (1 << n) - 1
    best = 0
    best_mask = 0
    for mask in range(start, stop):
        if mask > totmask ^ mask:
            continue
        rows = [0] * n
        m = mask
        while m:
            b = m & -m
            i = b.bit_length() - 1
            m ^= b
            rows[pu[i]] |= 1 << pv[i]
            rows[pv[i]] |= 1 << pu[i]
        mk = _fast_min_k_le3(rows, n, full)
        if mk <= best:
            continue
        if mk == 4:
            mk = min_k_of(Graph(n, tuple(rows)))
            if mk <= best:
                continue
        best = mk
        best_mask = mask
    return best, best_mask


def compute_f(n: int, long_running: bool = False, workers: int = 1) -> tuple[int, Graph]:
    """f(n) = n - max over all order-n graphs of the least compliance k.

    Exhausts all labelled graphs, skipping each mask strictly above its
    complement mask (the least compliance threshold is complement
    invariant).  Returns the value and the first extremal graph in mask
    order; the result is independent of the worker partitioning.
    """
    if not 1 <= n <= MAX_F_ORDER:
        raise ValueError(f"compute_f supports n <= {MAX_F_ORDER}")
    if n == MAX_F_ORDER and not long_running:
        raise ValueError("compute_f(8) scans ~134M graphs; pass long_running=True")
    total = 1 << (n * (n - 1) // 2)
    if workers <= 1 or total < (1 << 16):
        best, best_mask = _scan_masks(n, 0, total)
    else:
        chunk = (total + workers * 8 - 1) // (workers * 8)
        spans = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        best, best_mask = 0, 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for b, bm in pool.map(_scan_masks, *zip(*spans)):
                if b > best or (b == best and bm < best_mask):
                    best, best_mask = b, bm
    return n - best, Graph.from_mask(n, best_mask)


# -- complement (Nordhaus-Gaddum style) validators ----------------------


@dataclass(frozen=True, slots=True)
class NordhausSumVerdict:
    """gamma_c(G) + gamma_c(co-G) <= delta*(G) + 2 when both sides are
    connected with gamma_c >= 4; not applicable otherwise."""

    applicable: bool
    holds: bool | None
    gc: int | float
    gc_complement: int | float
    dstar: int
    reason: str | None = None


def check_nordhaus_sum(g: Graph) -> NordhausSumVerdict:
    a = gamma_c(g).value
    b = gamma_c(g.complement()).value
    ds = delta_star(g)
    if a == INFINITE or b == INFINITE:
        return NordhausSumVerdict(False, None, a, b, ds, "a side is disconnected")
    if a < 4 or b < 4:
        return NordhausSumVerdict(False, None, a, b, ds, "a side has gamma_c < 4")
    return NordhausSumVerdict(True, a + b <= ds + 2, a, b, ds)


@dataclass(frozen=True, slots=True)
class NordhausProductVerdict:
    """gamma_c(G) * gamma_c(co-G) <= 2n - 4 for n >= 7 with both sides
    connected; equality exactly when a side is a path or a cycle."""

    applicable: bool
    holds: bool | None
    equality: bool | None
    expected_equality: bool | None
    gc: int | float
    gc_complement: int | float
    bound: int
    reason: str | None = None


def check_nordhaus_product(g: Graph) -> NordhausProductVerdict:
    from .graph import is_cycle, is_path

    bound = 2 * g.n - 4
    a = gamma_c(g).value
    b = gamma_c(g.complement()).value
    if g.n < 7:
        return NordhausProductVerdict(False, None, None, None, a, b, bound,
                                      "needs order >= 7")
    if a == INFINITE or b == INFINITE:
        return NordhausProductVerdict(False, None, None, None, a, b, bound,
                                      "a side is disconnected")
    comp = g.complement()
    expected = is_path(g) or is_cycle(g) or is_path(comp) or is_cycle(comp)
    prod = a * b
    return NordhausProductVerdict(True, prod <= bound, prod == bound, expected, a, b, bound)


def bound_fn_sqrt(n: int) -> int:
    """Lower bound n - ceil(sqrt(2n - 4)) + 1 for f(n), valid for n >= 7."""
    if n < 7:
        raise ValueError("the square-root bound needs n >= 7")
    c = math.isqrt(2 * n - 4)
    if c * c < 2 * n - 4:
        c += 1
    return n - c + 1
