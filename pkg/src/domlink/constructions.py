"""Named graphs and structured builders.

Covers the quadratic-residue (Paley) graphs, strong-regularity checking,
twin vertex additions, the usual parametric families, and constrained
enumeration of all order-6 graphs with a prescribed size / degree floor
(deduplicated up to isomorphism).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, common_neighbors, join
from .iso import canonical_form

MAX_PALEY_Q = 29


@dataclass(frozen=True, slots=True)
class SrgParams:
    """Strongly regular parameters (n, k, lam, mu)."""

    n: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        """Standard counting identity k(k - lam - 1) = (n - k - 1) mu."""
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q**0.5) + 1))


def paley(q: int) -> Graph:
    """Quadratic-residue graph on Z_q: i ~ j iff i - j is a nonzero square.

    Needs q prime with q = 1 (mod 4) so that -1 is a square and the
    relation is symmetric.  (q - 1)/2-regular and self-complementary.
    """
    if q > MAX_PALEY_Q:
        raise ValueError(f"paley supports q <= {MAX_PALEY_Q}")
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q % 4 != 1:
        raise ValueError(f"{q} != 1 (mod 4); the residue relation would not be symmetric")
    residues = {i * i % q for i in range(1, q)}
    return Graph.from_edges(q, [(i, j) for i in range(q) for j in range(i + 1, q)
                                if (i - j) % q in residues])


def srg_check(g: Graph) -> SrgParams | None:
    """Return (n, k, lam, mu) iff g is strongly regular, else None."""
    degs = g.degrees()
    k = degs[0]
    if any(d != k for d in degs):
        return None
    lam: int | None = None
    mu: int | None = None
    for u, v in combinations(range(g.n), 2):
        c = common_neighbors(g, u, v).bit_count()
        if g.has_edge(u, v):
            if lam is None:
                lam = c
            elif lam != c:
                return None
        else:
            if mu is None:
                mu = c
            elif mu != c:
                return None
    return SrgParams(g.n, k, 0 if lam is None else lam, 0 if mu is None else mu)


def twin_add(g: Graph, u: int, closed: bool) -> Graph:
    """Add a twin of u: N(new) = N(u), plus the edge to u when closed."""
    g._check_vertex(u)
    n = g.n
    nb = g.adj[u] | ((1 << u) if closed else 0)
    rows = [row | (1 << n) if nb >> v & 1 else row for v, row in enumerate(g.adj)]
    rows.append(nb)
    return Graph(n + 1, tuple(rows))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: tuple[int, ...]) -> Graph:
    n = sum(parts)
    rows = []
    offset = 0
    full = (1 << n) - 1
    for size in parts:
        block = ((1 << size) - 1) << offset
        rows.extend([full & ~block] * size)
        offset += size
    return Graph(n, tuple(rows))


def petersen() -> Graph:
    """Outer 5-cycle, inner pentagram, spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


def triangular_prism() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])


_NAME_RE = re.compile(r"^(K|P|C)(\d+(?:,\d+)*)$", re.IGNORECASE)


def named(name: str) -> Graph:
    """Build a graph from a conventional name.

    Accepts K<n>, P<n>, C<n>, K<a>,<b>[,<c>...], 'petersen', 'prism'.
    """
    token = name.strip()
    low = token.lower()
    if low == "petersen":
        return petersen()
    if low in ("prism", "triangular-prism"):
        return triangular_prism()
    m = _NAME_RE.match(token.replace(" ", ""))
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    kind, nums = m.group(1).upper(), [int(x) for x in m.group(2).split(",")]
    if kind == "K":
        if len(nums) == 1:
            return Graph.complete(nums[0])
        return complete_multipartite(tuple(nums))
    if len(nums) != 1:
        raise ValueError(f"unknown graph name {name!r}")
    if kind == "P":
        return path(nums[0])
    return cycle(nums[0])


def family(order: int, size: int | None = None, min_degree: int | None = None,
           regular: int | None = None) -> list[Graph]:
    """All graphs of the given order meeting the constraints, up to iso.

    Enumerates every labelled graph and deduplicates by canonical form,
    so the counts pin correctness; intended for small orders (<= 7).
    Results are sorted by canonical form.
    """
    if order > 7:
        raise ValueError("family enumeration supports order <= 7")
    npairs = order * (order - 1) // 2
    found: dict[bytes, Graph] = {}
    for mask in range(1 << npairs):
        if size is not None and mask.bit_count() != size:
            continue
        g = Graph.from_mask(order, mask)
        degs = g.degrees()
        if min_degree is not None and min(degs) < min_degree:
            continue
        if regular is not None and any(d != regular for d in degs):
            continue
        cf = canonical_form(g)
        if cf.blob not in found:
            found[cf.blob] = g
    return [found[b] for b in sorted(found)]


def k331() -> Graph:
    return complete_multipartite((3, 3, 1))


def cone(g: Graph) -> Graph:
    """Join with a single new vertex adjacent to everything."""
    return join(g, Graph.empty(1))
