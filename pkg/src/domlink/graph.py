"""Bitset-backed simple graphs on at most 32 vertices.

Vertices are the integers 0..n-1.  Adjacency is a tuple of n integer
rows; bit u of row v is set iff {u, v} is an edge.  Vertex sets are
plain int bitmasks over the same indices everywhere in this package.

Graphs are immutable values: every "mutator" returns a new Graph, so
values can be shared across threads and memoised freely.  The edge-bit
order used by ``from_mask``/``edge_mask`` is column-major over the upper
triangle, i.e. (0,1), (0,2), (1,2), (0,3), ... -- the same order the
graph6 format uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 32


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_list(mask: int) -> list[int]:
    """Sorted list of the vertices in a bitmask."""
    return list(bits(mask))


def pair_index(u: int, v: int) -> int:
    """Position of the pair {u, v} (u != v) in column-major order."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_table(n: int) -> list[tuple[int, int]]:
    """All pairs (u, v), u < v, in column-major order."""
    return [(u, v) for v in range(n) for u in range(v)]


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != n:
            raise ValueError("adjacency row count differs from n")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits >= n set")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            rv = self.adj[v]
            for u in bits(rv):
                if u >= v:
                    break
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at {{{u},{v}}}")

    # -- constructors ------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Graph from a column-major upper-triangle edge bitmask."""
        rows = [0] * n
        i = 0
        for v in range(n):
            for u in range(v):
                if mask >> i & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                i += 1
        if mask >> i:
            raise ValueError("edge mask has bits beyond the last pair")
        return cls(n, tuple(rows))

    # -- basic queries -----------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def edge_mask(self) -> int:
        mask = 0
        i = 0
        for v in range(self.n):
            row = self.adj[v]
            for u in range(v):
                if row >> u & 1:
                    mask |= 1 << i
                i += 1
        return mask

    def neighbors(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs ----------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple((~row & full) & ~(1 << v) for v, row in enumerate(self.adj)))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot add a self-loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge {{{u},{v}}} already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge {{{u},{v}}} not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v; vertices above v shift down by one."""
        self._check_vertex(v)
        if self.n == 1:
            raise ValueError("cannot delete the last vertex")
        low = (1 << v) - 1
        rows = []
        for w in range(self.n):
            if w == v:
                continue
            r = self.adj[w]
            rows.append((r & low) | ((r >> (v + 1)) << v))
        return Graph(self.n - 1, tuple(rows))

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced by the vertex bitmask, order preserved."""
        if mask & ~self.full_mask:
            raise ValueError("vertex mask has bits >= n")
        keep = vertex_list(mask)
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in bits(self.adj[v] & mask):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph(len(keep), tuple(rows))

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract the edge {u, v}.

        The merged vertex sits at min(u, v); max(u, v) is removed and
        vertices above it shift down by one, so contraction sequences
        are deterministic and reproducible.
        """
        if not self.has_edge(u, v):
            raise ValueError(f"cannot contract non-edge {{{u},{v}}}")
        lo, hi = (u, v) if u < v else (v, u)
        merged = (self.adj[lo] | self.adj[hi]) & ~(1 << lo) & ~(1 << hi)
        low = (1 << hi) - 1
        rows = []
        for w in range(self.n):
            if w == hi:
                continue
            if w == lo:
                r = merged
            else:
                r = self.adj[w]
                if r >> hi & 1:
                    r |= 1 << lo
                r &= ~(1 << hi)
            rows.append((r & low) | ((r >> (hi + 1)) << hi))
        return Graph(self.n - 1, tuple(rows))

    def relabel(self, ordering: tuple[int, ...]) -> "Graph":
        """Graph whose vertex j is the old vertex ordering[j]."""
        if sorted(ordering) != list(range(self.n)):
            raise ValueError("ordering is not a permutation of the vertices")
        pos = [0] * self.n
        for j, v in enumerate(ordering):
            pos[v] = j
        rows = [0] * self.n
        for j, v in enumerate(ordering):
            r = 0
            for w in bits(self.adj[v]):
                r |= 1 << pos[w]
            rows[j] = r
        return Graph(self.n, tuple(rows))

    # -- connectivity ------------------------------------------------

    def reach(self, start_mask: int, within: int | None = None) -> int:
        """Vertices reachable from start_mask inside the ``within`` mask."""
        allowed = self.full_mask if within is None else within
        reached = start_mask & allowed
        frontier = reached
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= allowed & ~reached
            reached |= nxt
            frontier = nxt
        return reached

    def is_connected(self) -> bool:
        return self.reach(1) == self.full_mask

    def connected_within(self, mask: int) -> bool:
        """True iff the subgraph induced by mask is connected (and non-empty)."""
        if mask == 0:
            return False
        start = mask & -mask
        return self.reach(start, mask) == mask

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- module-level operations ------------------------------------------


def degree_stats(g: Graph) -> tuple[tuple[int, ...], int, int, int]:
    """(sorted degree sequence, max degree, min degree, edge count)."""
    seq = tuple(sorted(g.degrees()))
    return seq, seq[-1], seq[0], sum(seq) // 2


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """Bitmask of vertices adjacent to both u and v (u, v excluded)."""
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    g._check_vertex(u)
    g._check_vertex(v)
    return g.adj[u] & g.adj[v] & ~(1 << u) & ~(1 << v)


def delta_star(g: Graph) -> int:
    """min(min degree of g, min degree of its complement)."""
    seq = g.degrees()
    return min(min(seq), g.n - 1 - max(seq))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError("join exceeds the vertex cap")
    gmask = (1 << g.n) - 1
    rows = [row | (((1 << h.n) - 1) << g.n) for row in g.adj]
    rows += [(row << g.n) | gmask for row in h.adj]
    return Graph(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError("union exceeds the vertex cap")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def is_path(g: Graph) -> bool:
    """True iff g is a path (any order; a single vertex counts)."""
    if g.n == 1:
        return True
    seq = sorted(g.degrees())
    return g.is_connected() and seq[:2] == [1, 1] and all(d == 2 for d in seq[2:])


def is_cycle(g: Graph) -> bool:
    if g.n < 3:
        return False
    return g.is_connected() and all(d == 2 for d in g.degrees())


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All unordered vertex pairs, lexicographic."""
    return combinations(range(n), 2)
