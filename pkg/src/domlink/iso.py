"""Exact isomorphism testing via canonical labellings.

The canonical form of a graph is the lexicographically smallest
upper-triangular adjacency bit-string over all vertex orderings, read
in column-major order (the graph6 bit order).  It is computed by a
depth-first search over orderings with three sound prunes:

* minimal-column: with the placed prefix fixed, only candidates whose
  adjacency column to the prefix is minimal can start a minimal
  completion, so all others are discarded;
* best-prefix: a partial string lexicographically above the best
  complete string found so far cannot improve on it;
* twin skipping: candidates with identical rows (ignoring their mutual
  bits) are interchangeable by an automorphism fixing the prefix, so
  only one per twin class is branched on.

No probabilistic shortcuts: forms are equal iff the graphs are
isomorphic.  Exact up to MAX_EXACT_VERTICES; every in-package use is
at order 15 or below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph

MAX_EXACT_VERTICES = 16


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Order-invariant fingerprint: vertex count + packed canonical bits."""

    blob: bytes

    @property
    def hex(self) -> str:
        return self.blob.hex()

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.blob < other.blob


def refined_colors(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Equitable vertex colouring by iterated neighbourhood refinement.

    Colour ids are assigned by sorted signature rank, so the colouring
    is deterministic and isomorphism-invariant as a multiset.
    """
    colors = _rank([row.bit_count() for row in rows])
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = rows[v]
            while m:
                b = m & -m
                nb.append(colors[b.bit_length() - 1])
                m ^= b
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        new = _rank(sigs)
        if new == colors:
            return tuple(colors)
        colors = new


def _rank(values: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(values)))}
    return [order[s] for s in values]


def _is_twin(rows: tuple[int, ...], u: int, v: int) -> bool:
    """True iff swapping u and v is an automorphism (open or closed twins)."""
    strip = ~((1 << u) | (1 << v))
    return rows[u] & strip == rows[v] & strip


@lru_cache(maxsize=1 << 16)
def _canonical(n: int, rows: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (canonical column string, vertex ordering attaining it).

    Column j (1-based) holds the adjacency bits of the vertex placed at
    position j towards positions 0..j-1, MSB = position 0.
    """
    if n > MAX_EXACT_VERTICES:
        raise ValueError(f"exact canonical form supports n <= {MAX_EXACT_VERTICES}, got {n}")
    if n == 1:
        return (), (0,)
    colors = refined_colors(n, rows)
    full = (1 << n) - 1

    best_cols: list[int] | None = None
    best_order: tuple[int, ...] | None = None
    gen = 0  # bumped on every best update; detects updates from descendants

    def dfs(placed: list[int], placed_mask: int, cols: list[int], tight: bool) -> None:
        nonlocal best_cols, best_order, gen
        j = len(placed)
        if j == n:
            if best_cols is None or cols < best_cols:
                best_cols = list(cols)
                best_order = tuple(placed)
                gen += 1
            return
        mygen = gen
        shift = j - 1
        cand: list[tuple[int, int, int]] = []
        m = ~placed_mask & full
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            col = 0
            rv = rows[v]
            for i, u in enumerate(placed):
                if rv >> u & 1:
                    col |= 1 << (shift - i)
            cand.append((colors[v], v, col))
        mincol = min(c for _, _, c in cand)
        reps: list[int] = []
        for _c, v, col in sorted(cand):
            if col != mincol:
                continue
            if any(_is_twin(rows, v, r) for r in reps):
                continue
            reps.append(v)
            # Re-derive tightness: a best update below this node implies the
            # new best shares our path prefix.
            eff_tight = tight or gen != mygen
            if eff_tight and best_cols is not None:
                bc = best_cols[j - 1]
                if mincol > bc:
                    return  # all siblings share mincol
                child_tight = mincol == bc
            else:
                child_tight = False
            cols.append(mincol)
            dfs(placed + [v], placed_mask | (1 << v), cols, child_tight)
            cols.pop()

    reps: list[int] = []
    for v in sorted(range(n), key=lambda v: (colors[v], v)):
        if any(_is_twin(rows, v, r) for r in reps):
            continue
        reps.append(v)
        dfs([v], 1 << v, [], best_cols is not None)
    assert best_cols is not None and best_order is not None
    return tuple(best_cols), best_order


def _pack(n: int, cols: tuple[int, ...]) -> bytes:
    """Pack column ints (column j has width j) into bytes, MSB first."""
    acc = 0
    total = 0
    for width, col in enumerate(cols, start=1):
        acc = (acc << width) | col
        total += width
    pad = (-total) % 8
    acc <<= pad
    return bytes([n]) + acc.to_bytes((total + pad) // 8, "big")


def canonical_form(g: Graph) -> CanonicalForm:
    """Exact canonical form; equal forms iff isomorphic."""
    cols, _ = _canonical(g.n, g.adj)
    return CanonicalForm(_pack(g.n, cols))


def canonical_ordering(g: Graph) -> tuple[int, ...]:
    """A vertex ordering (position -> original vertex) attaining the form."""
    _, order = _canonical(g.n, g.adj)
    return order


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled copy of g."""
    return g.relabel(canonical_ordering(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if sorted(refined_colors(g.n, g.adj)) != sorted(refined_colors(h.n, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)
