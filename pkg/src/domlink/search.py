"""Candidate generation and pruned search for k-non-compliant graphs.

Two modes: seeded sampling (the desk-scale mode, with optional injected
positive controls) and exhaustive generation by canonical augmentation
(opt-in for order >= 13, where the census is hours-scale).  Every
reported graph carries a re-checkable compliance report; output is
deduplicated and sorted by canonical form, so results never depend on
scheduling.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations

from .compliance import FILTER_ORDERS, FILTERS, ComplianceReport, is_k_compliant
from .graph import Graph, pair_table
from .graphio import emit_graph6, parse_graph6
from .iso import canonical_form, canonical_ordering
from .rng import XorShift64Star

MAX_SEARCH_ORDER = 16
LONG_RUN_ORDER = 13


@dataclass(frozen=True, slots=True)
class SearchSpec:
    """What to search: order, compliance threshold, constraints, mode.

    `regular` fixes the degree; `edges` is an inclusive window for the
    edge count (sampling draws the count uniformly from the window).
    `inject` graphs are prepended to the sampled stream; `candidates`
    bypasses generation entirely and just screens the given graphs.
    """

    order: int
    k: int
    regular: int | None = None
    edges: tuple[int, int] | None = None
    density: float = 0.5
    filters: tuple[str, ...] = ()
    mode: str = "sample"
    samples: int = 0
    seed: int = 1
    inject: tuple[Graph, ...] = ()
    candidates: tuple[Graph, ...] = ()

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_SEARCH_ORDER:
            raise ValueError(f"order must be within 1..{MAX_SEARCH_ORDER}")
        if not 1 <= self.k <= self.order:
            raise ValueError("k must be within 1..order")
        if self.mode not in ("sample", "exhaustive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.regular is not None:
            if self.regular >= self.order or self.regular < 0:
                raise ValueError("regular degree must be within 0..order-1")
            if self.order * self.regular % 2:
                raise ValueError("order * degree must be even")
        if self.edges is not None:
            lo, hi = self.edges
            npairs = self.order * (self.order - 1) // 2
            if not 0 <= lo <= hi <= npairs:
                raise ValueError("edge window out of range")
        if self.regular is not None and self.edges is not None:
            if not self.edges[0] <= self.order * self.regular // 2 <= self.edges[1]:
                raise ValueError("edge window excludes the regular edge count")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must be within 0..1")
        for name in self.filters:
            if name not in FILTERS:
                raise ValueError(f"unknown filter {name!r}")
            want = FILTER_ORDERS[name]
            if want is not None and want != self.order:
                raise ValueError(f"filter {name!r} applies to order {want} only")
        if self.mode == "sample" and not self.candidates and self.samples <= 0:
            raise ValueError("sample mode needs samples > 0 or explicit candidates")

    def digest(self) -> str:
        payload = {
            "order": self.order, "k": self.k, "regular": self.regular,
            "edges": self.edges, "density": self.density,
            "filters": list(self.filters), "mode": self.mode,
            "samples": self.samples, "seed": self.seed,
            "inject": [emit_graph6(g) for g in self.inject],
            "candidates": [emit_graph6(g) for g in self.candidates],
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


@dataclass(frozen=True, slots=True)
class SearchResult:
    spec_digest: str
    seed: int
    examined: int
    survivors: int
    records: tuple[tuple[Graph, ComplianceReport], ...]


# -- random generators ---------------------------------------------------


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), one Bernoulli draw per pair, seeded."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be within 0..1")
    rng = XorShift64Star(seed)
    return _gnp(n, p, rng)


def _gnp(n: int, p: float, rng: XorShift64Star) -> Graph:
    rows = [0] * n
    for v in range(n):
        for u in range(v):
            if rng.chance(p):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Configuration-model d-regular graph; reshuffles on collisions."""
    if d >= n or d < 0:
        raise ValueError("need 0 <= d < n")
    if n * d % 2:
        raise ValueError("n * d must be even")
    rng = XorShift64Star(seed)
    g = _regular(n, d, rng)
    if g is None:
        raise RuntimeError("configuration model failed to converge")
    return g


def _regular(n: int, d: int, rng: XorShift64Star, attempts: int = 2000) -> Graph | None:
    if d == 0:
        return Graph.empty(n)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(attempts):
        rng.shuffle(stubs)
        rows = [0] * n
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or rows[u] >> v & 1:
                ok = False
                break
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if ok:
            return Graph(n, tuple(rows))
    return None


def _random_with_edges(n: int, lo: int, hi: int, rng: XorShift64Star) -> Graph:
    npairs = n * (n - 1) // 2
    m = lo + rng.below(hi - lo + 1)
    pairs = pair_table(n)
    rows = [0] * n
    for i in rng.sample_indices(npairs, m):
        u, v = pairs[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# -- exhaustive generation (canonical augmentation) ----------------------


def nonisomorphic_graphs(order: int, max_degree: int | None = None,
                         exact_degree: int | None = None) -> list[Graph]:
    """All graphs of the given order up to isomorphism, canonical copies.

    Grows one vertex at a time; a child is kept when the vertex whose
    position is last in the canonical ordering deletes back to the
    parent's class (canonical augmentation), with a per-level seen set
    as a safety net.  Degree constraints prune during growth:
    `max_degree` caps every degree, `exact_degree` additionally demands
    completability to a regular graph and keeps only exact matches at
    the final order.
    """
    cap = max_degree
    if exact_degree is not None:
        cap = exact_degree if cap is None else min(cap, exact_degree)
    level: list[Graph] = [Graph.empty(1)]
    for k in range(2, order + 1):
        seen: set[bytes] = set()
        nxt: list[Graph] = []
        slots = order - k  # vertices still to come after this one
        for parent in level:
            for mask in range(1 << (k - 1)):
                if cap is not None:
                    if mask.bit_count() > cap:
                        continue
                    if any(mask >> v & 1 and parent.adj[v].bit_count() + 1 > cap
                           for v in range(k - 1)):
                        continue
                rows = [row | (1 << (k - 1)) if mask >> v & 1 else row
                        for v, row in enumerate(parent.adj)]
                rows.append(mask)
                child = Graph(k, tuple(rows))
                if exact_degree is not None:
                    # each vertex must still be able to reach the target degree
                    if any(exact_degree - rows[v].bit_count() > slots
                           for v in range(k)):
                        continue
                    if k == order and any(rows[v].bit_count() != exact_degree
                                          for v in range(k)):
                        continue
                cf = canonical_form(child)
                if cf.blob in seen:
                    continue
                ordering = canonical_ordering(child)
                last = ordering[-1]
                if last != k - 1:
                    back = child.delete_vertex(last)
                    if canonical_form(back) != canonical_form(parent):
                        continue
                seen.add(cf.blob)
                nxt.append(child.relabel(ordering))
        level = nxt
    return sorted(level, key=lambda g: canonical_form(g).blob)


# -- the search driver ----------------------------------------------------


def _generate_sample(spec: SearchSpec, rng: XorShift64Star) -> Graph:
    if spec.regular is not None:
        g = _regular(spec.order, spec.regular, rng)
        if g is None:
            raise RuntimeError("configuration model failed to converge")
        return g
    if spec.edges is not None:
        return _random_with_edges(spec.order, spec.edges[0], spec.edges[1], rng)
    return _gnp(spec.order, spec.density, rng)


def search_non_compliant(spec: SearchSpec, long_running: bool = False,
                         checkpoint: str | None = None) -> SearchResult:
    """Run the spec; return the k-non-compliant graphs found, deduplicated.

    Sampling is the desk-scale mode.  Exhaustive runs at order >=
    LONG_RUN_ORDER must be acknowledged with long_running=True.
    """
    filters = [FILTERS[name] for name in spec.filters]
    if spec.candidates:
        stream: list[Graph] = list(spec.candidates)
    elif spec.mode == "sample":
        rng = XorShift64Star(spec.seed)
        stream = list(spec.inject)
        stream += [_generate_sample(spec, rng) for _ in range(spec.samples)]
    else:
        if spec.order >= LONG_RUN_ORDER and not long_running:
            raise ValueError(
                f"exhaustive search at order >= {LONG_RUN_ORDER} needs long_running=True")
        stream = nonisomorphic_graphs(spec.order, exact_degree=spec.regular)
        if spec.edges is not None:
            lo, hi = spec.edges
            stream = [g for g in stream if lo <= g.edge_count <= hi]

    examined = 0
    survivors: list[Graph] = []
    for g in stream:
        if g.n != spec.order:
            raise ValueError("candidate order differs from spec order")
        examined += 1
        if all(f(g).passed for f in filters):
            survivors.append(g)

    if checkpoint is not None:
        lines = [f"# domlink-checkpoint spec={spec.digest()} seed={spec.seed}"]
        lines += [emit_graph6(g) for g in survivors]
        with open(checkpoint, "w") as fh:
            fh.write("\n".join(lines) + "\n")

    found: dict[bytes, tuple[Graph, ComplianceReport]] = {}
    for g in survivors:
        report = is_k_compliant(g, spec.k)
        if report.compliant:
            continue
        blob = canonical_form(g).blob
        if blob not in found:
            found[blob] = (g, report)
    records = tuple(found[b] for b in sorted(found))
    return SearchResult(spec_digest=spec.digest(), seed=spec.seed,
                        examined=examined, survivors=len(survivors),
                        records=records)


def load_checkpoint(path: str) -> list[Graph]:
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            graphs.append(parse_graph6(line))
    return graphs


def unlabeled_graph_count(n: int) -> int:
    """Number of graphs on n unlabelled vertices, by Burnside over S_n.

    Independent counting oracle for the canonical-augmentation
    generator; feasible for n <= 8.
    """
    from itertools import permutations
    from math import factorial

    pairs = pair_table(n)
    index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(pairs)
        cycles = 0
        for i, (u, v) in enumerate(pairs):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                a, b = pairs[j]
                pa, pb = perm[a], perm[b]
                j = index[(pa, pb) if pa < pb else (pb, pa)]
        total += 1 << cycles
    return total // factorial(n)
