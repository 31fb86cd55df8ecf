"""The reproduction battery behind `domlink verify`.

Twelve checks, each with a fixed seed set and a wall-clock budget; every
check returns a CheckResult and run_all prints one pass/fail line per
check.  The pytest acceptance module drives exactly the same functions.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .compliance import (check_nordhaus_product, check_nordhaus_sum,
                         compliance_by_minor, is_k_compliant, min_k_of,
                         compute_f, verify_one_of_three)
from .constructions import (family, k331, paley, petersen, srg_check,
                            triangular_prism, twin_add)
from .domination import gamma_c
from .graph import Graph, degree_stats, join, pair_table
from .iso import are_isomorphic, canonical_form
from .rng import XorShift64Star
from .search import random_gnp
from .topology import check_minor_witness, has_minor, is_il, petersen_family

SEED = 0x5EED_D011
FN_TABLE_SMALL = (1, 2, 2, 2, 3)
FN_REGRESSION = {6: 3, 7: 4}  # frozen from the exhaustive scan


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    ok: bool
    seconds: float
    budget: float
    detail: str

    @property
    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"[{status}] {self.name} ({self.seconds:.2f}s / budget {self.budget:.0f}s)"
                f" {self.detail}")


def _sample_stream(count: int, orders: tuple[int, ...],
                   densities: tuple[float, ...], seed: int):
    for i in range(count):
        n = orders[i % len(orders)]
        p = densities[i % len(densities)]
        yield random_gnp(n, p, seed + i)


# -- the twelve checks --------------------------------------------------


def check_paley_identity() -> tuple[bool, str]:
    g = paley(13)
    seq, dmax, dmin, m = degree_stats(g)
    params = srg_check(g)
    ok = (dmax == dmin == 6 and m == 39
          and are_isomorphic(g, g.complement())
          and params is not None
          and (params.n, params.k, params.lam, params.mu) == (13, 6, 2, 3))
    return ok, f"degrees {dmin}..{dmax}, {m} edges, srg={params}"


def check_qr13_compliance() -> tuple[bool, str]:
    g = paley(13)
    a = gamma_c(g).value
    b = gamma_c(g.complement()).value
    dom = is_k_compliant(g, 3)
    minor3 = compliance_by_minor(g, 3)
    minor4 = compliance_by_minor(g, 4)
    ok = (a == 4 and b == 4 and not dom.compliant and dom.min_k == 4
          and not minor3.compliant and minor4.compliant and minor4.min_k == 4)
    return ok, f"gamma_c={a}/{b}, domination min_k={dom.min_k}, minor route agrees"


def _double_contractions(g: Graph):
    edges = g.edges()
    for e1, e2 in combinations(edges, 2):
        lo, hi = min(e1), max(e1)
        mapped = []
        for x in e2:
            if x == hi:
                x = lo
            elif x > hi:
                x -= 1
            mapped.append(x)
        a, b = mapped
        yield g.contract_edge(*e1).contract_edge(a, b)


def check_contraction_census() -> tuple[bool, str]:
    g = paley(13)
    classes: dict[bytes, int] = {}
    max_deg = 0
    count = 0
    for h in _double_contractions(g):
        count += 1
        max_deg = max(max_deg, max(h.degrees()))
        classes.setdefault(canonical_form(h).blob, 0)
    ok = len(classes) == 13 and max_deg <= 9
    return ok, f"{count} contraction pairs, {len(classes)} classes, max degree {max_deg}"


def check_order14_spot() -> tuple[bool, str]:
    q = paley(13)
    open_ext = twin_add(q, 0, False)
    closed_ext = twin_add(q, 0, True)
    r_open = is_k_compliant(open_ext, 3)
    r_closed = is_k_compliant(closed_ext, 3)
    distinct = not are_isomorphic(open_ext, closed_ext)
    comp_pair = are_isomorphic(open_ext.complement(), closed_ext)
    deletions_ok = True
    for v in range(13):
        h = q.delete_vertex(v)
        if not is_k_compliant(h, 3).compliant or is_k_compliant(h, 2).compliant:
            deletions_ok = False
            break
    ok = (not r_open.compliant and not r_closed.compliant and distinct
          and comp_pair and deletions_ok)
    return ok, (f"twins non-compliant={not r_open.compliant}/{not r_closed.compliant}, "
                f"distinct={distinct}, complement-pair={comp_pair}, "
                f"vertex deletions 3-compliant/2-non-compliant={deletions_ok}")


def check_fn_table() -> tuple[bool, str]:
    workers = min(4, os.cpu_count() or 1)
    values = {}
    for n in range(1, 8):
        f, _ = compute_f(n, workers=workers if n >= 6 else 1)
        values[n] = f
    small_ok = tuple(values[n] for n in range(1, 6)) == FN_TABLE_SMALL
    regress_ok = all(values[n] == FN_REGRESSION[n] for n in (6, 7))
    gaps = [n - values[n] for n in range(1, 8)]
    mono_ok = all(a <= b for a, b in zip(gaps, gaps[1:]))
    ok = small_ok and regress_ok and mono_ok
    return ok, (f"f(1..7)={tuple(values[n] for n in range(1, 8))}, "
                f"published small values match={small_ok}, "
                f"regression 6,7 match={regress_ok}, n-f(n) non-decreasing={mono_ok}")


def check_oracle_equivalence() -> tuple[bool, str]:
    disagreements = 0
    checked = 0
    for mask in range(1 << 15):
        g = Graph.from_mask(6, mask)
        mk = min_k_of(g)
        for k in (1, 2, 3):
            dom = mk <= k
            minor = compliance_by_minor(g, k).compliant
            checked += 1
            if dom != minor:
                disagreements += 1
    return disagreements == 0, f"{checked} comparisons, {disagreements} disagreements"


def check_nordhaus_suite() -> tuple[bool, str]:
    from .constructions import cycle, path

    sum_applicable = 0
    failures = []
    for g in _sample_stream(10_000, tuple(range(7, 14)),
                            (0.15, 0.3, 0.5, 0.7, 0.85), SEED + 700):
        sv = check_nordhaus_sum(g)
        if sv.applicable:
            sum_applicable += 1
            if not sv.holds:
                failures.append("sum inequality failed")
                break
        pv = check_nordhaus_product(g)
        if pv.applicable:
            if not pv.holds:
                failures.append("product bound failed")
                break
            if pv.equality != pv.expected_equality:
                failures.append("equality flag mismatch")
                break
        if g.n <= 12 and not is_k_compliant(g, 3).compliant:
            failures.append(f"order-{g.n} sample not 3-compliant")
            break
    exact_ok = True
    for n in range(7, 13):
        for g in (path(n), cycle(n)):
            if gamma_c(g).value != n - 2 or gamma_c(g.complement()).value != 2:
                exact_ok = False
            pv = check_nordhaus_product(g)
            if not (pv.applicable and pv.holds and pv.equality and pv.expected_equality):
                exact_ok = False
    ok = not failures and exact_ok
    return ok, (f"10000 samples, sum applicable on {sum_applicable}, "
                f"failures={failures or 'none'}, path/cycle exact values ok={exact_ok}")


def check_petersen_il() -> tuple[bool, str]:
    fam = petersen_family()
    orders = sorted(g.n for g in fam)
    sizes = {g.edge_count for g in fam}
    fam_ok = (len(fam) == 7 and orders == [6, 7, 7, 8, 8, 9, 10]
              and sizes == {15}
              and any(are_isomorphic(g, Graph.complete(6)) for g in fam)
              and any(are_isomorphic(g, petersen()) for g in fam))
    il_true = all(is_il(g) for g in (Graph.complete(6), petersen(), k331()))
    planar_fixtures = _planar_fixtures()
    il_false = (not is_il(Graph.complete(5))
                and not is_il(_complete_bipartite(4, 4))
                and all(not is_il(g) for g in planar_fixtures))
    ok = fam_ok and il_true and il_false
    return ok, (f"family size {len(fam)} orders {orders}, IL positives ok={il_true}, "
                f"negatives ok={il_false} ({len(planar_fixtures)} planar fixtures)")


def _complete_bipartite(a: int, b: int) -> Graph:
    from .constructions import complete_multipartite

    return complete_multipartite((a, b))


def _planar_fixtures() -> list[Graph]:
    from .constructions import cycle, path

    grid = Graph.from_edges(9, [(r * 3 + c, r * 3 + c + 1) for r in range(3) for c in range(2)]
                            + [(r * 3 + c, (r + 1) * 3 + c) for r in range(2) for c in range(3)])
    wheel = Graph.from_edges(8, [(i, (i + 1) % 7) for i in range(7)] + [(i, 7) for i in range(7)])
    # stacked planar triangulation on 8 vertices (18 edges, above the
    # 15-edge shortcut, so the minor searches actually run)
    apollonian = Graph.from_edges(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                                      (4, 0), (4, 1), (4, 2),
                                      (5, 0), (5, 1), (5, 4),
                                      (6, 0), (6, 4), (6, 5),
                                      (7, 1), (7, 4), (7, 5)])
    return [path(9), cycle(11), triangular_prism(), grid, wheel, apollonian]


def check_ik_conditions() -> tuple[bool, str]:
    from .topology import IkStatus, is_ik_sufficient

    r1 = is_ik_sufficient(Graph.complete(7))
    r2 = is_ik_sufficient(join(Graph.complete(6), Graph.empty(1)))
    r3 = is_ik_sufficient(join(petersen(), Graph.empty(1)))
    ok = (r1 == IkStatus.IK_BY_K7 and r2 == IkStatus.IK_BY_K7
          and r3 == IkStatus.IK_BY_CONE_OVER_IL)
    return ok, f"K7 -> {r1.value}, K6*K1 -> {r2.value}, Petersen*K1 -> {r3.value}"


def _random_with_min_edges(n: int, min_edges: int, seed: int) -> Graph:
    rng = XorShift64Star(seed)
    npairs = n * (n - 1) // 2
    m = min_edges + rng.below(npairs - min_edges + 1)
    pairs = pair_table(n)
    rows = [0] * n
    for i in rng.sample_indices(npairs, m):
        u, v = pairs[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def check_mader() -> tuple[bool, str]:
    k6 = Graph.complete(6)
    k7 = Graph.complete(7)
    misses = 0
    for i in range(200):
        n = 8 + i % 3
        g = _random_with_min_edges(n, 4 * n - 9, SEED + 1000 + i)
        w = has_minor(g, k6)
        if w is None or not check_minor_witness(g, k6, w):
            misses += 1
    for i in range(200):
        n = 8 + i % 3
        g = _random_with_min_edges(n, 5 * n - 14, SEED + 2000 + i)
        w = has_minor(g, k7)
        if w is None or not check_minor_witness(g, k7, w):
            misses += 1
    return misses == 0, f"400 dense samples, {misses} missing minors"


def check_one_of_three() -> tuple[bool, str]:
    from .compliance import ThreeWay

    tally = {w: 0 for w in ThreeWay}
    for g in _sample_stream(500, (15,), (0.15, 0.3, 0.5, 0.7, 0.85), SEED + 3000):
        tally[verify_one_of_three(g)] += 1
    detail = ", ".join(f"{w.value}={c}" for w, c in tally.items())
    return True, f"500 samples, no falsification: {detail}"


def check_figure_families() -> tuple[bool, str]:
    counts = (len(family(6, size=9, min_degree=2)),
              len(family(6, size=8, min_degree=2)),
              len(family(6, size=7, min_degree=2)),
              len(family(6, regular=2)))
    ok = counts == (15, 11, 5, 2)
    return ok, f"constrained order-6 families: {counts}, expected (15, 11, 5, 2)"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]], float]] = [
    ("paley-identity", check_paley_identity, 1.0),
    ("qr13-compliance", check_qr13_compliance, 5.0),
    ("contraction-census", check_contraction_census, 30.0),
    ("order14-classification", check_order14_spot, 30.0),
    ("fn-table", check_fn_table, 60.0),
    ("oracle-equivalence", check_oracle_equivalence, 120.0),
    ("nordhaus-suite", check_nordhaus_suite, 120.0),
    ("petersen-family-il", check_petersen_il, 60.0),
    ("ik-conditions", check_ik_conditions, 30.0),
    ("mader-minors", check_mader, 120.0),
    ("one-of-three", check_one_of_three, 120.0),
    ("figure-families", check_figure_families, 30.0),
]


def run_check(index: int) -> CheckResult:
    name, fn, budget = CHECKS[index]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashed check is a failed check
        elapsed = time.perf_counter() - start
        return CheckResult(name, False, elapsed, budget, f"raised {exc!r}")
    elapsed = time.perf_counter() - start
    if elapsed > budget:
        ok = False
        detail += " [over budget]"
    return CheckResult(name, ok, elapsed, budget, detail)


def run_all(printer: Callable[[str], None] = print) -> list[CheckResult]:
    results = []
    for i in range(len(CHECKS)):
        res = run_check(i)
        printer(res.line)
        results.append(res)
    return results
