"""Checkers for the forest bound, its supporting lemmas and the related conjectures.

Each checker compares exact integers or fractions.  Lemma checkers whose
statement is conditional report the state of the hypothesis gate and never
assert a conclusion when the gate is closed.  Sweeps split their input into
contiguous chunks, optionally across a process pool, and merge the results
in chunk order, so reports do not depend on the worker count.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .canon import canonical_code
from .dompoly import (
    ONE_PLUS_X,
    DomPolynomial,
    complete_poly,
    compute,
    eval_pair,
    star_avd_closed_form,
    star_poly,
)
from .enumerate import forests_no_isolated, labeled_graph_count, labeled_graphs, trees
from .errors import GraphError, GuardExceeded, HypothesisNotMet
from .formats import rational_to_json, to_graph6
from .graph import (
    Graph,
    attach_leaves,
    classify,
    closed_nbhd_nested,
    contract,
    edge_pairs,
    from_edge_mask,
    glue_clique,
    has_isolated,
    is_extremal_shape,
    is_forest,
    is_support,
    is_tree,
    leaf_neighbors,
    nested_pairs,
    remove_edge,
    remove_vertices,
)
from .labeled import chunks, eval_table, neighbourhoods
from .reports import (
    EQUALITY,
    VIOLATION,
    BoundReport,
    ConjectureReport,
    GraphRow,
    SupportLemmaReport,
    SweepReport,
    bound_status,
)

PolyFn = Callable[[Graph], DomPolynomial]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("DOMFORGE_WORKERS", "1")))
    except ValueError:
        return 1


def _pmap(fn, args: Sequence[tuple], workers: int) -> list:
    """Order-preserving map of ``fn(*a)`` over ``args``."""
    if workers <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*args)))


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def _code(G: Graph) -> str:
    return canonical_code(G).decode()


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


# ---------------------------------------------------------------------------
# the forest bound


def check_bound(G: Graph, poly: PolyFn = compute) -> BoundReport:
    """Compare 3 D'(1) with 2n D(1) exactly."""
    e = eval_pair(poly(G))
    lhs, rhs = 3 * e.dp1, 2 * G.order * e.d1
    return BoundReport(G.order, lhs, rhs, bound_status(lhs, rhs), Fraction(e.dp1, e.d1), is_extremal_shape(G))


def graph_row(G: Graph, poly: PolyFn = compute) -> GraphRow:
    e = eval_pair(poly(G))
    status = bound_status(3 * e.dp1, 2 * G.order * e.d1)
    return GraphRow(
        _code(G), G.order, e.d1, e.dp1, status, is_extremal_shape(G), is_forest(G), has_isolated(G)
    )


def _forest_rows(n: int, lo: int, hi: int) -> list[GraphRow]:
    return [graph_row(G) for G in forests_no_isolated(n)[lo:hi]]


def forest_rows(n: int, workers: int = 1) -> list[GraphRow]:
    total = len(forests_no_isolated(n))
    parts = _pmap(_forest_rows, [(n, lo, hi) for lo, hi in _split(total, 4 * workers)], workers)
    return sorted((r for part in parts for r in part), key=lambda r: r.code)


def rows_report(family: str, n: int, rows: Iterable[GraphRow]) -> SweepReport:
    rep = SweepReport(family, n)
    for r in rows:
        rep.total += 1
        if r.isolated:
            continue
        if r.status == EQUALITY:
            rep.equality_cases.append(r.code)
        elif r.status == VIOLATION:
            rep.violations.append(r.code)
        if r.forest and (r.status == EQUALITY) != r.extremal_shape:
            rep.mismatches.append(r.code)
    for lst in (rep.equality_cases, rep.violations, rep.mismatches):
        lst.sort()
    return rep


def sweep_forests(n_max: int, workers: int = 1, n_min: int = 2) -> list[SweepReport]:
    """Bound and equality characterisation over every forest without isolated vertices."""
    if not 2 <= n_min <= n_max <= 16:
        raise GuardExceeded(f"forest sweep needs 2 <= n <= 16, got {n_min}..{n_max}")
    out = []
    for n in range(n_min, n_max + 1):
        t0 = time.perf_counter()
        rep = rows_report("forests-no-isolated", n, forest_rows(n, workers))
        rep.elapsed_ms = _ms(t0)
        out.append(rep)
    return out


# ---------------------------------------------------------------------------
# polynomial identities


def recurrence_rhs(G: Graph, u: int, poly: PolyFn = compute) -> DomPolynomial:
    """x D(G/u) + D(G - u) + x D(G - N[u])."""
    return (
        poly(contract(G, u)).shift(1)
        + poly(remove_vertices(G, [u]))
        + poly(remove_vertices(G, _closed(G, u))).shift(1)
    )


def _closed(G: Graph, u: int) -> list[int]:
    return [u, *G.neighbors(u)]


def verify_recur(G: Graph, u: int, v: int, poly: PolyFn = compute) -> bool:
    G._check_vertex(u)
    G._check_vertex(v)
    if u == v or not closed_nbhd_nested(G, v, u):
        raise HypothesisNotMet(f"N[{v}] is not contained in N[{u}] for distinct vertices")
    return poly(G) == recurrence_rhs(G, u, poly)


def verify_leaf_recur(G: Graph, u: int, v: int, poly: PolyFn = compute) -> bool:
    """Pendant-edge form: D = x [D(G/u) + D(G - {u, v}) + D(G - N[u])], v a leaf on u."""
    if G.degree(v) != 1 or not G.has_edge(u, v):
        raise HypothesisNotMet(f"{v} is not a leaf hanging on {u}")
    rhs = (
        poly(contract(G, u)) + poly(remove_vertices(G, [u, v])) + poly(remove_vertices(G, _closed(G, u)))
    ).shift(1)
    return poly(G) == rhs


def glue_rhs(G: Graph, u: int, k: int, poly: PolyFn = compute) -> DomPolynomial:
    """(x+1)^(k-1) [D(G_(u,1)) + D(G - u)] - D(G - u)."""
    minus_u = poly(remove_vertices(G, [u]))
    return ONE_PLUS_X ** (k - 1) * (poly(glue_clique(G, u, 1)) + minus_u) - minus_u


def verify_glue(G: Graph, u: int, k: int, poly: PolyFn = compute) -> bool:
    if k < 1:
        raise GraphError("clique gluing needs k >= 1")
    return poly(glue_clique(G, u, k)) == glue_rhs(G, u, k, poly)


def verify_support_lemma(G: Graph, w: int, poly: PolyFn = compute) -> SupportLemmaReport:
    G._check_vertex(w)
    leaves = leaf_neighbors(G, w)
    if not leaves:
        raise HypothesisNotMet(f"vertex {w} is not a support vertex")
    t = len(leaves)
    others = [x for x in G.neighbors(w) if x not in leaves]
    nb_ok = all(is_support(G, x) for x in others)
    H = remove_vertices(G, [w, *leaves])
    eh = eval_pair(poly(H))
    eg = eval_pair(poly(G))
    h_lhs, h_rhs = 3 * eh.dp1, 2 * H.order * eh.d1
    g_lhs, g_rhs = 3 * eg.dp1, 2 * G.order * eg.d1
    return SupportLemmaReport(
        t=t,
        neighbors_are_supports=nb_ok,
        h_bound=h_lhs <= h_rhs,
        h_equality=h_lhs == h_rhs,
        conclusion=g_lhs <= g_rhs,
        equality=g_lhs == g_rhs,
    )


def three_item_hypothesis(T: Graph, u: int) -> bool:
    if T.order < 3 or not is_tree(T) or is_support(T, u):
        return False
    return sum(1 for x in T.neighbors(u) if not is_support(T, x)) <= 1


def verify_three_item(T: Graph, u: int, poly: PolyFn = compute) -> tuple[bool, bool, bool]:
    T._check_vertex(u)
    if not three_item_hypothesis(T, u):
        raise HypothesisNotMet(
            f"need a tree of order >= 3 and a non-support vertex with at most one "
            f"non-support neighbour; vertex {u} does not qualify"
        )
    counts = [0] * T.order
    counts[u] = 1
    g1 = eval_pair(poly(attach_leaves(T, counts))).d1
    dt = eval_pair(poly(T)).d1
    dtu = eval_pair(poly(remove_vertices(T, [u]))).d1
    return g1 <= dt + 3 * dtu, g1 <= 5 * dtu, dt <= 3 * dtu


def verify_leaf_attach(G: Graph, counts: Sequence[int], poly: PolyFn = compute) -> bool:
    if len(counts) != G.order:
        raise GraphError(f"expected {G.order} leaf counts, got {len(counts)}")
    if any(k < 1 for k in counts):
        raise GraphError("every leaf count must be positive")
    P = poly(attach_leaves(G, counts))
    product = DomPolynomial((1,))
    total = Fraction(0)
    for k in counts:
        S = star_poly(k)
        product = product * S
        e = eval_pair(S)
        total += Fraction(e.dp1, e.d1)
    e = eval_pair(P)
    return P == product and Fraction(e.dp1, e.d1) == total


# ---------------------------------------------------------------------------
# lemma suites


def _suite(name: str) -> dict:
    return {"suite": name, "checked": 0, "gated": 0, "failures": []}


def recur_suite(max_tree_n: int = 9, max_labeled_n: int = 6, poly: PolyFn = compute) -> dict:
    rep = _suite("nested-neighbourhood-recurrence")
    for n in range(1, max_tree_n + 1):
        for G in trees(n):
            _recur_all(G, rep, poly)
    for n in range(1, max_labeled_n + 1):
        for G in labeled_graphs(n):
            _recur_all(G, rep, poly)
    return rep


def _recur_all(G: Graph, rep: dict, poly: PolyFn) -> None:
    lhs = poly(G)
    seen_u = {}
    for u, v in nested_pairs(G):
        rep["checked"] += 1
        # the right-hand side depends on u only
        if u not in seen_u:
            seen_u[u] = recurrence_rhs(G, u, poly)
        if seen_u[u] != lhs:
            rep["failures"].append({"graph6": to_graph6(G), "u": u, "v": v})


def leaf_recur_suite(max_n: int = 12, poly: PolyFn = compute) -> dict:
    rep = _suite("pendant-edge-recurrence")
    for n in range(2, max_n + 1):
        for G in trees(n):
            for v, c in enumerate(classify(G)):
                if c.is_leaf:
                    u = G.neighbors(v)[0]
                    rep["checked"] += 1
                    if not verify_leaf_recur(G, u, v, poly):
                        rep["failures"].append({"graph6": to_graph6(G), "u": u, "v": v})
    return rep


def glue_suite(max_n: int = 7, max_k: int = 4, poly: PolyFn = compute) -> dict:
    rep = _suite("clique-gluing")
    for n in range(1, max_n + 1):
        for G in trees(n):
            for u in range(n):
                for k in range(1, max_k + 1):
                    rep["checked"] += 1
                    if not verify_glue(G, u, k, poly):
                        rep["failures"].append({"graph6": to_graph6(G), "u": u, "k": k})
    return rep


def support_suite(max_n: int = 10, poly: PolyFn = compute) -> dict:
    rep = _suite("support-vertex")
    for n in range(2, max_n + 1):
        for G in trees(n):
            for w, c in enumerate(classify(G)):
                if not c.is_support:
                    continue
                r = verify_support_lemma(G, w, poly)
                if not r.hypotheses:
                    rep["gated"] += 1
                    continue
                rep["checked"] += 1
                if not r.consistent:
                    rep["failures"].append({"graph6": to_graph6(G), "w": w, "t": r.t})
    return rep


def three_item_suite(max_n: int = 10, poly: PolyFn = compute) -> dict:
    rep = _suite("three-inequalities")
    for n in range(3, max_n + 1):
        for T in trees(n):
            for u in range(n):
                if not three_item_hypothesis(T, u):
                    rep["gated"] += 1
                    continue
                rep["checked"] += 1
                flags = verify_three_item(T, u, poly)
                if not all(flags):
                    rep["failures"].append({"graph6": to_graph6(T), "u": u, "flags": list(flags)})
    return rep


def leaf_attach_suite(max_base: int = 6, max_leaves: int = 6, poly: PolyFn = compute) -> dict:
    """Every labeled base graph with positive counts summing to at most ``max_leaves``."""
    rep = _suite("leaf-attachment-product")
    for n in range(1, min(max_base, max_leaves) + 1):
        count_vectors = list(_positive_vectors(n, max_leaves))
        for G in labeled_graphs(n):
            for counts in count_vectors:
                rep["checked"] += 1
                if not verify_leaf_attach(G, counts, poly):
                    rep["failures"].append({"graph6": to_graph6(G), "counts": list(counts)})
    return rep


def _positive_vectors(length: int, budget: int):
    if length == 0:
        yield ()
        return
    for k in range(1, budget - (length - 1) + 1):
        for rest in _positive_vectors(length - 1, budget - k):
            yield (k,) + rest


def monotonicity_suite(max_n: int = 10, samples: int = 300, seed: int = 0, poly: PolyFn = compute) -> dict:
    """D_H(1) <= D_G(1) along random chains of vertex deletions and of edge deletions.

    Induced (vertex-deleted) and edge-deleted subgraphs are counted separately.
    """
    rng = random.Random(seed)
    rep = _suite("subgraph-monotonicity")
    rep["induced"] = 0
    rep["edge_deleted"] = 0
    for _ in range(samples):
        n = rng.randint(1, max_n)
        G = from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        d_prev = eval_pair(poly(G)).d1
        H = G
        while H.order > 0 and (H.size > 0 or H.order > 1):
            if H.size and rng.random() < 0.5:
                u, v = rng.choice(H.edges())
                H = remove_edge(H, u, v)
                kind = "edge_deleted"
            else:
                H = remove_vertices(H, [rng.randrange(H.order)])
                kind = "induced"
            d = eval_pair(poly(H)).d1
            rep[kind] += 1
            rep["checked"] += 1
            if d > d_prev:
                rep["failures"].append({"graph6": to_graph6(G), "step": kind})
            d_prev = d
    return rep


def lemma_suites(max_n: int = 10, poly: PolyFn = compute) -> list[dict]:
    """All identity and lemma suites, with each suite's own size cap clipped at ``max_n``."""
    return [
        recur_suite(min(max_n, 9), min(max_n, 6), poly),
        leaf_recur_suite(min(max_n, 12), poly),
        glue_suite(min(max_n, 7), 4, poly),
        support_suite(min(max_n, 10), poly),
        three_item_suite(min(max_n, 10), poly),
        leaf_attach_suite(min(max_n, 6), 6, poly),
        monotonicity_suite(min(max_n, 10), poly=poly),
    ]


# ---------------------------------------------------------------------------
# tree extremes


def star_min_sweep(n_max: int, n_min: int = 2) -> list[SweepReport]:
    """avd(T) > avd(K_{1,n-1}) for every tree T other than the star.

    ``equality_cases`` lists the star itself; ``violations`` lists any
    non-star tree whose avd does not exceed the star's.
    """
    if not 2 <= n_min <= n_max <= 13:
        raise GuardExceeded(f"star sweep needs 2 <= n <= 13, got {n_min}..{n_max}")
    out = []
    for n in range(n_min, n_max + 1):
        t0 = time.perf_counter()
        star = star_avd_closed_form(n)
        rep = SweepReport("trees", n)
        for T in trees(n):
            rep.total += 1
            e = eval_pair(compute(T))
            value = Fraction(e.dp1, e.d1)
            is_star = max(T.degrees()) == n - 1
            if is_star:
                if value != star:
                    rep.violations.append(_code(T))
                else:
                    rep.equality_cases.append(_code(T))
            elif value <= star:
                rep.violations.append(_code(T))
        rep.violations.sort()
        rep.equality_cases.sort()
        rep.elapsed_ms = _ms(t0)
        out.append(rep)
    return out


# ---------------------------------------------------------------------------
# labeled-graph sweeps


def labeled_evals(n: int, workers: int = 1) -> tuple[np.ndarray, np.ndarray]:
    parts = _pmap(eval_table, [(n, lo, hi) for lo, hi in chunks(n)], workers)
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def _findings(n: int, masks: np.ndarray, detail: Callable[[int], dict] | None = None) -> list[dict]:
    """Group labeled findings by isomorphism class, sorted by canonical code."""
    groups: dict[str, dict] = {}
    for m in masks.tolist():
        G = from_edge_mask(n, m)
        code = _code(G)
        entry = groups.get(code)
        if entry is None:
            entry = {"code": code, "graph6": to_graph6(G), "labeled_count": 0}
            if detail is not None:
                entry.update(detail(m))
            groups[code] = entry
        entry["labeled_count"] += 1
    return [groups[c] for c in sorted(groups)]


def _codes(n: int, masks: np.ndarray) -> list[str]:
    return [f["code"] for f in _findings(n, masks)]


def kn_min_sweep(n: int, workers: int = 1) -> SweepReport:
    """avd(G) >= avd(K_n) over all labeled graphs, with equality only at K_n."""
    if not 1 <= n <= 7:
        raise GuardExceeded(f"K_n sweep needs 1 <= n <= 7, got {n}")
    t0 = time.perf_counter()
    d1, dp1 = labeled_evals(n, workers)
    ek = eval_pair(complete_poly(n))
    # avd(G) vs avd(K_n) by cross-multiplication
    cmp = dp1 * ek.d1 - ek.dp1 * d1
    full = labeled_graph_count(n) - 1
    idx = np.arange(d1.size)
    rep = SweepReport("labeled-graphs", n, total=int(d1.size))
    rep.equality_cases = _codes(n, idx[cmp == 0])
    rep.violations = _codes(n, idx[(cmp <= 0) & (idx != full)])
    rep.elapsed_ms = _ms(t0)
    return rep


EDGE_MODES = ("any-edge", "non-pendant-edge")


def edge_removal_sweep(n: int, mode: str = "any-edge", workers: int = 1) -> ConjectureReport:
    """Graphs where no (non-pendant) edge deletion strictly raises avd.

    any-edge: every labeled graph with at least one edge is tested.
    non-pendant-edge: graphs with a non-pendant edge are tested, which are
    exactly the graphs that are not disjoint unions of stars and isolated
    vertices.
    """
    if mode not in EDGE_MODES:
        raise ValueError(f"mode must be one of {EDGE_MODES}")
    if not 2 <= n <= 7:
        raise GuardExceeded(f"edge removal sweep needs 2 <= n <= 7, got {n}")
    t0 = time.perf_counter()
    d1, dp1 = labeled_evals(n, workers)
    total = d1.size
    _, deg = neighbourhoods(n, 0, total)
    g = np.arange(total, dtype=np.int64)
    eligible = np.zeros(total, dtype=bool)
    witness = np.zeros(total, dtype=bool)
    for bit, (i, j) in enumerate(edge_pairs(n)):
        has = ((g >> bit) & 1).astype(bool)
        if mode == "non-pendant-edge":
            has &= (deg[i] > 1) & (deg[j] > 1)
        h = g ^ (1 << bit)
        # avd(G - e) > avd(G)
        better = dp1[h] * d1 > dp1 * d1[h]
        eligible |= has
        witness |= has & better
    bad = g[eligible & ~witness]

    def detail(m: int) -> dict:
        return {"avd": rational_to_json(Fraction(int(dp1[m]), int(d1[m])))}

    rep = ConjectureReport(n, mode, tested=int(eligible.sum()))
    rep.counterexamples = _findings(n, bad, detail)
    rep.elapsed_ms = _ms(t0)
    return rep


def _bound_chunk(n: int, lo: int, hi: int) -> tuple[int, np.ndarray, np.ndarray]:
    d1, dp1 = eval_table(n, lo, hi)
    _, deg = neighbourhoods(n, lo, hi)
    ok = (deg > 0).all(axis=0)
    lhs, rhs = 3 * dp1, 2 * n * d1
    g = np.arange(lo, hi, dtype=np.int64)
    return int(ok.sum()), g[ok & (lhs == rhs)], g[ok & (lhs > rhs)]


def general_bound_sweep(n: int, workers: int = 1, allow_long: bool = False) -> SweepReport:
    """3 D'(1) <= 2n D(1) over labeled graphs of order n without isolated vertices."""
    top = 8 if allow_long else 7
    if not 2 <= n <= top:
        raise GuardExceeded(
            f"general bound sweep needs 2 <= n <= 7 (8 with the long-running flag), got {n}"
        )
    t0 = time.perf_counter()
    parts = _pmap(_bound_chunk, [(n, lo, hi) for lo, hi in chunks(n)], workers)
    rep = SweepReport("labeled-graphs-no-isolated", n)
    rep.total = sum(p[0] for p in parts)
    rep.equality_cases = _codes(n, np.concatenate([p[1] for p in parts]))
    rep.violations = _codes(n, np.concatenate([p[2] for p in parts]))
    rep.elapsed_ms = _ms(t0)
    return rep

