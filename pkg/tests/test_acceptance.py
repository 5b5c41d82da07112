"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -s`` to see the one-line verdicts.
Each test also fails normally, so ``pytest -v`` shows the same pass/fail.
"""

import random
import time
from fractions import Fraction

import pytest

from domforge.dompoly import DomPolynomial, PolyCache, avd, brute_force, compute, default_cache, eval_pair, star_poly
from domforge.enumerate import _trees_with_codes, forests_no_isolated, trees
from domforge.graph import empty_graph, from_edge_list, from_edge_mask, star_graph
from domforge.reports import dumps
from domforge.verify import (
    edge_removal_sweep,
    general_bound_sweep,
    glue_suite,
    kn_min_sweep,
    recur_suite,
    star_min_sweep,
    support_suite,
    sweep_forests,
    three_item_suite,
)


def verdict(number: int, name: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
    good = ok and elapsed < limit
    tail = f" ({detail})" if detail else ""
    print(f"\ncriterion {number:2d} {name}: {'PASS' if good else 'FAIL'} in {elapsed:.1f}s, limit {limit:.0f}s{tail}")
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.1f}s"


@pytest.fixture(autouse=True)
def cold_caches():
    # timings are measured from cold caches so no criterion borrows another's work
    default_cache().clear()
    _trees_with_codes.cache_clear()


def test_01_forest_bound_and_equality_sweep():
    t0 = time.perf_counter()
    reps = sweep_forests(13)
    dt = time.perf_counter() - t0
    bad = [(r.n, r.violations, r.mismatches) for r in reps if not r.passed]
    total = sum(r.total for r in reps)
    verdict(1, "forest bound, 2 <= n <= 13", not bad and len(reps) == 12, dt, 60, f"{total} forests, bad={bad}")


def test_02_star_closed_form():
    t0 = time.perf_counter()
    wrong = []
    for n in range(2, 65):
        e = eval_pair(star_poly(n - 1))
        expected = Fraction(n - 1 + 2 ** (n - 2) * (n + 1), 2 ** (n - 1) + 1)
        if Fraction(e.dp1, e.d1) != expected:
            wrong.append(n)
    dt = time.perf_counter() - t0
    verdict(2, "star avd closed form, 2 <= n <= 64", not wrong, dt, 1, f"wrong at {wrong}" if wrong else "")


def test_03_star_minimality():
    t0 = time.perf_counter()
    reps = star_min_sweep(12)
    dt = time.perf_counter() - t0
    bad = [(r.n, r.violations) for r in reps if r.violations]
    verdict(3, "star minimality over trees, n <= 12", not bad, dt, 60, f"counterexamples={bad}")


def test_04_oracle_equivalence():
    t0 = time.perf_counter()
    checked, wrong = 0, []
    family = [T for n in range(1, 13) for T in trees(n)]
    family += [F for n in range(2, 11) for F in forests_no_isolated(n)]
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 10)
        family.append(from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2)))
    cache = PolyCache()
    for G in family:
        checked += 1
        if compute(G, cache=cache) != brute_force(G):
            wrong.append(G)
    dt = time.perf_counter() - t0
    verdict(4, "compute == brute force", not wrong, dt, 120, f"{checked} graphs, {len(wrong)} differ")


def test_05_lemma_suites():
    t0 = time.perf_counter()
    suites = [
        recur_suite(max_tree_n=9, max_labeled_n=6),
        glue_suite(max_n=7, max_k=4),
        support_suite(max_n=10),
        three_item_suite(max_n=10),
    ]
    dt = time.perf_counter() - t0
    failures = {s["suite"]: len(s["failures"]) for s in suites if s["failures"]}
    checked = sum(s["checked"] for s in suites)
    verdict(5, "identity and lemma suites", not failures and checked > 0, dt, 300,
            f"{checked} checks, failures={failures}")


def test_06_edge_removal_any_edge():
    t0 = time.perf_counter()
    reps = [edge_removal_sweep(n, "any-edge") for n in range(2, 8)]
    dt = time.perf_counter() - t0
    bad = {r.n: len(r.counterexamples) for r in reps if r.counterexamples}
    tested = sum(r.tested for r in reps)
    verdict(6, "edge removal raises avd, n <= 7", not bad, dt, 600, f"{tested} labeled graphs, bad={bad}")


def test_07_general_bound():
    t0 = time.perf_counter()
    reps = [general_bound_sweep(n) for n in range(2, 8)]
    dt = time.perf_counter() - t0
    bad = {r.n: r.violations for r in reps if r.violations}
    verdict(7, "general bound without isolated vertices, n <= 7", not bad, dt, 300, f"bad={bad}")


def test_08_complete_graph_minimum():
    t0 = time.perf_counter()
    reps = [kn_min_sweep(n) for n in range(1, 8)]
    dt = time.perf_counter() - t0
    unique = all(len(r.equality_cases) == 1 for r in reps)
    bad = {r.n: r.violations for r in reps if r.violations}
    verdict(8, "complete graph is the unique minimum, n <= 7", unique and not bad, dt, 600, f"bad={bad}")


def test_09_spot_values():
    t0 = time.perf_counter()
    P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    checks = {
        "K2": avd(from_edge_list(2, [(0, 1)])) == Fraction(4, 3),
        "K12": avd(star_graph(2)) == 2,
        "empty": all(avd(empty_graph(n)) == n for n in range(1, 7)),
        "P4 poly": compute(P4) == DomPolynomial.of(0, 0, 4, 4, 1),
        "P4 avd": avd(P4) == Fraction(8, 3),
    }
    dt = time.perf_counter() - t0
    wrong = [k for k, v in checks.items() if not v]
    verdict(9, "spot values", not wrong, dt, 10, f"wrong={wrong}" if wrong else "")


@pytest.fixture(scope="module")
def sweep_outputs():
    out = {}
    for w in (1, 2, 8):
        payload = {
            "forests": [r.to_dict(timing=False) for r in sweep_forests(10, workers=w)],
            "general": general_bound_sweep(6, workers=w).to_dict(timing=False),
            "edges": edge_removal_sweep(6, "any-edge", workers=w).to_dict(timing=False),
            "nonpendant": edge_removal_sweep(6, "non-pendant-edge", workers=w).to_dict(timing=False),
            "kn": kn_min_sweep(6, workers=w).to_dict(timing=False),
        }
        out[w] = dumps(payload).encode()
    return out


def test_10_determinism_across_workers(sweep_outputs):
    t0 = time.perf_counter()
    same = sweep_outputs[1] == sweep_outputs[2] == sweep_outputs[8]
    dt = time.perf_counter() - t0
    verdict(10, "reports byte-identical for 1, 2, 8 workers", same, dt, 10,
            f"{len(sweep_outputs[1])} bytes each")
