import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, naive_counts, strip, trees_st
from domforge.dompoly import (
    DomPolynomial,
    PolyCache,
    avd,
    brute_force,
    complete_poly,
    compute,
    count_dominating_avoiding,
    eval_pair,
    gamma,
    split_by_vertex,
    star_avd_closed_form,
    star_poly,
    tree_poly,
)
from domforge.errors import GuardExceeded
from domforge.graph import (
    attach_leaves,
    complete_graph,
    components,
    contract,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_edge_mask,
    path_graph,
    remove_edge,
    remove_vertices,
    star_graph,
)

P = DomPolynomial.of


def test_polynomial_arithmetic():
    a, b = P(0, 2, 1), P(0, 1, 3, 1)
    assert (a * b).coeffs == (0, 0, 2, 7, 5, 1)
    assert (a + b).coeffs == (0, 3, 4, 1)
    assert (a - a).coeffs == ()
    assert a.shift(2).coeffs == (0, 0, 0, 2, 1)
    assert P(1, 1) ** 3 == P(1, 3, 3, 1)
    assert b(1) == 5 and b.derivative()(1) == 1 + 6 + 3
    assert str(P(0, 1, 3, 1)) == "x + 3x^2 + x^3"


def test_brute_force_examples(named):
    assert brute_force(named["K2"]) == P(0, 2, 1)
    assert brute_force(named["P3"]) == P(0, 1, 3, 1)
    assert brute_force(named["P4"]) == P(0, 0, 4, 4, 1)
    assert brute_force(named["empty0"]) == P(1)


def test_brute_force_guard():
    with pytest.raises(GuardExceeded):
        brute_force(path_graph(26))
    assert brute_force(path_graph(26), guard=26).lowest_index() == 9


def test_star_poly():
    assert star_poly(0) == P(0, 1)
    assert star_poly(1) == brute_force(star_graph(1))
    assert star_poly(2) == brute_force(star_graph(2))
    e = eval_pair(star_poly(3))
    assert (e.d1, e.dp1) == (9, 23)
    assert Fraction(23, 9) == star_avd_closed_form(4)


def test_compute_examples(named):
    assert compute(named["P3"]) == P(0, 1, 3, 1)
    # nested-neighbourhood step on P3 at the centre, by hand: x[(x^2+2x) + x + 1]
    assert (P(0, 2, 1) + P(0, 1) + P(1)).shift(1) == P(0, 1, 3, 1)
    G = disjoint_union(named["K2"], named["P3"])
    assert compute(G) == P(0, 2, 1) * P(0, 1, 3, 1)
    assert compute(G) == brute_force(G)


def test_long_path_gamma():
    for n in range(1, 13):
        assert gamma(path_graph(n)) == -(-n // 3) == brute_force(path_graph(n)).lowest_index()
    D = compute(path_graph(200))
    assert D.degree == 200 and D[200] == 1
    assert D.lowest_index() == 67


def test_compute_guard_message():
    # 4-regular circulant: no nested neighbourhoods, too big to brute force
    n = 26
    edges = [(i, (i + d) % n) for i in range(n) for d in (1, 5)]
    G = from_edge_list(n, edges)
    with pytest.raises(GuardExceeded, match="order 26"):
        compute(G)


def test_eval_pair():
    e = eval_pair(P(0, 0, 4, 4, 1))
    assert (e.d1, e.dp1) == (9, 24)
    e = eval_pair(P(0, 2, 1))
    assert (e.d1, e.dp1) == (3, 4)
    e = eval_pair(P(1))
    assert (e.d1, e.dp1) == (1, 0)


def test_avd_examples(named):
    assert avd(named["K2"]) == Fraction(4, 3)
    assert avd(star_graph(2)) == 2
    assert avd(named["empty3"]) == 3
    assert avd(named["P4"]) == Fraction(8, 3)


def test_gamma_examples(named):
    assert gamma(named["P4"]) == 2
    assert gamma(star_graph(5)) == 1
    assert gamma(named["empty3"]) == 3


def test_count_avoiding(named):
    assert count_dominating_avoiding(named["P3"], []) == 5
    assert count_dominating_avoiding(named["P3"], [0]) == 2
    assert count_dominating_avoiding(named["P3"], [1]) == 1


def test_split_by_vertex(named):
    assert split_by_vertex(named["P3"], 1) == (P(0, 1, 2, 1), P(0, 0, 1))
    assert split_by_vertex(named["K2"], 0) == (P(0, 1, 1), P(0, 1))


def test_split_sum_on_random_graphs():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 10)
        G = from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        inc, exc = split_by_vertex(G, rng.randrange(n))
        assert inc + exc == compute(G)


def test_complete_poly():
    for n in range(1, 7):
        assert complete_poly(n) == brute_force(complete_graph(n))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_brute_force_matches_naive_oracle(G):
    assert brute_force(G).coeffs == strip(naive_counts(G))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_compute_matches_brute_force(G):
    assert compute(G, cache=PolyCache()) == brute_force(G)


@settings(max_examples=100, deadline=None)
@given(trees_st(max_n=14))
def test_tree_dp_matches_brute_force(T):
    assert tree_poly(T) == brute_force(T)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_normalisation(G):
    D = compute(G)
    n = G.order
    assert D[n] == 1 and D.degree == n
    assert D[0] == 0
    assert D.lowest_index() == gamma(G)
    assert 1 <= avd(G) <= n
    e = eval_pair(D)
    assert e.d1 >= 1 and e.dp1 <= n * e.d1


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_product_rule_and_avd_additivity(G):
    parts = [h for h, _ in components(G)]
    prod = P(1)
    total = Fraction(0)
    for h in parts:
        prod = prod * compute(h)
        total += avd(h)
    assert compute(G) == prod
    assert avd(G) == total


def test_leaf_attachment_product():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(1, 6)
        counts = [1] * n
        for _ in range(rng.randint(0, 6 - n)):
            counts[rng.randrange(n)] += 1
        G = from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        expected = P(1)
        for k in counts:
            expected = expected * star_poly(k)
        assert compute(attach_leaves(G, counts)) == expected


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=10), st.randoms())
def test_subgraph_monotonicity(G, rnd):
    d = eval_pair(compute(G)).d1
    H = G
    while H.order:
        if H.size and rnd.random() < 0.5:
            H = remove_edge(H, *rnd.choice(H.edges()))
        else:
            H = remove_vertices(H, [rnd.randrange(H.order)])
        d_next = eval_pair(compute(H)).d1
        assert d_next <= d
        d = d_next


def test_cache_is_speed_only():
    rng = random.Random(11)
    shared = PolyCache()
    for _ in range(100):
        n = rng.randint(3, 9)
        G = from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        assert compute(G, cache=shared) == compute(G, cache=PolyCache(maxsize=2))
    small = PolyCache(maxsize=3)
    compute(contract(complete_graph(6), 0), cache=small)
    assert len(small) <= 3


def test_empty_graph_poly():
    assert compute(empty_graph(0)) == P(1)
    assert compute(empty_graph(4)) == P(0, 0, 0, 0, 1)
