from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from domforge.graph import Graph, from_edge_list, from_edge_mask


def naive_counts(G: Graph, avoid=(), must=None) -> list[int]:
    """Dominating-set counts by size, from plain set arithmetic.

    Deliberately shares nothing with the package's subset engines.
    """
    n = G.order
    closed = [{v} | {w for w in range(n) if G.has_edge(v, w)} for v in range(n)]
    avoid = set(avoid)
    counts = [0] * (n + 1)
    everything = set(range(n))
    for k in range(n + 1):
        for S in combinations(range(n), k):
            if avoid & set(S):
                continue
            if must is not None and must not in S:
                continue
            covered = set().union(*(closed[v] for v in S)) if S else set()
            if covered == everything:
                counts[k] += 1
    return counts


def strip(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def brute_isomorphic(G: Graph, H: Graph) -> bool:
    if G.order != H.order or G.size != H.size:
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    edges = G.edges()
    for perm in permutations(range(G.order)):
        if all(H.has_edge(perm[u], perm[v]) for u, v in edges):
            return True
    return False


@pytest.fixture
def named():
    return {
        "K1": from_edge_list(1, []),
        "K2": from_edge_list(2, [(0, 1)]),
        "P3": from_edge_list(3, [(0, 1), (1, 2)]),
        "P4": from_edge_list(4, [(0, 1), (1, 2), (2, 3)]),
        "P5": from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
        "K13": from_edge_list(4, [(0, 1), (0, 2), (0, 3)]),
        "K3": from_edge_list(3, [(0, 1), (0, 2), (1, 2)]),
        "empty0": from_edge_list(0, []),
        "empty3": from_edge_list(3, []),
    }


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return from_edge_mask(n, mask)


@st.composite
def trees_st(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return from_edge_list(n, [(p, v + 1) for v, p in enumerate(parents)])
