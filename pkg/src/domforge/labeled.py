"""Vectorised domination counts over every labeled graph of a small order.

Graph ``g`` is the labeled graph whose edge set is the bitmask ``g`` (pair
order as in :func:`domforge.graph.edge_pairs`).  Closed neighbourhoods are
built as uint8 columns, one entry per graph, and the subset-union cover is
accumulated by a depth-first walk over vertex subsets, so each subset costs
one vectorised OR and one comparison across the whole chunk.
"""

from __future__ import annotations

import numpy as np

from .enumerate import LABELED_GUARD, labeled_graph_count
from .errors import GuardExceeded
from .graph import edge_pairs

CHUNK = 1 << 18


def _check(n: int) -> None:
    if not 1 <= n <= LABELED_GUARD:
        raise GuardExceeded(f"labeled tables support 1 <= n <= {LABELED_GUARD}, got {n}")


def neighbourhoods(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """Closed-neighbourhood masks (n, count) and degrees (n, count) for masks in [start, stop)."""
    _check(n)
    g = np.arange(start, stop, dtype=np.int64)
    nb = np.zeros((n, g.size), dtype=np.uint8)
    for v in range(n):
        nb[v] = 1 << v
    for bit, (i, j) in enumerate(edge_pairs(n)):
        b = ((g >> bit) & 1).astype(np.uint8)
        nb[i] |= b << j
        nb[j] |= b << i
    deg = np.bitwise_count(nb).astype(np.int8) - 1
    return nb, deg


def poly_table(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Coefficient table of shape (n + 1, count); column g holds D of graph start + g."""
    _check(n)
    stop = labeled_graph_count(n) if stop is None else stop
    nb, _ = neighbourhoods(n, start, stop)
    full = (1 << n) - 1
    coeffs = np.zeros((n + 1, stop - start), dtype=np.int64)

    def walk(first: int, cover: np.ndarray, size: int) -> None:
        coeffs[size] += cover == full
        for v in range(first, n):
            walk(v + 1, cover | nb[v], size + 1)

    walk(0, np.zeros(stop - start, dtype=np.uint8), 0)
    return coeffs


def eval_table(n: int, start: int = 0, stop: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(D(1), D'(1)) for each labeled graph with mask in [start, stop)."""
    coeffs = poly_table(n, start, stop)
    k = np.arange(n + 1, dtype=np.int64)[:, None]
    return coeffs.sum(axis=0), (k * coeffs).sum(axis=0)


def chunks(n: int, chunk: int = CHUNK) -> list[tuple[int, int]]:
    total = labeled_graph_count(n)
    return [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
