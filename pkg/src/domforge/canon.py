"""Canonical codes: equal codes exactly when the graphs are isomorphic.

Forests get an AHU-style parenthesis code per tree (rooted at its center,
or the smaller of the two rootings for a bicentral tree), with component
codes sorted.  Other graphs get the minimum adjacency encoding reached by an
individualization-refinement search over colour-refined orderings.
"""

from __future__ import annotations

from .errors import GuardExceeded
from .graph import Graph, _bits, component_masks, induced_on_mask, is_forest

GENERAL_GUARD = 10


def _centers(G: Graph) -> list[int]:
    """Center vertex (or the two central vertices) of a tree by leaf peeling."""
    n = G.order
    if n <= 2:
        return list(range(n))
    deg = G.degrees()
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in _bits(G.adj[v]):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(G: Graph, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in _bits(G.adj[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
    kids: dict[int, list[str]] = {v: [] for v in order}
    code = {}
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(kids[v])) + ")"
        if parent[v] >= 0:
            kids[parent[v]].append(code[v])
    return code[root]


def tree_code(G: Graph) -> str:
    return min(_rooted_code(G, c) for c in _centers(G))


def forest_code(G: Graph) -> str:
    parts = sorted(tree_code(induced_on_mask(G, m)[0]) for m in component_masks(G))
    return "F" + "".join(parts)


def _refine(G: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition; colours are ranks of signatures."""
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in _bits(G.adj[v]))))
            for v in range(G.order)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _encode(G: Graph, order: list[int]) -> int:
    code = 0
    bit = 0
    for j in range(1, len(order)):
        row = G.adj[order[j]]
        for i in range(j):
            if row >> order[i] & 1:
                code |= 1 << bit
            bit += 1
    return code


def _twins(G: Graph, v: int, w: int) -> bool:
    pair = (1 << v) | (1 << w)
    return G.adj[v] & ~pair == G.adj[w] & ~pair


def _search(G: Graph, colors: list[int]) -> int:
    n = G.order
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    if len(cells) == n:
        order = sorted(range(n), key=colors.__getitem__)
        return _encode(G, order)
    target = min(c for c, vs in cells.items() if len(vs) > 1)
    best = None
    explored: list[int] = []
    for v in cells[target]:
        # swapping twins is an automorphism fixing the current colouring,
        # so their subtrees yield the same codes
        if any(_twins(G, v, w) for w in explored):
            continue
        explored.append(v)
        individual = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        code = _search(G, _refine(G, individual))
        if best is None or code < best:
            best = code
    return best


def general_code(G: Graph, max_order: int = GENERAL_GUARD) -> str:
    if G.order > max_order:
        raise GuardExceeded(
            f"canonical search on a non-forest of order {G.order} exceeds the guard {max_order}"
        )
    if G.order == 0:
        return "G0:0"
    colors = _refine(G, G.degrees())
    return f"G{G.order}:{_search(G, colors):x}"


def canonical_code(G: Graph, max_order: int = GENERAL_GUARD) -> bytes:
    """ASCII byte string identifying the isomorphism class of G."""
    if is_forest(G):
        return forest_code(G).encode()
    return general_code(G, max_order).encode()
