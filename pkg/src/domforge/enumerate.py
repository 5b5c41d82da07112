"""Generation of trees, forests without isolated vertices, and labeled graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator

from .canon import tree_code
from .errors import GuardExceeded
from .graph import Graph, disjoint_union, from_edge_mask, has_isolated, is_connected

TREE_GUARD = 16
LABELED_GUARD = 8

FAMILIES = ("trees", "forests-no-isolated", "labeled-graphs")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    order: int
    connected: bool = False
    no_isolated: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.order < 1:
            raise ValueError("family order must be positive")

    def stream(self) -> Iterator[Graph]:
        if self.family == "trees":
            src = iter(trees(self.order))
        elif self.family == "forests-no-isolated":
            src = iter(forests_no_isolated(self.order))
        else:
            src = labeled_graphs(self.order)
        for G in src:
            if self.connected and not is_connected(G):
                continue
            if self.no_isolated and has_isolated(G):
                continue
            yield G

    def describe(self) -> dict:
        out: dict = {"family": self.family, "order": self.order}
        filters = [name for name, on in (("connected", self.connected), ("no-isolated", self.no_isolated)) if on]
        if filters:
            out["filters"] = filters
        return out


def _add_leaf(T: Graph, host: int) -> Graph:
    n = T.order
    adj = list(T.adj)
    adj[host] |= 1 << n
    adj.append(1 << host)
    return Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _trees_with_codes(n: int) -> tuple[tuple[str, Graph], ...]:
    if n == 1:
        G = Graph(1, (0,))
        return ((tree_code(G), G),)
    seen: dict[str, Graph] = {}
    for _, T in _trees_with_codes(n - 1):
        for host in range(T.order):
            G = _add_leaf(T, host)
            seen.setdefault(tree_code(G), G)
    return tuple(sorted(seen.items()))


def trees(n: int) -> list[Graph]:
    """One tree per isomorphism class of order n, sorted by canonical code.

    Grown from the order n-1 classes by adding a leaf at every vertex and
    keeping the first representative of each new code.
    """
    if not 1 <= n <= TREE_GUARD:
        raise GuardExceeded(f"tree enumeration supports 1 <= n <= {TREE_GUARD}, got {n}")
    return [G for _, G in _trees_with_codes(n)]


def _partitions(n: int, smallest: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into non-decreasing parts, each at least ``smallest``."""
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def forests_no_isolated(n: int) -> list[Graph]:
    """One forest per isomorphism class of order n with minimum degree >= 1.

    Component sizes follow a partition of n into parts >= 2; components of
    equal size are drawn as non-decreasing indices into the sorted tree list,
    which rules out multiset duplicates.
    """
    if not 2 <= n <= TREE_GUARD:
        raise GuardExceeded(f"forest enumeration supports 2 <= n <= {TREE_GUARD}, got {n}")
    out = []
    for parts in _partitions(n, 2):
        groups: dict[int, int] = {}
        for p in parts:
            groups[p] = groups.get(p, 0) + 1
        choices = [
            list(combinations_with_replacement(range(len(_trees_with_codes(size))), mult))
            for size, mult in sorted(groups.items())
        ]
        sizes = sorted(groups)
        for pick in product(*choices):
            comps = []
            for size, idxs in zip(sizes, pick):
                pool = _trees_with_codes(size)
                comps.extend(pool[i][1] for i in idxs)
            out.append(disjoint_union(*comps))
    return out


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All labeled graphs on n vertices in increasing edge-mask order.

    ``start``/``stop`` select a slice of the mask range for partitioned sweeps.
    """
    if not 1 <= n <= LABELED_GUARD:
        raise GuardExceeded(f"labeled enumeration supports 1 <= n <= {LABELED_GUARD}, got {n}")
    total = labeled_graph_count(n)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield from_edge_mask(n, mask)
