"""Finite simple undirected graphs and the surgeries used by the domination formulas.

Adjacency is stored as one Python integer bitmask per vertex, so the same
representation serves graphs of every order.  All operations return new
graphs; a :class:`Graph` is never mutated after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphError


_BYTE_BITS = tuple(tuple(i for i in range(8) if m >> i & 1) for m in range(256))


def _bits(mask: int) -> Iterator[int] | tuple[int, ...]:
    """Indices of the set bits of ``mask`` in increasing order."""
    if mask < 256:
        return _BYTE_BITS[mask]
    return _bits_wide(mask)


def _bits_wide(mask: int) -> Iterator[int]:
    base = 0
    while mask:
        byte = mask & 255
        for i in _BYTE_BITS[byte]:
            yield base + i
        mask >>= 8
        base += 8


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0 or len(self.adj) != self.order:
            raise GraphError("adjacency length must equal the order")
        full = (1 << self.order) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in _bits(nb):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def _trusted(cls, order: int, adj: tuple[int, ...]) -> "Graph":
        """Construct without validation; for surgeries that preserve the invariants."""
        G = object.__new__(cls)
        object.__setattr__(G, "order", order)
        object.__setattr__(G, "adj", adj)
        return G

    # basic queries

    @property
    def n(self) -> int:
        return self.order

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range for graph of order {self.order}")

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError("order must be nonnegative")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with the center at vertex 0."""
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(nb << offset for nb in g.adj)
        offset += g.order
    return Graph(offset, tuple(adj))


def _mask_of(G: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        G._check_vertex(v)
        mask |= 1 << v
    return mask


def induced_on_mask(G: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices in ``keep``, relabeled in increasing order."""
    kept = list(_bits(keep))
    relabel = {old: new for new, old in enumerate(kept)}
    adj = []
    for old in kept:
        nb = 0
        for w in _bits(G.adj[old] & keep):
            nb |= 1 << relabel[w]
        adj.append(nb)
    return Graph._trusted(len(kept), tuple(adj)), relabel


def delete_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G \\ S, with surviving vertices renumbered 0.. in their original order.

    Returns the graph and the map from old to new vertex ids.
    """
    removed = _mask_of(G, S)
    return induced_on_mask(G, G.full_mask & ~removed)


def remove_vertices(G: Graph, S: Iterable[int]) -> Graph:
    return delete_vertices(G, S)[0]


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.order, tuple(adj))


def contract(G: Graph, u: int) -> Graph:
    """G/u: delete u and join every pair of its former neighbors."""
    G._check_vertex(u)
    nb = G.adj[u]
    adj = list(G.adj)
    for w in _bits(nb):
        adj[w] |= nb & ~(1 << w)
    return induced_on_mask(Graph._trusted(G.order, tuple(adj)), G.full_mask & ~(1 << u))[0]


def glue_clique(G: Graph, u: int, k: int) -> Graph:
    """G_(u,k): glue a copy of K_{k+1} onto G at vertex u.

    The k new vertices take ids n..n+k-1.
    """
    G._check_vertex(u)
    if k < 1:
        raise GraphError("clique gluing needs k >= 1")
    n = G.order
    new = ((1 << k) - 1) << n
    adj = list(G.adj) + [0] * k
    adj[u] |= new
    for i in range(n, n + k):
        adj[i] = (new | (1 << u)) & ~(1 << i)
    return Graph(n + k, tuple(adj))


def attach_leaves(G: Graph, counts: Sequence[int]) -> Graph:
    """Hang counts[i] new pendant vertices on vertex i."""
    if len(counts) != G.order:
        raise GraphError(f"expected {G.order} leaf counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise GraphError("leaf counts must be nonnegative")
    adj = list(G.adj)
    nxt = G.order
    for host, c in enumerate(counts):
        for _ in range(c):
            adj[host] |= 1 << nxt
            adj.append(1 << host)
            nxt += 1
    return Graph(nxt, tuple(adj))


def component_masks(G: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(G.order):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= G.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def components(G: Graph) -> list[tuple[Graph, dict[int, int]]]:
    return [induced_on_mask(G, m) for m in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return len(component_masks(G)) <= 1


def is_forest(G: Graph) -> bool:
    # acyclic iff |E| = n - c
    return G.size == G.order - len(component_masks(G))


def is_tree(G: Graph) -> bool:
    return G.order >= 1 and is_connected(G) and is_forest(G)


def has_isolated(G: Graph) -> bool:
    return any(nb == 0 for nb in G.adj)


@dataclass(frozen=True)
class VertexClass:
    is_leaf: bool
    is_isolated: bool
    is_support: bool
    leaf_neighbor_count: int


def leaf_mask(G: Graph) -> int:
    mask = 0
    for v, nb in enumerate(G.adj):
        if nb.bit_count() == 1:
            mask |= 1 << v
    return mask


def leaf_neighbors(G: Graph, v: int) -> tuple[int, ...]:
    """L_G(v)."""
    return tuple(_bits(G.adj[v] & leaf_mask(G)))


def classify(G: Graph) -> list[VertexClass]:
    leaves = leaf_mask(G)
    out = []
    for v, nb in enumerate(G.adj):
        cnt = (nb & leaves).bit_count()
        out.append(VertexClass(nb.bit_count() == 1, nb == 0, cnt > 0, cnt))
    return out


def is_support(G: Graph, v: int) -> bool:
    return bool(G.adj[v] & leaf_mask(G))


def is_extremal_shape(G: Graph) -> bool:
    """Every non-leaf vertex supports exactly one or two leaves."""
    return all(c.is_leaf or c.leaf_neighbor_count in (1, 2) for c in classify(G))


def is_star(G: Graph) -> bool:
    """K_{1,m} with m >= 1 (K_2 included)."""
    if G.order < 2 or not is_connected(G):
        return False
    return sum(1 for d in G.degrees() if d != 1) <= 1 and G.size == G.order - 1


def is_union_of_stars_or_empty(G: Graph) -> bool:
    """Every component is K_1 or a star K_{1,m}."""
    return all(h.order == 1 or is_star(h) for h, _ in components(G))


def closed_nbhd_nested(G: Graph, v: int, u: int) -> bool:
    """N[v] is a subset of N[u]."""
    return G.closed_mask(v) & ~G.closed_mask(u) == 0


def nested_pairs(G: Graph) -> list[tuple[int, int]]:
    """Ordered pairs (u, v), u != v, with N[v] contained in N[u]."""
    return [
        (u, v)
        for u in range(G.order)
        for v in range(G.order)
        if u != v and closed_nbhd_nested(G, v, u)
    ]


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    if sorted(perm) != list(range(G.order)):
        raise GraphError("not a permutation of the vertex set")
    adj = [0] * G.order
    for v, nb in enumerate(G.adj):
        m = 0
        for w in _bits(nb):
            m |= 1 << perm[w]
        adj[perm[v]] = m
    return Graph(G.order, tuple(adj))


def from_edge_mask(n: int, mask: int) -> Graph:
    """Labeled graph whose edges are the set bits of ``mask`` over pairs in
    (0,1), (0,2), (1,2), (0,3), ... order (column-major upper triangle)."""
    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Pair order used by :func:`from_edge_mask`."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def to_edge_mask(G: Graph) -> int:
    mask = 0
    for bit, (i, j) in enumerate(edge_pairs(G.order)):
        if G.has_edge(i, j):
            mask |= 1 << bit
    return mask
