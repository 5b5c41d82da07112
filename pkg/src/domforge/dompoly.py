"""Domination polynomials, their evaluations at 1, and the average order avd.

Two independent engines live here: :func:`brute_force`, which enumerates
every vertex subset, and :func:`compute`, which factors over components,
runs a three-state dynamic program on tree components and falls back to the
nested-neighbourhood recurrence (then to brute force) on everything else.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .canon import GENERAL_GUARD, canonical_code
from .errors import GuardExceeded
from .graph import (
    Graph,
    _bits,
    component_masks,
    contract,
    induced_on_mask,
    is_forest,
    nested_pairs,
)

BRUTE_GUARD = 25


@dataclass(frozen=True)
class DomPolynomial:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of x**k.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and equality is structural.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coeffs
        if not isinstance(c, tuple):
            c = tuple(c)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c[:end]))

    @classmethod
    def of(cls, *coeffs: int) -> "DomPolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "DomPolynomial") -> "DomPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return DomPolynomial(tuple(out))

    def __neg__(self) -> "DomPolynomial":
        return DomPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "DomPolynomial") -> "DomPolynomial":
        return self + (-other)

    def __mul__(self, other: "DomPolynomial | int") -> "DomPolynomial":
        if isinstance(other, int):
            return DomPolynomial(tuple(other * a for a in self.coeffs))
        return DomPolynomial(tuple(convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "DomPolynomial":
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int = 1) -> "DomPolynomial":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return DomPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "DomPolynomial":
        return DomPolynomial(tuple(k * a for k, a in enumerate(self.coeffs))[1:])

    def lowest_index(self) -> int:
        for k, a in enumerate(self.coeffs):
            if a:
                return k
        raise ValueError("zero polynomial has no nonzero coefficient")

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(str(a))
            elif a == 1:
                terms.append(mono)
            else:
                terms.append(f"{a}{mono}")
        return " + ".join(terms) if terms else "0"


ONE = DomPolynomial((1,))
X = DomPolynomial((0, 1))
ONE_PLUS_X = DomPolynomial((1, 1))


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class EvalPair:
    d1: int
    dp1: int


def eval_pair(P: DomPolynomial) -> EvalPair:
    return EvalPair(sum(P.coeffs), sum(k * a for k, a in enumerate(P.coeffs)))


# ---------------------------------------------------------------------------
# brute force


def _check_guard(G: Graph, guard: int) -> None:
    if G.order > guard:
        raise GuardExceeded(
            f"brute force over 2^{G.order} subsets exceeds the guard ({guard}); use compute()"
        )


def _covers(G: Graph) -> np.ndarray:
    """covers[S] = union of closed neighbourhoods of the vertices in S."""
    if G.order > 63:
        raise GuardExceeded("subset enumeration supports at most 63 vertices")
    dtype = np.uint32 if G.order <= 32 else np.uint64
    cover = np.zeros(1, dtype=dtype)
    for v in range(G.order):
        cover = np.concatenate([cover, cover | dtype(G.closed_mask(v))])
    return cover


def _subset_sizes(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.uint32)
    return np.bitwise_count(idx).astype(np.int64)


def brute_force(G: Graph, guard: int = BRUTE_GUARD) -> DomPolynomial:
    """Count dominating sets of every size by checking all 2^n subsets."""
    _check_guard(G, guard)
    n = G.order
    cover = _covers(G)
    dom = cover == G.full_mask
    counts = np.bincount(_subset_sizes(n)[dom], minlength=n + 1)
    return DomPolynomial(tuple(int(c) for c in counts))


def count_dominating_avoiding(G: Graph, avoid: Iterable[int], guard: int = BRUTE_GUARD) -> int:
    """Number of dominating sets of G disjoint from ``avoid``."""
    _check_guard(G, guard)
    mask = 0
    for v in avoid:
        G._check_vertex(v)
        mask |= 1 << v
    cover = _covers(G)
    idx = np.arange(1 << G.order, dtype=np.int64)
    ok = (cover == G.full_mask) & ((idx & mask) == 0)
    return int(ok.sum())


def split_by_vertex(G: Graph, u: int, guard: int = BRUTE_GUARD) -> tuple[DomPolynomial, DomPolynomial]:
    """(sets containing u, sets avoiding u), both as size-generating polynomials."""
    _check_guard(G, guard)
    G._check_vertex(u)
    n = G.order
    cover = _covers(G)
    sizes = _subset_sizes(n)
    dom = cover == G.full_mask
    has_u = ((np.arange(1 << n, dtype=np.int64) >> u) & 1).astype(bool)
    inc = np.bincount(sizes[dom & has_u], minlength=n + 1)
    exc = np.bincount(sizes[dom & ~has_u], minlength=n + 1)
    return DomPolynomial(tuple(int(c) for c in inc)), DomPolynomial(tuple(int(c) for c in exc))


# ---------------------------------------------------------------------------
# closed forms


def star_poly(k: int) -> DomPolynomial:
    """D of K_{1,k}: x(1+x)^k + x^k, or x for K_1."""
    if k < 0:
        raise ValueError("star needs k >= 0")
    if k == 0:
        return X
    return (ONE_PLUS_X**k).shift(1) + ONE.shift(k)


def complete_poly(n: int) -> DomPolynomial:
    """D of K_n: (1+x)^n - 1."""
    return ONE_PLUS_X**n - ONE


# ---------------------------------------------------------------------------
# scalable engine


def tree_poly(G: Graph) -> DomPolynomial:
    """Domination polynomial of a tree by a three-state DP rooted at vertex 0.

    States per vertex: in the set; outside and dominated by a child; outside
    and still waiting for its parent.
    """
    n = G.order
    if n == 0:
        return ONE
    parent = [-1] * n
    order = [0]
    seen = 1
    for v in order:
        for w in _bits(G.adj[v] & ~seen):
            parent[w] = v
            seen |= 1 << w
            order.append(w)
    if len(order) != n:
        raise ValueError("tree_poly needs a connected graph")
    inset: list[list[int]] = [[]] * n
    covered: list[list[int]] = [[]] * n
    waiting: list[list[int]] = [[]] * n
    for v in reversed(order):
        any_state = [1]
        not_waiting = [1]
        child_covered = [1]
        for w in _bits(G.adj[v]):
            if w == parent[v]:
                continue
            a, b, c = inset[w], covered[w], waiting[w]
            any_state = convolve(any_state, _padd(_padd(a, b), c))
            not_waiting = convolve(not_waiting, _padd(a, b))
            child_covered = convolve(child_covered, b)
        inset[v] = [0] + any_state
        waiting[v] = child_covered
        covered[v] = _psub(not_waiting, child_covered)
    return DomPolynomial(tuple(_padd(inset[0], covered[0])))


def _padd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _psub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return out


class PolyCache:
    """Thread-safe LRU cache of component polynomials."""

    def __init__(self, maxsize: int = 10**6) -> None:
        self.maxsize = maxsize
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        with self._lock:
            val = self._data.get(key)
            if val is None:
                self.misses += 1
                return None
            self._data.move_to_end(key)
            self.hits += 1
            return val

    def put(self, key, val) -> None:
        with self._lock:
            self._data[key] = val
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._data)


_default_cache = PolyCache()


def default_cache() -> PolyCache:
    return _default_cache


def compute(G: Graph, guard: int = BRUTE_GUARD, cache: PolyCache | None = None) -> DomPolynomial:
    """Exact domination polynomial of any simple graph."""
    if cache is None:
        cache = _default_cache
    masks = component_masks(G)
    if len(masks) == 1:
        return _component_poly(G, guard, cache)
    out = ONE
    for m in masks:
        H = induced_on_mask(G, m)[0]
        out = out * _component_poly(H, guard, cache)
    return out


def _component_poly(H: Graph, guard: int, cache: PolyCache) -> DomPolynomial:
    if H.order == 1:
        return X
    # exact labeled key first; the canonical key catches relabeled repeats
    labeled = (H.order, H.adj)
    hit = cache.get(labeled)
    if hit is not None:
        return hit
    if is_forest(H):
        P = tree_poly(H)
        cache.put(labeled, P)
        return P
    key = canonical_code(H) if H.order <= GENERAL_GUARD else labeled
    hit = cache.get(key)
    if hit is not None:
        cache.put(labeled, hit)
        return hit
    pairs = nested_pairs(H)
    if pairs:
        u, _ = pairs[0]
        rest = H.full_mask & ~(1 << u)
        without_u = induced_on_mask(H, rest)[0]
        without_nbhd = induced_on_mask(H, H.full_mask & ~H.closed_mask(u))[0]
        P = (
            compute(contract(H, u), guard, cache).shift(1)
            + compute(without_u, guard, cache)
            + compute(without_nbhd, guard, cache).shift(1)
        )
    elif H.order <= guard:
        P = brute_force(H, guard)
    else:
        raise GuardExceeded(
            f"component of order {H.order} is not a forest, has no nested closed "
            f"neighbourhoods, and exceeds the brute-force guard {guard}"
        )
    cache.put(key, P)
    cache.put(labeled, P)
    return P


def avd(G: Graph, guard: int = BRUTE_GUARD) -> Fraction:
    e = eval_pair(compute(G, guard))
    return Fraction(e.dp1, e.d1)


def avd_of(P: DomPolynomial) -> Fraction:
    e = eval_pair(P)
    return Fraction(e.dp1, e.d1)


def gamma(G: Graph, guard: int = BRUTE_GUARD) -> int:
    return compute(G, guard).lowest_index()


def star_avd_closed_form(n: int) -> Fraction:
    """avd(K_{1,n-1}) = (n-1 + 2^(n-2)(n+1)) / (2^(n-1) + 1), n >= 2."""
    return Fraction(n - 1 + 2 ** (n - 2) * (n + 1), 2 ** (n - 1) + 1)
