"""Text formats: edge lists, graph6, and JSON forms of polynomials and rationals."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .dompoly import DomPolynomial
from .errors import GraphError
from .graph import Graph, edge_pairs, from_edge_list


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    """Parse ``n m`` followed by m ``u v`` lines; ``#`` comments and blank lines ignored."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError(f"{source}: empty input, expected header 'n m'")
    lineno, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise GraphError(f"{source}:{lineno}: header must be two integers 'n m'") from None
    body = rows[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else lineno
        raise GraphError(f"{source}:{line}: header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, toks in body:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise GraphError(f"{source}:{lineno}: expected two vertex ids, got {' '.join(toks)!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"{source}:{lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"{source}:{lineno}: self-loop at {u}")
        edges.append((u, v))
    return from_edge_list(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphError(f"{path}: cannot read ({exc.strerror})") from None
    return parse_edge_list(text, str(path))


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "\n".join([f"{G.order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def from_graph6(s: str) -> Graph:
    """Decode a graph6 string (orders up to 62)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d < 64 for d in data):
        raise GraphError(f"graph6 string {s!r} contains characters outside '?'..'~'")
    n = data[0]
    if n == 63:
        raise GraphError("graph6 orders above 62 are not supported")
    pairs = edge_pairs(n)
    need = (len(pairs) + 5) // 6
    if len(data) - 1 != need:
        raise GraphError(f"graph6 string {s!r} has {len(data) - 1} data bytes, expected {need}")
    edges = []
    for k, (i, j) in enumerate(pairs):
        if data[1 + k // 6] >> (5 - k % 6) & 1:
            edges.append((i, j))
    return from_edge_list(n, edges)


def to_graph6(G: Graph) -> str:
    if G.order > 62:
        raise GraphError("graph6 orders above 62 are not supported")
    pairs = edge_pairs(G.order)
    data = [0] * ((len(pairs) + 5) // 6)
    for k, (i, j) in enumerate(pairs):
        if G.has_edge(i, j):
            data[k // 6] |= 1 << (5 - k % 6)
    return chr(G.order + 63) + "".join(chr(d + 63) for d in data)


def iter_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                yield from_graph6(line)
            except GraphError as exc:
                raise GraphError(f"{path}:{lineno}: {exc}") from None


def poly_to_json(P: DomPolynomial, order: int | None = None) -> list[str]:
    """Decimal coefficient strings, index = set size; padded to ``order + 1`` if given."""
    coeffs = list(P.coeffs)
    if order is not None and len(coeffs) < order + 1:
        coeffs += [0] * (order + 1 - len(coeffs))
    return [str(c) for c in coeffs]


def poly_from_json(items: Iterable[str | int]) -> DomPolynomial:
    return DomPolynomial(tuple(int(c) for c in items))


def rational_to_json(q: Fraction) -> dict[str, str]:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
