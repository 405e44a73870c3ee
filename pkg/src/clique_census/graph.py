"""Immutable undirected simple graphs over vertex ids 0..n-1.

Adjacency is kept both as frozensets (for iteration) and as Python int
bitmasks (for the counting kernels; arbitrary precision, so there is no
width cap). Vertices are always addressed by id; induced subgraphs relabel
to 0..k-1 preserving the relative order of the surviving ids, which keeps
min-degree tie-breaking consistent between a graph and its subgraphs.
"""

from __future__ import annotations

from array import array
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import GraphParseError

_WORD_MASK = (1 << 64) - 1


class Graph:
    """Undirected simple graph with a fixed vertex count."""

    __slots__ = ("n", "adj", "bits", "_edge_count", "_words")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        neigh: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v not in neigh[u]:
                neigh[u].add(v)
                neigh[v].add(u)
                count += 1
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in neigh)
        bits = []
        for s in neigh:
            m = 0
            for v in s:
                m |= 1 << v
            bits.append(m)
        self.bits: tuple[int, ...] = tuple(bits)
        self._edge_count = count
        self._words: tuple[int, array] | None = None

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return [
            (u, v)
            for u in range(self.n)
            for v in sorted(self.adj[u])
            if u < v
        ]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def packed_words(self) -> tuple[int, array]:
        """Adjacency as a flat row-major array of 64-bit words, cached."""
        if self._words is None:
            w = max(1, (self.n + 63) // 64)
            flat = array("Q", bytes(8 * w * max(1, self.n)))
            for v in range(self.n):
                m = self.bits[v]
                for i in range(w):
                    flat[v * w + i] = (m >> (64 * i)) & _WORD_MASK
            self._words = (w, flat)
        return self._words

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._edge_count})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then one "u v" line per edge.

    Lines starting with '#' are comments. Duplicate edge lines (in either
    orientation) collapse to one edge; the declared m must equal the count
    after deduplication.
    """
    header: tuple[int, int] | None = None
    edges: set[tuple[int, int]] = set()
    n = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", line_no)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {line!r}", line_no)
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("header counts must be nonnegative", line_no)
            header = (a, b)
            n = a
            continue
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", line_no)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"vertex id out of range in {line!r}", line_no)
        edges.add((min(a, b), max(a, b)))
    if header is None:
        raise GraphParseError("missing header line \"n m\"", None)
    if len(edges) != header[1]:
        raise GraphParseError(
            f"declared {header[1]} edges but found {len(edges)} after deduplication",
            None,
        )
    return Graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS .col file: "p edge n m" header, 1-indexed "e u v" lines."""
    n = None
    edges: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphParseError(f"bad problem line {line!r}", line_no)
            n = int(parts[2])
            continue
        if parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", line_no)
            if len(parts) != 3:
                raise GraphParseError(f"bad edge line {line!r}", line_no)
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u + 1}", line_no)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(f"vertex id out of range in {line!r}", line_no)
            edges.add((min(u, v), max(u, v)))
            continue
        raise GraphParseError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise GraphParseError("missing problem line", None)
    return Graph(n, edges)


def load_graph(path: str) -> Graph:
    """Read a graph file, choosing the format by extension and content."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".col"):
        return parse_dimacs(text)
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(("c ", "p ")) or line in ("c", "p"):
            return parse_dimacs(text)
        break
    return parse_graph(text)


def serialize(g: Graph) -> str:
    """Canonical edge-list form: header, then sorted "u v" lines with u < v."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertex set, relabelled to 0..k-1.

    Returns (subgraph, new_to_old) where new_to_old[i] is the original id of
    the subgraph's vertex i. The map is sorted, so relative id order (and
    with it min-degree tie-breaking) is preserved.
    """
    new_to_old = tuple(sorted(set(vertices)))
    for v in new_to_old:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    edges = []
    for new_u, old_u in enumerate(new_to_old):
        for old_v in g.adj[old_u]:
            new_v = old_to_new.get(old_v)
            if new_v is not None and new_u < new_v:
                edges.append((new_u, new_v))
    return Graph(len(new_to_old), edges), new_to_old


def min_degree_vertex(g: Graph, vertices: Iterable[int] | int | None = None) -> int:
    """Vertex of minimum degree within the induced subgraph on `vertices`.

    `vertices` may be an iterable of ids or a bitmask; None means all of g.
    Ties break toward the smallest id. Errors on an empty set.
    """
    if vertices is None:
        mask = g.full_mask()
    elif isinstance(vertices, int):
        mask = vertices
    else:
        mask = 0
        for v in vertices:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex {v} out of range")
            mask |= 1 << v
    if mask == 0:
        raise ValueError("vertex set is empty")
    best_v = -1
    best_deg = g.n + 1
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        deg = (g.bits[v] & mask).bit_count()
        if deg < best_deg:
            best_deg = deg
            best_v = v
        m ^= low
    return best_v


class DegeneracyResult(NamedTuple):
    d: int
    ordering: tuple[int, ...]


def degeneracy(g: Graph) -> DegeneracyResult:
    """Degeneracy and a min-degree peeling order (smallest id on ties).

    The returned d is the maximum, over the peeling, of the degree the
    removed vertex had at removal time. Every suffix of the ordering induces
    a subgraph whose first listed vertex has degree at most d.
    """
    order = []
    mask = g.full_mask()
    d = 0
    while mask:
        v = min_degree_vertex(g, mask)
        deg = (g.bits[v] & mask).bit_count()
        if deg > d:
            d = deg
        order.append(v)
        mask ^= 1 << v
    return DegeneracyResult(d, tuple(order))


def average_degree(g: Graph) -> Fraction:
    """Exact average degree 2m/n. Errors on the empty graph."""
    if g.n == 0:
        raise ValueError("average degree undefined for the empty graph")
    return Fraction(2 * g.edge_count, g.n)
