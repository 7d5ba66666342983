"""Simple undirected graphs on vertices labelled 1..n.

The graph type is deliberately small: a vertex count plus a frozenset of
edges, with adjacency caches.  Vertices are positional labels, so degree
bookkeeping in the constructions can say "vertex i gets degree d_i" without a
separate mapping.

Also here: graph6 encode/decode (the compact ASCII graph format), DOT export,
and a canonical key for isomorphism classing built from iterated neighbor
color refinement.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations, permutations, product

from .errors import ArgumentError, ParseError

__all__ = [
    "SimpleGraph",
    "graph6_encode",
    "graph6_decode",
    "to_dot",
    "canonical_key",
]


class SimpleGraph:
    """Undirected simple graph with vertices 1..n and no loops.

    Edges may be given in any order and orientation; they are normalised to
    (min, max) tuples.  Duplicate or out-of-range edges raise ArgumentError.
    Instances are treated as immutable: build new graphs instead of mutating.
    """

    __slots__ = ("n", "edges", "_adj", "_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ArgumentError(f"vertex count {n!r} must be a non-negative integer")
        self.n = n
        seen: set[tuple[int, int]] = set()
        adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise ArgumentError(f"edge {e!r} is not a pair") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ArgumentError(f"edge {e!r} has non-integer endpoint")
            if u == v:
                raise ArgumentError(f"loop at vertex {u} not allowed")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ArgumentError(f"edge {e!r} out of range 1..{n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ArgumentError(f"duplicate edge {key!r}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.edges: frozenset[tuple[int, int]] = frozenset(seen)
        self._adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(nb)) for v, nb in adj.items()}
        self._bits: list[int] | None = None

    # -- basic queries -------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        if v not in self._adj:
            raise ArgumentError(f"vertex {v} out of range 1..{self.n}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> tuple[int, ...]:
        """Degrees in vertex order 1..n (not sorted)."""
        return tuple(len(self._adj[v]) for v in range(1, self.n + 1))

    def degree_sequence(self):
        from .sequences import DegreeSequence

        return DegreeSequence(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.edges

    def adjacency_bits(self) -> list[int]:
        """Bitmask rows: bit j-1 of row u-1 set iff u ~ j.  Cached."""
        if self._bits is None:
            rows = [0] * self.n
            for u, v in self.edges:
                rows[u - 1] |= 1 << (v - 1)
                rows[v - 1] |= 1 << (u - 1)
            self._bits = rows
        return self._bits

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges)!r})"

    # -- derived graphs ------------------------------------------------

    def complement(self) -> "SimpleGraph":
        missing = [
            (u, v)
            for u, v in combinations(range(1, self.n + 1), 2)
            if (u, v) not in self.edges
        ]
        return SimpleGraph(self.n, missing)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["SimpleGraph", tuple[int, ...]]:
        """Subgraph on the given labels, relabelled 1..k in ascending order.

        Returns (subgraph, labels) where labels[i-1] is the original label of
        new vertex i.
        """
        labels = tuple(sorted(set(vertices)))
        for v in labels:
            if not 1 <= v <= self.n:
                raise ArgumentError(f"vertex {v} out of range 1..{self.n}")
        index = {old: new + 1 for new, old in enumerate(labels)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return SimpleGraph(len(labels), edges), labels

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # -- standard families ----------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        if n < 3:
            raise ArgumentError(f"cycle needs at least 3 vertices, got {n}")
        edges = [(i, i + 1) for i in range(1, n)]
        edges.append((1, n))
        return cls(n, edges)


# -- graph6 -------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ArgumentError(f"graph6 supports at most 258047 vertices, got {n}")


def graph6_encode(g: SimpleGraph) -> str:
    """Encode as graph6: vertex count, then the upper triangle of the
    adjacency matrix read column by column, packed 6 bits per byte."""
    out = bytearray(_g6_encode_n(g.n))
    bits = 0
    nbits = 0
    for j in range(2, g.n + 1):
        for i in range(1, j):
            bits = (bits << 1) | (1 if (i, j) in g.edges else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> SimpleGraph:
    """Decode a graph6 string.  Raises ParseError on malformed input."""
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    text = text.strip()
    if not text:
        raise ParseError("empty graph6 string")
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 string contains non-ASCII characters") from None
    for b in data:
        if not 63 <= b <= 126:
            raise ParseError(f"graph6 byte {b} out of range 63..126")
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("graph6 strings beyond 258047 vertices are not supported")
        if len(data) < 4:
            raise ParseError("truncated graph6 vertex count")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"graph6 body has {len(data) - pos} bytes, expected {nbytes} for n={n}"
        )
    edges = []
    idx = 0
    for b in data[pos:]:
        val = b - 63
        for shift in range(5, -1, -1):
            if idx >= npairs:
                if (val >> shift) & 1:
                    raise ParseError("graph6 padding bits must be zero")
                continue
            if (val >> shift) & 1:
                edges.append(_pair_from_index(idx))
            idx += 1
    return SimpleGraph(n, edges)


def _pair_from_index(idx: int) -> tuple[int, int]:
    # column-major upper triangle: pairs (1,2), (1,3), (2,3), (1,4), ...
    j = 2
    count = 0
    while count + (j - 1) <= idx:
        count += j - 1
        j += 1
    i = idx - count + 1
    return (i, j)


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    """Graphviz DOT text for an undirected graph."""
    lines = [f"graph {name} {{"]
    for v in range(1, g.n + 1):
        lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- canonical form -----------------------------------------------------


def _refine_colors(g: SimpleGraph) -> list[int]:
    """Iterated neighbor color refinement, starting from degrees.

    Returns a dense color id per vertex (0-based list).  The ids are
    isomorphism-invariant: renaming vertices permutes the list accordingly.
    """
    n = g.n
    colors = list(g.degrees())
    ids = sorted(set(colors))
    remap = {c: i for i, c in enumerate(ids)}
    colors = [remap[c] for c in colors]
    nclasses = len(ids)
    while True:
        sigs = []
        for v in range(1, n + 1):
            nb = tuple(sorted(colors[w - 1] for w in g.neighbors(v)))
            sigs.append((colors[v - 1], nb))
        uniq = sorted(set(sigs))
        remap2 = {s: i for i, s in enumerate(uniq)}
        colors = [remap2[s] for s in sigs]
        if len(uniq) == nclasses:
            return colors
        nclasses = len(uniq)


def canonical_key(g: SimpleGraph) -> tuple[int, int]:
    """A complete isomorphism invariant: two graphs get equal keys iff they
    are isomorphic.

    Color classes from refinement bound the candidate relabellings; the key
    is the minimum upper-triangle adjacency bitstring over all relabellings
    that keep each vertex inside its class.  Any isomorphism preserves the
    (invariant) classes, so the minimum agrees across isomorphic graphs; it
    is an actual adjacency encoding, so distinct keys mean non-isomorphic.
    """
    n = g.n
    if n == 0:
        return (0, 0)
    colors = _refine_colors(g)
    classes: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        classes.setdefault(colors[v - 1], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    best: int | None = None
    for parts in product(*(permutations(cls) for cls in ordered)):
        order: list[int] = [v for part in parts for v in part]
        bits = 0
        for j in range(1, n):
            vj = order[j]
            for i in range(j):
                vi = order[i]
                bits = (bits << 1) | (1 if g.has_edge(vi, vj) else 0)
        if best is None or bits < best:
            best = bits
    assert best is not None
    return (n, best)
