"""Exact graph invariants and star-subdivision witnesses.

Everything here is exhaustive and exact, sized for small graphs (the default
caps are 12 vertices for coloring-level invariants and 10 for the witness
search).  Beyond the cap a ResourceLimitError is raised rather than silently
degrading to a heuristic.

A *star-subdivision witness of order r* in a host graph G is a set of r
branch vertices together with, for every pair of them, either an edge of G or
a path of length two through a private midpoint, such that the subdivided
pairs form vertex-disjoint stars on the branch set.  The largest such r is
written h1(G).  It sits between the clique number and n, and bounds the
chromatic number from above for every graph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import ArgumentError, InternalBugError, ParseError, ResourceLimitError
from .graphs import SimpleGraph

__all__ = [
    "GRAPH_LIMIT_DEFAULT",
    "H1_LIMIT_DEFAULT",
    "chromatic_number",
    "clique_number",
    "maximum_matching",
    "has_perfect_matching",
    "is_hypomatchable",
    "is_chi_critical",
    "is_basic",
    "join_graphs",
    "JoinDecomposition",
    "find_join_decomposition",
    "StarSubdivisionWitness",
    "WitnessReport",
    "verify_witness",
    "h1_of_graph",
    "witness_to_json",
    "witness_from_json",
]

GRAPH_LIMIT_DEFAULT = 12
H1_LIMIT_DEFAULT = 10


def _check_limit(g: SimpleGraph, limit: int, what: str) -> None:
    if g.n > limit:
        raise ResourceLimitError(
            f"{what} capped at {limit} vertices, got {g.n}; raise the limit to force"
        )


# -- cliques and coloring ---------------------------------------------


def _max_clique(g: SimpleGraph) -> list[int]:
    """One maximum clique, via branch and bound with pivoting."""
    n = g.n
    if n == 0:
        return []
    adj = g.adjacency_bits()
    best: list[int] = []

    def expand(stack: list[int], p: int, x: int) -> None:
        nonlocal best
        if p == 0 and x == 0:
            if len(stack) > len(best):
                best = stack[:]
            return
        if len(stack) + bin(p).count("1") <= len(best):
            return
        pux = p | x
        pivot = max(
            (i for i in range(n) if (pux >> i) & 1),
            key=lambda i: bin(p & adj[i]).count("1"),
        )
        cand = p & ~adj[pivot]
        while cand:
            bit = cand & -cand
            i = bit.bit_length() - 1
            stack.append(i + 1)
            expand(stack, p & adj[i], x & adj[i])
            stack.pop()
            p &= ~bit
            x |= bit
            cand &= ~bit

    expand([], (1 << n) - 1, 0)
    return sorted(best)


def clique_number(g: SimpleGraph, limit: int = GRAPH_LIMIT_DEFAULT) -> int:
    _check_limit(g, limit, "clique search")
    return len(_max_clique(g))


def _greedy_bound(g: SimpleGraph) -> int:
    # saturation-order greedy coloring, upper bound only
    n = g.n
    color: list[int | None] = [None] * n
    for _ in range(n):
        pick, pick_key = -1, None
        for v in range(n):
            if color[v] is not None:
                continue
            sat = len({color[u - 1] for u in g.neighbors(v + 1) if color[u - 1] is not None})
            key = (sat, g.degree(v + 1), -v)
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        used = {color[u - 1] for u in g.neighbors(pick + 1) if color[u - 1] is not None}
        c = 0
        while c in used:
            c += 1
        color[pick] = c
    return 1 + max(color) if n else 0


def _colorable(g: SimpleGraph, k: int, clique: list[int]) -> bool:
    # backtracking; the clique is precolored and new colors are introduced
    # in order, which kills color-permutation symmetry
    n = g.n
    color = [-1] * n
    for i, v in enumerate(clique):
        if i >= k:
            return False
        color[v - 1] = i

    def assign(done: int, max_used: int) -> bool:
        if done == n:
            return True
        pick, pick_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u - 1] for u in g.neighbors(v + 1) if color[u - 1] >= 0})
            key = (sat, g.degree(v + 1), -v)
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        used = {color[u - 1] for u in g.neighbors(pick + 1) if color[u - 1] >= 0}
        cap = min(k - 1, max_used + 1)
        for c in range(cap + 1):
            if c in used:
                continue
            color[pick] = c
            if assign(done + 1, max(max_used, c)):
                return True
            color[pick] = -1
        return False

    return assign(len(clique), len(clique) - 1)


def chromatic_number(g: SimpleGraph, limit: int = GRAPH_LIMIT_DEFAULT) -> int:
    """Exact chromatic number by branch and bound between clique and greedy
    bounds."""
    _check_limit(g, limit, "chromatic number")
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    clique = _max_clique(g)
    low = len(clique)
    high = _greedy_bound(g)
    for k in range(low, high):
        if _colorable(g, k, clique):
            return k
    return high


# -- matchings ---------------------------------------------------------


def maximum_matching(g: SimpleGraph) -> tuple[tuple[int, int], ...]:
    """A maximum matching, found by exhaustive subset dynamic programming."""
    n = g.n
    adj = g.adjacency_bits()

    @lru_cache(maxsize=None)
    def mm(mask: int) -> int:
        if mask == 0:
            return 0
        bit = mask & -mask
        v = bit.bit_length() - 1
        rest = mask ^ bit
        best = mm(rest)
        nb = adj[v] & rest
        while nb:
            ub = nb & -nb
            best = max(best, 1 + mm(rest ^ ub))
            nb ^= ub
        return best

    edges = []
    mask = (1 << n) - 1
    while mask:
        bit = mask & -mask
        v = bit.bit_length() - 1
        rest = mask ^ bit
        if mm(mask) == mm(rest):
            mask = rest
            continue
        nb = adj[v] & rest
        while nb:
            ub = nb & -nb
            u = ub.bit_length() - 1
            if 1 + mm(rest ^ ub) == mm(mask):
                edges.append((v + 1, u + 1))
                mask = rest ^ ub
                break
            nb ^= ub
        else:
            raise InternalBugError("matching reconstruction lost its value")
    return tuple(edges)


def has_perfect_matching(g: SimpleGraph) -> bool:
    if g.n % 2:
        return False
    adj = g.adjacency_bits()

    @lru_cache(maxsize=None)
    def pm(mask: int) -> bool:
        if mask == 0:
            return True
        bit = mask & -mask
        v = bit.bit_length() - 1
        rest = mask ^ bit
        nb = adj[v] & rest
        while nb:
            ub = nb & -nb
            if pm(rest ^ ub):
                return True
            nb ^= ub
        return False

    return pm((1 << g.n) - 1)


def is_hypomatchable(g: SimpleGraph) -> bool:
    """True iff n is odd and deleting any one vertex leaves a graph with a
    perfect matching."""
    if g.n % 2 == 0:
        return False
    for v in range(1, g.n + 1):
        sub, _ = g.induced_subgraph([u for u in range(1, g.n + 1) if u != v])
        if not has_perfect_matching(sub):
            return False
    return True


# -- criticality and join structure -------------------------------------


def is_chi_critical(g: SimpleGraph, limit: int = GRAPH_LIMIT_DEFAULT) -> bool:
    """True iff deleting any vertex lowers the chromatic number."""
    _check_limit(g, limit, "criticality check")
    if g.n == 0:
        return False
    chi = chromatic_number(g, limit)
    for v in range(1, g.n + 1):
        sub, _ = g.induced_subgraph([u for u in range(1, g.n + 1) if u != v])
        if chromatic_number(sub, limit) >= chi:
            return False
    return True


def is_basic(g: SimpleGraph, limit: int = GRAPH_LIMIT_DEFAULT) -> bool:
    """The two shapes a join-indecomposable critical graph can take.

    Either the chromatic number is already within the clique bound of the
    degree sequence, or the graph is vertex-critical on 2m+1 vertices with
    chromatic number m+1, sequence clique bound m, and hypomatchable
    complement.
    """
    from .sequences import omega_of_sequence

    _check_limit(g, limit, "basic check")
    if g.n == 0:
        return True
    chi = chromatic_number(g, limit)
    omega_seq = omega_of_sequence(g.degree_sequence())
    if chi <= omega_seq:
        return True
    if g.n % 2 == 0:
        return False
    m = (g.n - 1) // 2
    return (
        chi == m + 1
        and omega_seq == m
        and is_chi_critical(g, limit)
        and is_hypomatchable(g.complement())
    )


def join_graphs(parts) -> tuple[SimpleGraph, tuple[tuple[int, ...], ...]]:
    """Disjoint union plus all edges between different parts.

    Returns the joined graph and, per part, the tuple of labels its vertices
    received (part i's vertex j maps to maps[i][j-1]).
    """
    parts = list(parts)
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    edges = []
    for p, off in zip(parts, offsets):
        edges.extend((u + off, v + off) for u, v in p.edges)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(1, parts[i].n + 1):
                for v in range(1, parts[j].n + 1):
                    edges.append((u + offsets[i], v + offsets[j]))
    maps = tuple(
        tuple(range(off + 1, off + p.n + 1)) for p, off in zip(parts, offsets)
    )
    return SimpleGraph(total, edges), maps


@dataclass(frozen=True)
class JoinDecomposition:
    """A chromatic-preserving critical subgraph split into join factors.

    vertices: labels (in the original graph) of the critical subgraph.
    factors[i] is the induced factor relabelled 1..k; factor_vertices[i]
    gives its vertices' original labels, ascending.
    """

    graph: SimpleGraph
    vertices: tuple[int, ...]
    factors: tuple[SimpleGraph, ...]
    factor_vertices: tuple[tuple[int, ...], ...]


def _components(g: SimpleGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def find_join_decomposition(
    g: SimpleGraph, limit: int = GRAPH_LIMIT_DEFAULT
) -> JoinDecomposition:
    """Shrink to a vertex-critical subgraph with the same chromatic number,
    then split it along the connected components of its complement.

    Deletion always removes the lowest-labelled removable vertex, so the
    result is deterministic.  Every factor must come out basic; a non-basic
    factor cannot be decomposed further (its complement is connected), so it
    is reported as InternalBugError.
    """
    _check_limit(g, limit, "join decomposition")
    chi = chromatic_number(g, limit)
    labels = list(range(1, g.n + 1))
    current = g
    changed = True
    while changed:
        changed = False
        for v in range(1, current.n + 1):
            sub, sub_labels = current.induced_subgraph(
                [u for u in range(1, current.n + 1) if u != v]
            )
            if chromatic_number(sub, limit) == chi:
                labels = [labels[l - 1] for l in sub_labels]
                current = sub
                changed = True
                break
    comps = _components(current.complement())
    factors = []
    factor_vertices = []
    for comp in comps:
        sub, sub_labels = current.induced_subgraph(comp)
        factors.append(sub)
        factor_vertices.append(tuple(labels[l - 1] for l in sub_labels))
        if not is_basic(sub, limit):
            raise InternalBugError(
                f"factor on {factor_vertices[-1]} is join-indecomposable but not basic"
            )
    return JoinDecomposition(
        graph=g,
        vertices=tuple(labels),
        factors=tuple(factors),
        factor_vertices=tuple(factor_vertices),
    )


# -- star-subdivision witnesses -----------------------------------------


@dataclass(frozen=True)
class StarSubdivisionWitness:
    """Branch vertices plus one path per branch pair.

    Each path is (u, v) for a direct edge or (u, mid, v) for a length-two
    path through the midpoint mid.  ``stars`` optionally declares how the
    subdivided pairs group into stars; when None the grouping is derived as
    the connected components of the subdivided pairs, which is the canonical
    choice.  Everything is tuples so witnesses hash and compare by value.
    """

    order: int
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    stars: tuple[tuple[tuple[int, int], ...], ...] | None = None


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    reason: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _bad(reason: str, detail: str) -> WitnessReport:
    return WitnessReport(False, reason, detail)


def _stars_ok(pairs: list[tuple[int, int]]) -> bool:
    # every component of the pair graph must be a star
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[int] = set()
    for start in adj:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        nedges = sum(len(adj[x]) for x in comp) // 2
        maxdeg = max(len(adj[x]) for x in comp)
        if nedges != len(comp) - 1 or maxdeg != len(comp) - 1:
            return False
    return True


def verify_witness(g: SimpleGraph, w: StarSubdivisionWitness) -> WitnessReport:
    """Check a witness against its host graph.

    Failure reasons: "malformed" for structural nonsense, "missing edge"
    when a required edge or pair is absent, "double subdivision" for a path
    longer than two edges, "overlapping paths" when midpoints collide with
    each other or the branch set, "stars not disjoint" when the subdivided
    pairs do not form vertex-disjoint stars.
    """
    bv = w.branch_vertices
    if w.order != len(bv):
        return _bad("malformed", f"order {w.order} != {len(bv)} branch vertices")
    if len(set(bv)) != len(bv):
        return _bad("malformed", "branch vertices repeat")
    for v in bv:
        if not (isinstance(v, int) and 1 <= v <= g.n):
            return _bad("malformed", f"branch vertex {v!r} out of range 1..{g.n}")
    branch = set(bv)
    want = {frozenset(p) for p in combinations(bv, 2)}
    seen_pairs: set[frozenset] = set()
    mids: list[int] = []
    sub_pairs: list[tuple[int, int]] = []
    for path in w.paths:
        if len(path) > 3:
            return _bad("double subdivision", f"path {path!r} has length {len(path) - 1}")
        if len(path) < 2:
            return _bad("malformed", f"path {path!r} too short")
        u, v = path[0], path[-1]
        for x in path:
            if not (isinstance(x, int) and 1 <= x <= g.n):
                return _bad("malformed", f"path vertex {x!r} out of range 1..{g.n}")
        if u not in branch or v not in branch or u == v:
            return _bad("malformed", f"path {path!r} does not join two branch vertices")
        key = frozenset((u, v))
        if key in seen_pairs:
            return _bad("malformed", f"pair {tuple(sorted(key))} appears twice")
        seen_pairs.add(key)
        if len(path) == 2:
            if not g.has_edge(u, v):
                return _bad("missing edge", f"{u}-{v} is not an edge of the host graph")
        else:
            mid = path[1]
            if mid in branch:
                return _bad("overlapping paths", f"midpoint {mid} is a branch vertex")
            if not (g.has_edge(u, mid) and g.has_edge(mid, v)):
                return _bad("missing edge", f"path {u}-{mid}-{v} is not in the host graph")
            mids.append(mid)
            sub_pairs.append((u, v))
    if len(set(mids)) != len(mids):
        dup = sorted(x for x in set(mids) if mids.count(x) > 1)
        return _bad("overlapping paths", f"midpoint {dup[0]} used by two paths")
    if seen_pairs != want:
        missing = sorted(tuple(sorted(p)) for p in want - seen_pairs)
        return _bad("missing edge", f"no path for branch pair {missing[0]}")
    if w.stars is None:
        if not _stars_ok(sub_pairs):
            return _bad("stars not disjoint", "subdivided pairs do not form disjoint stars")
    else:
        declared = [tuple(sorted(p)) for star in w.stars for p in star]
        if sorted(declared) != sorted(tuple(sorted(p)) for p in sub_pairs):
            return _bad("malformed", "stars do not cover the subdivided pairs exactly")
        touched: set[int] = set()
        for star in w.stars:
            verts = set()
            for u, v in star:
                verts.update((u, v))
            if len(star) > 1:
                centers = set.intersection(*(set(p) for p in star))
                if not centers:
                    return _bad("stars not disjoint", f"star {star!r} has no common centre")
                if len(star) != len(verts) - 1:
                    return _bad("stars not disjoint", f"star {star!r} repeats a leaf")
            if verts & touched:
                return _bad("stars not disjoint", "two declared stars share a vertex")
            touched |= verts
    return WitnessReport(True)


def _sdr(cands: list[list[int]]) -> list[int] | None:
    # injective choice of one candidate per slot (augmenting paths)
    matched: dict[int, int] = {}

    def assign(i: int, seen: set[int]) -> bool:
        for c in cands[i]:
            if c in seen:
                continue
            seen.add(c)
            if c not in matched or assign(matched[c], seen):
                matched[c] = i
                return True
        return False

    for i in range(len(cands)):
        if not assign(i, set()):
            return None
    out: list[int] = [0] * len(cands)
    for c, i in matched.items():
        out[i] = c
    return out


def h1_of_graph(
    g: SimpleGraph, limit: int = H1_LIMIT_DEFAULT
) -> tuple[int, StarSubdivisionWitness | None]:
    """Largest witness order in g, with one witness achieving it.

    Only the non-adjacent branch pairs ever need subdividing: dropping a
    subdivision in favour of an existing edge keeps the star condition (a
    subset of disjoint stars is again disjoint stars) and only frees
    midpoints.  So for each candidate branch set the subdivided pairs are
    forced, and what remains is a star check plus a distinct-midpoint
    assignment.
    """
    _check_limit(g, limit, "witness search")
    n = g.n
    if n == 0:
        return 0, None
    for r in range(n, 0, -1):
        for bv in combinations(range(1, n + 1), r):
            branch = set(bv)
            missing = [
                (u, v) for u, v in combinations(bv, 2) if not g.has_edge(u, v)
            ]
            if len(missing) > n - r:
                continue
            if not _stars_ok(missing):
                continue
            cands = []
            for u, v in missing:
                common = [
                    w
                    for w in g.neighbors(u)
                    if w not in branch and g.has_edge(w, v)
                ]
                cands.append(common)
            mids = _sdr(cands)
            if mids is None:
                continue
            paths: list[tuple[int, ...]] = []
            it = iter(mids)
            for u, v in combinations(bv, 2):
                if g.has_edge(u, v):
                    paths.append((u, v))
                else:
                    paths.append((u, next(it), v))
            witness = StarSubdivisionWitness(
                order=r, branch_vertices=bv, paths=tuple(paths)
            )
            report = verify_witness(g, witness)
            if not report:
                raise InternalBugError(
                    f"search produced an invalid witness: {report.reason}: {report.detail}"
                )
            return r, witness
    raise InternalBugError("witness search fell through; order 1 always exists")


# -- witness JSON --------------------------------------------------------


def witness_to_json(w: StarSubdivisionWitness) -> dict:
    """Plain-dict form: order, branch_vertices, and paths as {u, v} or
    {u, mid, v} objects.  The star grouping is not serialised; loading
    derives the canonical grouping from the paths."""
    paths = []
    for path in w.paths:
        if len(path) == 2:
            paths.append({"u": path[0], "v": path[1]})
        else:
            paths.append({"u": path[0], "mid": path[1], "v": path[-1]})
    return {
        "order": w.order,
        "branch_vertices": list(w.branch_vertices),
        "paths": paths,
    }


def witness_from_json(data) -> StarSubdivisionWitness:
    if not isinstance(data, dict):
        raise ParseError("witness JSON must be an object")
    try:
        order = data["order"]
        bv = data["branch_vertices"]
        raw_paths = data["paths"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"witness JSON missing field: {exc}") from None
    if not isinstance(order, int) or isinstance(order, bool):
        raise ParseError("witness order must be an integer")
    if not isinstance(bv, list) or not isinstance(raw_paths, list):
        raise ParseError("branch_vertices and paths must be arrays")
    paths = []
    for item in raw_paths:
        if not isinstance(item, dict) or "u" not in item or "v" not in item:
            raise ParseError(f"path entry {item!r} needs u and v")
        extra = set(item) - {"u", "v", "mid"}
        if extra:
            raise ParseError(f"path entry has unknown keys {sorted(extra)}")
        if "mid" in item:
            paths.append((item["u"], item["mid"], item["v"]))
        else:
            paths.append((item["u"], item["v"]))
    for path in paths:
        for x in path:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"path vertex {x!r} must be an integer")
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in bv):
        raise ParseError("branch vertices must be integers")
    return StarSubdivisionWitness(
        order=order, branch_vertices=tuple(bv), paths=tuple(paths)
    )
