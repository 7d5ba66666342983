"""Constructive realizations of degree sequences.

Every builder here is positional and deterministic: vertex i of the output
graph has exactly the i-th degree of the (non-increasing) input, and ties are
always broken toward the lowest index.  The module covers the building blocks
the witness construction needs:

* ``realize_any``        any realization (largest-first greedy).
* ``realize_tree``       a tree with prescribed degrees.
* ``realize_low_degree`` a graph with all degrees 1 or 2 and no isolated
                         vertex, given the vertex and edge counts.
* ``realize_bipartite_with_matching``
                         a bipartite graph with prescribed degrees on both
                         sides that contains a matching covering the smaller
                         side, under a near-uniform condition on the larger
                         side.
* ``realize_with_clique``  a realization containing a clique on the top-k
                         degree positions (feasible whenever Rao's condition
                         holds).
* ``enumerate_realizations``  all labelled (or non-isomorphic) realizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ArgumentError,
    InfeasibleError,
    InternalBugError,
    NotGraphicError,
    ResourceLimitError,
)
from .graphs import SimpleGraph, canonical_key
from .limits import enumeration_limit
from .sequences import DegreeSequence, is_graphic, rao_omega_at_least

__all__ = [
    "realize_any",
    "realize_tree",
    "realize_low_degree",
    "BipartiteRealization",
    "realize_bipartite_with_matching",
    "realize_with_clique",
    "enumerate_realizations",
]


def _coerce(seq) -> DegreeSequence:
    if isinstance(seq, DegreeSequence):
        return seq
    return DegreeSequence(seq)


def _eg_ok(desc: list[int]) -> bool:
    # Erdos-Gallai on an already sorted (non-increasing) list.
    n = len(desc)
    if n == 0:
        return True
    if sum(desc) % 2 or desc[0] > n - 1 or desc[-1] < 0:
        return False
    lhs = 0
    for t in range(1, n + 1):
        lhs += desc[t - 1]
        rhs = t * (t - 1) + sum(min(desc[i], t) for i in range(t, n))
        if lhs > rhs:
            return False
    return True


def realize_any(seq) -> SimpleGraph:
    """One realization, vertex i getting the i-th largest degree.

    Greedy largest-first: repeatedly satisfy the vertex with the biggest
    remaining demand by connecting it to the next-biggest demands, lowest
    index first on ties.  Raises NotGraphicError on non-graphic input.
    """
    s = _coerce(seq)
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    n = s.n
    resid = list(s.degrees)
    edges: list[tuple[int, int]] = []
    while True:
        v = max(range(n), key=lambda i: (resid[i], -i), default=None)
        if v is None or resid[v] == 0:
            break
        need = resid[v]
        resid[v] = 0
        targets = sorted(
            (u for u in range(n) if u != v and resid[u] > 0),
            key=lambda u: (-resid[u], u),
        )[:need]
        if len(targets) < need:
            raise InternalBugError(f"greedy realization stuck on {list(s.degrees)}")
        for u in targets:
            resid[u] -= 1
            edges.append((v + 1, u + 1))
    return SimpleGraph(n, edges)


def realize_tree(seq) -> SimpleGraph:
    """A tree in which vertex i has the i-th largest degree.

    Requires every degree >= 1 and degree sum exactly 2n-2 (so a tree
    exists); otherwise ArgumentError.  Vertices 2..n join one at a time,
    each attached to the lowest-index earlier vertex whose degree demand
    is not yet met.  For a non-increasing demand list that vertex always
    exists, so the build never backtracks.
    """
    s = _coerce(seq)
    n = s.n
    if n < 2:
        raise ArgumentError(f"tree needs at least 2 vertices, got {n}")
    if s.min_deg < 1:
        raise ArgumentError("tree degrees must all be at least 1")
    if s.sum != 2 * n - 2:
        raise ArgumentError(f"degree sum {s.sum} != 2n-2 = {2 * n - 2}")
    resid = list(s.degrees)
    edges = []
    for v in range(2, n + 1):
        u = next((i for i in range(1, v) if resid[i - 1] > 0), None)
        if u is None:
            raise InternalBugError(f"tree attachment stuck on {list(s.degrees)}")
        edges.append((u, v))
        resid[u - 1] -= 1
        resid[v - 1] -= 1
    if any(resid):
        raise InternalBugError(f"tree residues nonzero for {list(s.degrees)}")
    return SimpleGraph(n, edges)


def realize_low_degree(n: int, e: int) -> SimpleGraph:
    """A graph with n vertices, e edges, every degree 1 or 2.

    Feasible iff e == n >= 3 (a cycle), or n >= 2 and e < n <= 2e (a mix
    of one path and a matching); otherwise InfeasibleError.  Layout:
    matching pairs (1,2), (3,4), ... first, then one path on the remaining
    vertices, so the degree-2 vertices are exactly the path interior.
    """
    if n < 1 or e < 0:
        raise ArgumentError(f"need n >= 1 and e >= 0, got n={n}, e={e}")
    if e == n:
        if n >= 3:
            return SimpleGraph.cycle(n)
        raise InfeasibleError(f"no such graph with n=e={n}: a cycle needs 3 vertices")
    if n >= 2 and e < n <= 2 * e:
        pairs = n - e - 1
        edges = [(2 * i - 1, 2 * i) for i in range(1, pairs + 1)]
        edges += [(i, i + 1) for i in range(2 * pairs + 1, n)]
        return SimpleGraph(n, edges)
    raise InfeasibleError(
        f"no graph with {n} vertices, {e} edges, and all degrees in {{1, 2}}"
    )


@dataclass(frozen=True)
class BipartiteRealization:
    """Bipartite graph, its two parts, and a matching covering part_a."""

    graph: SimpleGraph
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]


def realize_bipartite_with_matching(a, b) -> BipartiteRealization:
    """Bipartite realization with a matching that saturates the A side.

    Inputs are the degree demands a_1 >= ... >= a_n for the A side and
    b_1 >= ... >= b_m for the B side.  Preconditions (each checked, with the
    violated inequality named in the ArgumentError):

    * all demands positive, both lists non-increasing,
    * n <= m,
    * a_1 <= m,
    * sum(a) == sum(b),
    * b_1 <= b_m + 1 (the B side is near-uniform).

    Under these the demands are always realizable by a bipartite graph
    containing a matching that covers A.  Output vertices: A is 1..n, B is
    n+1..n+m, vertex i of a part carrying that part's i-th demand.
    """
    a = list(a)
    b = list(b)
    n, m = len(a), len(b)
    if n < 1 or m < 1:
        raise ArgumentError("both sides must be non-empty")
    for side, vals in (("a", a), ("b", b)):
        for x in vals:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise ArgumentError(f"{side}-side demand {x!r} is not a positive integer")
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ArgumentError(f"{side}-side demands are not non-increasing")
    if n > m:
        raise ArgumentError(f"violated n <= m: A side {n} larger than B side {m}")
    if a[0] > m:
        raise ArgumentError(f"violated a_1 <= m: demand {a[0]} exceeds B side size {m}")
    if sum(a) != sum(b):
        raise ArgumentError(f"violated sum(a) == sum(b): {sum(a)} != {sum(b)}")
    if b[0] > b[-1] + 1:
        raise ArgumentError(
            f"violated b_1 <= b_m + 1: B side spread {b[0]}..{b[-1]} exceeds 1"
        )
    av = [(d, i) for i, d in enumerate(a)]
    bv = [(d, j) for j, d in enumerate(b)]
    edges, matching = _match_solve(av, bv)
    graph = SimpleGraph(n + m, sorted((i + 1, n + j + 1) for i, j in edges))
    return BipartiteRealization(
        graph=graph,
        part_a=tuple(range(1, n + 1)),
        part_b=tuple(range(n + 1, n + m + 1)),
        matching=tuple(sorted((i + 1, n + j + 1) for i, j in matching)),
    )


def _resort(items: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return sorted(items, key=lambda t: (-t[0], t[1]))


def _match_solve(av, bv):
    """Recursive core.  av, bv: (demand, key) sorted by (-demand, key), all
    demands positive, lemma preconditions holding.  Returns (edge set,
    matching list) over the keys."""
    n, m = len(av), len(bv)
    if n == 1:
        # a_1 == m and every b_j == 1: a star
        ak = av[0][1]
        edges = {(ak, bk) for _, bk in bv}
        return edges, [(ak, bv[0][1])]
    if bv[0][0] == 1:
        # every B demand is 1: disjoint stars, centres on the A side
        edges = set()
        matching = []
        pos = 0
        for d, ak in av:
            leaves = bv[pos : pos + d]
            pos += d
            edges.update((ak, bk) for _, bk in leaves)
            matching.append((ak, leaves[0][1]))
        if pos != m:
            raise InternalBugError("star decomposition out of leaves")
        return edges, matching
    a1, b1 = av[0][0], bv[0][0]
    ra = [(d - 1, k) for d, k in av[1:b1]] + list(av[b1:])
    rb = [(d - 1, k) for d, k in bv[1:a1]] + list(bv[a1:])
    pos_a = [(d, k) for d, k in ra if d > 0]
    pos_b = [(d, k) for d, k in rb if d > 0]
    if len(pos_a) == n - 1:
        # peel u_1 and v_1 together: u_1 takes v_1..v_{a_1}, v_1 takes
        # u_1..u_{b_1}, the rest recurses
        sub_edges, sub_match = _match_solve(_resort(pos_a), _resort(pos_b))
        edges = {(av[0][1], bk) for _, bk in bv[:a1]}
        edges.update((ak, bv[0][1]) for _, ak in av[:b1])
        edges.update(sub_edges)
        sub_match.append((av[0][1], bv[0][1]))
        return edges, sub_match
    if len(pos_a) == 0:
        # forced tiny shape: n == b_1 == 2, a == (m, 1), b == (2, 1, ..., 1)
        if n != 2 or b1 != 2 or a1 != m:
            raise InternalBugError("degenerate bipartite case out of shape")
        # u_1 covers all of B; v_1's second edge comes from u_2
        edges = {(av[0][1], bk) for _, bk in bv}
        edges.add((av[1][1], bv[0][1]))
        return edges, [(av[0][1], bv[1][1]), (av[1][1], bv[0][1])]
    if av[1][0] == 1:
        # a == (a_1, 1, ..., 1): a star with some pendant edges attached,
        # possible only with b_1 == 2
        twos = sum(1 for d, _ in bv if d == 2)
        if b1 != 2 or twos >= a1 or n - twos - 1 != m - a1:
            raise InternalBugError("pendant-star bipartite case out of shape")
        edges = {(av[0][1], bk) for _, bk in bv[:a1]}
        matching = []
        for j in range(twos):
            edges.add((av[j + 1][1], bv[j][1]))
            matching.append((av[j + 1][1], bv[j][1]))
        for i in range(twos + 1, n):
            bj = bv[a1 + i - twos - 1]
            edges.add((av[i][1], bj[1]))
            matching.append((av[i][1], bj[1]))
        matching.append((av[0][1], bv[twos][1]))
        return edges, matching
    # remaining shape: a_{b_1} == 1 with a_{b_1 - 1} >= 2 and every residual
    # B demand positive; peel v_1 only, the pendant u_{b_1} pairs with it
    if len(pos_a) != n - 2 or len(pos_b) != m - 1 or av[b1 - 1][0] != 1:
        raise InternalBugError("bipartite recursion reached an impossible shape")
    sub_a = _resort([(a1 - 1, av[0][1])] + pos_a)
    sub_edges, sub_match = _match_solve(sub_a, list(bv[1:]))
    edges = {(ak, bv[0][1]) for _, ak in av[:b1]}
    edges.update(sub_edges)
    sub_match.append((av[b1 - 1][1], bv[0][1]))
    return edges, sub_match


def realize_with_clique(seq, k: int) -> SimpleGraph:
    """A realization whose first k vertices form a clique.

    Vertex i gets the i-th largest degree and vertices 1..k are pairwise
    adjacent.  Feasible exactly when rao_omega_at_least(seq, k) holds;
    InfeasibleError otherwise.  The completion outside the clique is found by
    backtracking with a residual-graphicality prune.
    """
    s = _coerce(seq)
    n = s.n
    if not 1 <= k <= n:
        raise ArgumentError(f"k={k} out of range 1..{n}")
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    if not rao_omega_at_least(s, k):
        raise InfeasibleError(
            f"no realization of {list(s.degrees)} has a clique on the top {k} degrees"
        )
    resid = [s.degrees[i] - (k - 1) if i < k else s.degrees[i] for i in range(n)]
    edges = [(i, j) for i, j in combinations(range(1, k + 1), 2)]
    found = _complete(resid, 1, k, edges)
    if not found:
        raise InternalBugError(
            f"clique completion search failed for {list(s.degrees)}, k={k}"
        )
    return SimpleGraph(n, edges)


def _complete(resid: list[int], v: int, k: int, edges: list[tuple[int, int]]) -> bool:
    # satisfy vertices in index order; edges within 1..k are already placed
    n = len(resid)
    while v <= n and resid[v - 1] == 0:
        v += 1
    if v > n:
        return True
    need = resid[v - 1]
    cands = [u for u in range(v + 1, n + 1) if resid[u - 1] > 0 and not (v <= k and u <= k)]
    if len(cands) < need:
        return False
    for pick in combinations(cands, need):
        resid[v - 1] = 0
        for u in pick:
            resid[u - 1] -= 1
        if _eg_ok(sorted(resid[v:], reverse=True)):
            base = len(edges)
            edges.extend((v, u) for u in pick)
            if _complete(resid, v + 1, k, edges):
                return True
            del edges[base:]
        for u in pick:
            resid[u - 1] += 1
        resid[v - 1] = need
    return False


def enumerate_realizations(seq, *, up_to_iso: bool = False, limit: int | None = None):
    """Every realization of a sequence, yielded one graph at a time.

    Vertex i of each output graph has the i-th largest degree.  With
    up_to_iso, keeps one representative per isomorphism class.  Sequences
    longer than ``limit`` vertices (default: the enumeration cap from
    DEGSEQ_ORACLE_LIMIT) raise ResourceLimitError up front; there is no
    silent truncation.
    """
    s = _coerce(seq)
    if limit is None:
        limit = enumeration_limit()
    if s.n > limit:
        raise ResourceLimitError(
            f"sequence length {s.n} exceeds enumeration limit {limit}"
        )
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    return _enumerate(s, up_to_iso)


def _enumerate(s, up_to_iso: bool):
    n = s.n
    seen: set = set()
    resid = list(s.degrees)
    edges: list[tuple[int, int]] = []

    def extend(v: int):
        while v <= n and resid[v - 1] == 0:
            v += 1
        if v > n:
            g = SimpleGraph(n, list(edges))
            if up_to_iso:
                key = canonical_key(g)
                if key in seen:
                    return
                seen.add(key)
            yield g
            return
        need = resid[v - 1]
        cands = [u for u in range(v + 1, n + 1) if resid[u - 1] > 0]
        if len(cands) < need:
            return
        for pick in combinations(cands, need):
            resid[v - 1] = 0
            for u in pick:
                resid[u - 1] -= 1
            if _eg_ok(sorted(resid[v:], reverse=True)):
                base = len(edges)
                edges.extend((v, u) for u in pick)
                yield from extend(v + 1)
                del edges[base:]
            for u in pick:
                resid[u - 1] += 1
            resid[v - 1] = need

    return extend(1)
