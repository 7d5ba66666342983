"""Independent reference implementations used to cross-check the package.

Everything here recomputes invariants from first principles: labeled
enumeration over edge subsets and plain backtracking searches.  None of the
package's search code is reused, so agreement between these and the library
is a meaningful check.
"""

import itertools
from functools import lru_cache

from degseq import SimpleGraph


def _gray_code_counts(n, key_of):
    """Count labeled graphs on n vertices grouped by key_of(degree vector).

    Walks all 2^C(n,2) edge subsets with a Gray code so each step flips a
    single edge and the degree vector updates in O(1).
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    deg = [0] * n
    counts = {key_of(deg): 1}
    present = [False] * len(pairs)
    for step in range(1, 1 << len(pairs)):
        b = (step & -step).bit_length() - 1
        u, v = pairs[b]
        d = -1 if present[b] else 1
        present[b] = not present[b]
        deg[u] += d
        deg[v] += d
        key = key_of(deg)
        counts[key] = counts.get(key, 0) + 1
    return counts


@lru_cache(maxsize=None)
def labeled_degree_counts(n):
    """Sorted degree tuple -> number of labeled graphs on n vertices."""
    return _gray_code_counts(n, lambda deg: tuple(sorted(deg, reverse=True)))


@lru_cache(maxsize=None)
def labeled_degree_vector_counts(n):
    """Exact degree vector (deg of vertex 1, .., vertex n) -> labeled count."""
    return _gray_code_counts(n, tuple)


def brute_chromatic(g):
    """Smallest k admitting a proper coloring, by plain backtracking."""
    n = g.n
    if n == 0:
        return 0
    nbrs = [g.neighbors(v) for v in range(1, n + 1)]

    def colorable(k):
        color = [0] * (n + 1)

        def go(v, used):
            if v > n:
                return True
            for c in range(1, min(used + 1, k) + 1):
                if all(color[w] != c for w in nbrs[v - 1]):
                    color[v] = c
                    if go(v + 1, max(used, c)):
                        return True
                    color[v] = 0
            return False

        return go(1, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def brute_omega(g):
    """Largest clique, by checking every vertex subset."""
    best = 0
    for mask in range(1 << g.n):
        vs = [i + 1 for i in range(g.n) if mask >> i & 1]
        if len(vs) <= best:
            continue
        if all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2)):
            best = len(vs)
    return best


def brute_matching_size(g):
    """Maximum matching size, by memoized search over available vertices."""
    memo = {}

    def go(avail):
        if not avail:
            return 0
        if avail in memo:
            return memo[avail]
        v = min(avail)
        rest = avail - {v}
        best = go(rest)
        for w in g.neighbors(v):
            if w in rest:
                best = max(best, 1 + go(rest - {w}))
        memo[avail] = best
        return best

    return go(frozenset(range(1, g.n + 1)))


def _stars_shape_ok(pairs):
    # every component of the pair graph must be a star
    adj = {}
    for u, v in pairs:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    seen = set()
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


def _distinct_choice(cands):
    # system of distinct representatives by backtracking, scarcest first
    order = sorted(range(len(cands)), key=lambda i: len(cands[i]))
    used = set()

    def go(i):
        if i == len(order):
            return True
        for w in cands[order[i]]:
            if w not in used:
                used.add(w)
                if go(i + 1):
                    return True
                used.discard(w)
        return False

    return go(0)


def brute_h1(g):
    """Largest star-subdivision witness order, by direct subset search.

    A pair already adjacent never needs subdividing (replacing a length-2
    path by the direct edge keeps every witness condition), so for a fixed
    branch set the subdivided pairs are exactly the non-adjacent ones.
    """
    verts = list(range(1, g.n + 1))
    for r in range(g.n, 0, -1):
        for branch in itertools.combinations(verts, r):
            bset = set(branch)
            missing = [
                (u, v)
                for u, v in itertools.combinations(branch, 2)
                if not g.has_edge(u, v)
            ]
            if not _stars_shape_ok(missing):
                continue
            cands = []
            ok = True
            for u, v in missing:
                cs = [
                    w
                    for w in verts
                    if w not in bset and g.has_edge(u, w) and g.has_edge(v, w)
                ]
                if not cs:
                    ok = False
                    break
                cands.append(cs)
            if ok and _distinct_choice(cands):
                return r
    return 0


def petersen():
    edges = []
    for i in range(5):
        edges.append((i + 1, (i + 1) % 5 + 1))
        edges.append((i + 6, (i + 2) % 5 + 6))
        edges.append((i + 1, i + 6))
    return SimpleGraph(10, edges)


def random_graph(rng, n, p=0.5):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return SimpleGraph(n, edges)


def edge_count(g):
    return len(g.edges)


def random_bipartite_demands(rng, total_cap=24):
    """One random valid (a, b) demand pair for the bipartite builder.

    B is near-uniform by construction (values t and t+1), then A splits the
    same total into n <= m parts of size <= m.
    """
    while True:
        m = rng.randrange(1, 9)
        t = rng.randrange(1, m + 1)
        j = rng.randrange(0, m)
        b = [t + 1] * j + [t] * (m - j)
        total = sum(b)
        if total > total_cap:
            continue
        lo = max(1, -(-total // m))
        if lo > m:
            continue
        n = rng.randrange(lo, m + 1)
        a = [1] * n
        room = [m - 1] * n
        left = total - n
        while left > 0:
            i = rng.randrange(n)
            if room[i] > 0:
                a[i] += 1
                room[i] -= 1
                left -= 1
        a.sort(reverse=True)
        return a, b
