"""Subdivided-clique witnesses for odd near-regular degree sequences.

Centerpiece of the package: for a graphic sequence of odd length 2m+1 whose
profile is NontrivialBasicProfile, ``build_basic_witness`` constructs a
realization together with a witness for an (m+1)-clique in which every
subdivided pair meets the (m+1)-st vertex, so the subdivided pairs form one
star.  ``join_witness_realizations`` composes such witnesses across join
factors, ``witness_pipeline`` runs decomposition, per-factor construction
and recomposition end to end, and ``check_bounds`` evaluates the package's
five chromatic inequalities on a stats bundle with exact rational slack.

The construction is positional throughout: position i of the input sequence
is vertex i of the output graph, A = {1..m} and B = {m+1..2m+1}, and every
helper returns explicit label maps so the final witness talks about original
labels.  All tie-breaking picks lowest labels, so identical inputs give
identical graphs and witnesses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .analysis import (
    GRAPH_LIMIT_DEFAULT,
    StarSubdivisionWitness,
    chromatic_number,
    find_join_decomposition,
    join_graphs,
    verify_witness,
)
from .errors import (
    ArgumentError,
    DegseqError,
    InternalBugError,
    NotGraphicError,
    ResourceLimitError,
)
from .graphs import SimpleGraph
from .realize import (
    realize_bipartite_with_matching,
    realize_low_degree,
    realize_tree,
    realize_with_clique,
)
from .sequences import (
    DegreeSequence,
    ProfileVerdict,
    SequenceStats,
    classify_basic_profile,
    is_graphic,
    omega_of_sequence,
)

__all__ = [
    "ConstructionCase",
    "ConstructionPlan",
    "plan_construction",
    "build_basic_witness",
    "join_witness_realizations",
    "witness_pipeline",
    "BoundCheck",
    "BoundReport",
    "check_bounds",
]


class ConstructionCase(enum.Enum):
    """Which of the two construction branches a plan takes.

    CASE_ONE applies when d_{m+1} >= m + alpha (the middle degree is large
    relative to the top spread); CASE_TWO otherwise.
    """

    CASE_ONE = "CaseOne"
    CASE_TWO = "CaseTwo"


@dataclass(frozen=True)
class ConstructionPlan:
    """All numeric decisions of the construction, before any graph is built.

    m          the input has length 2m+1 and the witness gets order m+1
    alpha      total excess of the top m degrees over d_{m+1}
    beta       total deficit of the bottom m degrees under d_{m+1}
    r          (2m - d_{m+1} + alpha + beta) / 2, the tree edge budget
    t          degree targets t_1..t_{r+1} for the tree on the last r+1
               vertices; sum(t) = 2r
    case       CASE_ONE or CASE_TWO
    a_targets  cross-edge demands for vertices 1..m
    b_targets  cross-edge demands for the B-side vertices the bipartite
               step serves: v_{m+1}..v_{2m+1} in CASE_ONE (so length m+1,
               and the first entry may be 0), v_{m+2}..v_{2m+1} in CASE_TWO
               (length m)
    """

    m: int
    alpha: int
    beta: int
    r: int
    t: tuple[int, ...]
    case: ConstructionCase
    a_targets: tuple[int, ...]
    b_targets: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "alpha": self.alpha,
            "beta": self.beta,
            "r": self.r,
            "t": list(self.t),
            "case": self.case.value,
            "a_targets": list(self.a_targets),
            "b_targets": list(self.b_targets),
        }


def _coerce(seq) -> DegreeSequence:
    return seq if isinstance(seq, DegreeSequence) else DegreeSequence(seq)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class _Prep:
    """Internal bundle: the plan plus every intermediate the builder needs."""

    __slots__ = (
        "plan",
        "d",
        "n",
        "m",
        "c",
        "tree_edges",
        "chosen",
        "s_order",
        "low_graph",
    )

    def __init__(self, plan, d, n, m, c, tree_edges, chosen, s_order, low_graph):
        self.plan = plan
        self.d = d
        self.n = n
        self.m = m
        self.c = c
        self.tree_edges = tree_edges
        self.chosen = chosen
        self.s_order = s_order
        self.low_graph = low_graph


def _bug(msg: str, plan: ConstructionPlan | None = None) -> InternalBugError:
    if plan is not None:
        msg = f"{msg}; plan={plan.to_dict()}"
    return InternalBugError(msg)


def _prepare(s: DegreeSequence) -> _Prep:
    profile = classify_basic_profile(s)
    if profile.verdict is not ProfileVerdict.NONTRIVIAL_BASIC:
        raise ArgumentError(
            f"sequence profile is {profile.verdict.value}; "
            "the construction needs NontrivialBasicProfile"
        )
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    d = s.degrees
    m = profile.m
    n = 2 * m + 1
    dm1 = d[m]
    c = dm1 - m
    alpha = sum(d[i] - dm1 for i in range(m))
    beta = sum(dm1 - d[i] for i in range(m + 1, n))
    two_r = 2 * m - dm1 + alpha + beta
    if two_r % 2:
        raise InternalBugError(f"odd tree budget {two_r} for graphic {list(d)}")
    r = two_r // 2
    if not (0 <= beta < r <= 2 * m - dm1 - 1 <= m - 1):
        raise InternalBugError(
            f"budget chain violated for {list(d)}: beta={beta} r={r} m={m}"
        )
    if d[2 * m - r - 1] != dm1:
        raise InternalBugError(f"degree plateau too short for {list(d)}")

    # tree degree targets for v_{2m-r+1}..v_{2m+1}
    t = [dm1 - d[2 * m - r + i - 1] + 1 for i in range(1, r + 1)]
    t.append(dm1 - d[n - 1] + r - beta)
    if sum(t) != 2 * r or min(t) < 1:
        raise InternalBugError(f"tree targets {t} do not sum to 2r={2 * r}")

    # build the tree with those exact degrees, then relabel into place
    order = sorted(range(r + 1), key=lambda i: (-t[i], i))
    label = [2 * m - r + 1 + i for i in order]
    tree = realize_tree([t[i] for i in order])
    tree_edges = {_norm(label[u - 1], label[v - 1]) for u, v in tree.edges}
    nbrs_last = sorted(
        u if v == n else v for u, v in tree_edges if n in (u, v)
    )

    if dm1 >= m + alpha:
        case = ConstructionCase.CASE_ONE
        chosen = nbrs_last[: r - beta - 1]
        a_t = [d[i] - m + 1 for i in range(m)]
        b_t = []
        for i in range(1, m + 2):
            if 2 <= i <= r - beta or m - r + 1 <= i <= m + 1:
                b_t.append(c + 1)
            else:
                b_t.append(c)
        s_order = None
        low_graph = None
    else:
        case = ConstructionCase.CASE_TWO
        chosen = nbrs_last[: r - beta]
        s_order = [n] + chosen + list(range(m + 2, 2 * m - r + 1))
        if len(s_order) != m - beta or len(set(s_order)) != m - beta:
            raise InternalBugError(f"bad low-degree vertex pool for {list(d)}")
        low_graph = realize_low_degree(m - beta, r - beta)
        interior = {
            s_order[j - 1] for j in range(1, m - beta + 1) if low_graph.degree(j) == 2
        }
        a_t = [d[i] - m + 1 - (1 if i < c else 0) for i in range(m)]
        b_t = [c + 1 + (1 if m + 1 + i in interior else 0) for i in range(1, m + 1)]

    plan = ConstructionPlan(
        m=m,
        alpha=alpha,
        beta=beta,
        r=r,
        t=tuple(t),
        case=case,
        a_targets=tuple(a_t),
        b_targets=tuple(b_t),
    )
    if case is ConstructionCase.CASE_ONE:
        want = alpha + m * (c + 1)
        if sum(a_t) != want or sum(b_t) != want:
            raise _bug(f"demand totals disagree with {want}", plan)
    return _Prep(plan, d, n, m, c, tree_edges, chosen, s_order, low_graph)


def plan_construction(seq) -> ConstructionPlan:
    """The numeric plan the witness builder would follow for this sequence.

    Requires classify_basic_profile(D) = NontrivialBasicProfile and D
    graphic; ArgumentError (or NotGraphicError) otherwise.
    """
    return _prepare(_coerce(seq)).plan


def _cross_edges(plan, demand_label_pairs_a, demand_label_pairs_b):
    """Run the bipartite builder on labelled demands, map back to labels.

    Returns (edge set, matching dict A-label -> B-label).  Both demand lists
    are (demand, label) pairs; they are sorted here, so callers pass them in
    position order.
    """
    sa = sorted(demand_label_pairs_a, key=lambda p: (-p[0], p[1]))
    sb = sorted(demand_label_pairs_b, key=lambda p: (-p[0], p[1]))
    try:
        bip = realize_bipartite_with_matching(
            [p[0] for p in sa], [p[0] for p in sb]
        )
    except DegseqError as exc:
        raise _bug(f"cross-edge builder failed: {exc}", plan) from exc
    na = len(sa)

    def back(v: int) -> int:
        return sa[v - 1][1] if v <= na else sb[v - na - 1][1]

    edges = {_norm(back(u), back(v)) for u, v in bip.graph.edges}
    match = {back(u): back(v) for u, v in bip.matching}
    if len(match) != na:
        raise _bug("matching does not cover the A side", plan)
    return edges, match


def build_basic_witness(seq) -> tuple[SimpleGraph, StarSubdivisionWitness]:
    """A realization of D plus a verified order-(m+1) witness.

    The output graph has degree sequence exactly D.  The witness has branch
    vertices 1..m+1 and every subdivided pair meets vertex m+1, declared as
    a single star.  Preconditions as in plan_construction; any failure of an
    internal step is an InternalBugError carrying the plan, because the
    profile guarantees feasibility.
    """
    s = _coerce(seq)
    prep = _prepare(s)
    plan = prep.plan
    m, n, c = prep.m, prep.n, prep.c
    r, beta = plan.r, plan.beta
    ka = {_norm(u, v) for u, v in combinations(range(1, m + 1), 2)}
    kb = {_norm(u, v) for u, v in combinations(range(m + 1, n + 1), 2)}
    removed = {_norm(v, n) for v in prep.chosen}

    if plan.case is ConstructionCase.CASE_ONE:
        partners = [m + 2 + idx for idx in range(len(prep.chosen))]
        if any(p >= 2 * m - r + 1 for p in partners):
            raise _bug("re-attachment partners collide with the tree", plan)
        swapped = set()
        for v, p in zip(prep.chosen, partners):
            e = _norm(v, p)
            if e in prep.tree_edges:
                raise _bug(f"re-attachment edge {e} already in the tree", plan)
            swapped.add(e)
        t2 = (prep.tree_edges - removed) | swapped
        if not t2 <= kb:
            raise _bug("within-B surgery left part B", plan)
        inner = ka | (kb - t2)
        pairs_a = [(plan.a_targets[i], i + 1) for i in range(m)]
        pairs_b = [
            (plan.b_targets[i], m + 1 + i)
            for i in range(m + 1)
            if plan.b_targets[i] > 0
        ]
        cross, match = _cross_edges(plan, pairs_a, pairs_b)
        edges = inner | cross
        direct_to_hub = {i for i in range(1, m + 1) if match[i] == m + 1}
    else:
        t3 = {
            _norm(prep.s_order[u - 1], prep.s_order[v - 1])
            for u, v in prep.low_graph.edges
        }
        kept = prep.tree_edges - removed
        if t3 & kept:
            raise _bug("low-degree graph overlaps the surgered tree", plan)
        t4 = kept | t3
        if not t4 <= kb:
            raise _bug("within-B surgery left part B", plan)
        inner = ka | (kb - t4)
        pairs_a = [(plan.a_targets[i], i + 1) for i in range(m)]
        pairs_b = [(plan.b_targets[i], m + 2 + i) for i in range(m)]
        cross, match = _cross_edges(plan, pairs_a, pairs_b)
        hub = {_norm(j, m + 1) for j in range(1, c + 1)}
        edges = inner | cross | hub
        direct_to_hub = set(range(1, c + 1))

    g = SimpleGraph(n, edges)
    if g.degree_sequence().degrees != s.degrees:
        raise _bug(
            f"degrees came out {list(g.degree_sequence().degrees)}, "
            f"wanted {list(s.degrees)}",
            plan,
        )
    for v in range(m + 2, n + 1):
        if not g.has_edge(m + 1, v):
            raise _bug(f"hub vertex {m + 1} lost its edge to {v}", plan)

    paths: list[tuple[int, ...]] = [
        (i, j) for i, j in combinations(range(1, m + 1), 2)
    ]
    star: list[tuple[int, int]] = []
    for i in range(1, m + 1):
        if i in direct_to_hub:
            paths.append((i, m + 1))
        else:
            paths.append((i, match[i], m + 1))
            star.append((i, m + 1))
    witness = StarSubdivisionWitness(
        order=m + 1,
        branch_vertices=tuple(range(1, m + 2)),
        paths=tuple(paths),
        stars=(tuple(star),) if star else (),
    )
    report = verify_witness(g, witness)
    if not report:
        raise _bug(f"witness rejected ({report.reason}: {report.detail})", plan)
    return g, witness


def join_witness_realizations(
    parts,
) -> tuple[SimpleGraph, StarSubdivisionWitness]:
    """Join the part graphs and merge their witnesses into one.

    Each part is a (graph, witness) pair whose witness must verify in its
    graph (ArgumentError otherwise).  In the join, branch sets unite, every
    cross pair becomes a direct edge, and the witness order is the sum of
    the part orders.  Star declarations merge when every part has one.
    """
    parts = list(parts)
    if not parts:
        raise ArgumentError("parts must be non-empty")
    for idx, (g, w) in enumerate(parts):
        report = verify_witness(g, w)
        if not report:
            raise ArgumentError(
                f"part {idx + 1} witness invalid "
                f"({report.reason}: {report.detail})"
            )
    joined, maps = join_graphs([g for g, _ in parts])
    branch: list[int] = []
    paths: list[tuple[int, ...]] = []
    stars: list[tuple[tuple[int, int], ...]] = []
    have_all_stars = all(w.stars is not None for _, w in parts)
    part_branches: list[list[int]] = []
    for (_, w), labels in zip(parts, maps):
        relabelled = [labels[v - 1] for v in w.branch_vertices]
        part_branches.append(relabelled)
        branch.extend(relabelled)
        paths.extend(tuple(labels[x - 1] for x in p) for p in w.paths)
        if have_all_stars:
            for s in w.stars:
                if s:
                    stars.append(
                        tuple((labels[u - 1], labels[v - 1]) for u, v in s)
                    )
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            paths.extend((u, v) for u in part_branches[i] for v in part_branches[j])
    witness = StarSubdivisionWitness(
        order=len(branch),
        branch_vertices=tuple(branch),
        paths=tuple(paths),
        stars=tuple(stars) if have_all_stars else None,
    )
    report = verify_witness(joined, witness)
    if not report:
        raise InternalBugError(
            f"joined witness rejected ({report.reason}: {report.detail})"
        )
    return joined, witness


def witness_pipeline(
    g: SimpleGraph, limit: int = GRAPH_LIMIT_DEFAULT
) -> tuple[SimpleGraph, StarSubdivisionWitness]:
    """Decompose, rebuild each factor with a witness, and join back up.

    Returns a graph realizing the degree sequence of the chromatic-critical
    subgraph of g, with a verified witness whose order is at least chi(g).
    Factors whose chromatic number is covered by the sequence clique bound
    are realized around an explicit clique (all pairs direct); the others
    must fit the odd near-regular profile and go through
    build_basic_witness.
    """
    if g.n > limit:
        raise ResourceLimitError(f"graph order {g.n} exceeds limit {limit}")
    if g.n == 0:
        return SimpleGraph(0), StarSubdivisionWitness(0, (), (), ())
    dec = find_join_decomposition(g, limit)
    parts = []
    for factor in dec.factors:
        df = factor.degree_sequence()
        chi_f = chromatic_number(factor, limit)
        omega_f = omega_of_sequence(df)
        if chi_f <= omega_f:
            host = realize_with_clique(df, omega_f)
            w = StarSubdivisionWitness(
                order=omega_f,
                branch_vertices=tuple(range(1, omega_f + 1)),
                paths=tuple(
                    (i, j) for i, j in combinations(range(1, omega_f + 1), 2)
                ),
                stars=(),
            )
            parts.append((host, w))
        else:
            profile = classify_basic_profile(df)
            if profile.verdict is not ProfileVerdict.NONTRIVIAL_BASIC:
                raise InternalBugError(
                    f"factor with chi {chi_f} > clique bound {omega_f} has "
                    f"profile {profile.verdict.value} on {list(df.degrees)}"
                )
            parts.append(build_basic_witness(df))
    out_g, out_w = join_witness_realizations(parts)
    crit, _ = g.induced_subgraph(dec.vertices)
    if sorted(out_g.degrees()) != sorted(crit.degrees()):
        raise InternalBugError(
            f"pipeline output degrees {sorted(out_g.degrees())} do not "
            f"realize the critical subgraph's {sorted(crit.degrees())}"
        )
    chi = chromatic_number(g, limit)
    if out_w.order < chi:
        raise InternalBugError(
            f"pipeline witness order {out_w.order} below chi {chi}"
        )
    return out_g, out_w


@dataclass(frozen=True)
class BoundCheck:
    """One inequality's verdict.

    holds/tight/slack are None when the stats bundle lacks a field the
    inequality needs; ``missing`` then names the absent fields.  slack is an
    exact non-negative Fraction when the inequality holds (0 iff tight) and
    negative when violated.
    """

    name: str
    holds: bool | None
    tight: bool | None
    slack: Fraction | None
    missing: tuple[str, ...] = ()

    @property
    def evaluated(self) -> bool:
        return self.holds is not None

    def to_dict(self) -> dict:
        if not self.evaluated:
            return {"evaluated": False, "missing": list(self.missing)}
        return {
            "evaluated": True,
            "holds": self.holds,
            "tight": self.tight,
            "slack": str(self.slack),
        }


@dataclass(frozen=True)
class BoundReport:
    """Verdicts for all five inequalities, in a fixed order."""

    checks: tuple[BoundCheck, ...]

    def __iter__(self):
        return iter(self.checks)

    def get(self, name: str) -> BoundCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise ArgumentError(f"unknown bound name {name!r}")

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.evaluated)

    def to_dict(self) -> dict:
        return {c.name: c.to_dict() for c in self.checks}


def check_bounds(stats: SequenceStats) -> BoundReport:
    """Evaluate the five chromatic inequalities on a stats bundle.

    sf:       chi <= 6/5 omega + 3/5
    reed:     chi <= 4/5 omega + 1/5 delta_max + 1
    hajos:    chi <= h1
    hajos2a:  omega >= 5/6 chi - 1/2
    hajos2b:  omega >= 5/4 chi - 1/4 delta_max - 5/4

    Inequalities whose fields are missing (None) come back unevaluated
    rather than failing.
    """
    stats.validate()
    chi, omega, h1 = stats.chi, stats.omega, stats.h1
    dmax = stats.delta_max

    def ineq(name: str, fields: dict, small, large) -> BoundCheck:
        missing = tuple(k for k, v in fields.items() if v is None)
        if missing:
            return BoundCheck(name, None, None, None, missing)
        slack = Fraction(large) - Fraction(small)
        return BoundCheck(name, slack >= 0, slack == 0, slack)

    checks = (
        ineq(
            "sf",
            {"chi": chi, "omega": omega},
            chi if chi is not None else 0,
            Fraction(6, 5) * (omega or 0) + Fraction(3, 5),
        ),
        ineq(
            "reed",
            {"chi": chi, "omega": omega},
            chi if chi is not None else 0,
            Fraction(4, 5) * (omega or 0) + Fraction(1, 5) * dmax + 1,
        ),
        ineq(
            "hajos",
            {"chi": chi, "h1": h1},
            chi if chi is not None else 0,
            h1 if h1 is not None else 0,
        ),
        ineq(
            "hajos2a",
            {"chi": chi, "omega": omega},
            Fraction(5, 6) * (chi or 0) - Fraction(1, 2),
            omega if omega is not None else 0,
        ),
        ineq(
            "hajos2b",
            {"chi": chi, "omega": omega},
            Fraction(5, 4) * (chi or 0) - Fraction(1, 4) * dmax - Fraction(5, 4),
            omega if omega is not None else 0,
        ),
    )
    return BoundReport(checks)
