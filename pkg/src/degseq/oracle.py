"""Exhaustive ground truth at small sizes.

This layer computes sequence-level quantities by brute force so the clever
parts of the package have something independent to agree with: it
enumerates every graphic sequence of a given length, every graph on up to a
handful of vertices, and from those the exact maxima of chromatic number,
clique number and witness order over all realizations of a sequence.  The
``sweep`` driver runs the package's inequalities and cross-checks over the
whole space up to a size cap and reports violations (expected none) and
tightness witnesses.

Everything here is deterministic: graphs are cataloged per vertex count
once (cached), sequences enumerate in descending lexicographic order, and
sweep reports list findings in enumeration order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby

from .analysis import (
    GRAPH_LIMIT_DEFAULT,
    chromatic_number,
    clique_number,
    h1_of_graph,
)
from .errors import (
    ArgumentError,
    InternalBugError,
    NotGraphicError,
    ResourceLimitError,
)
from .graphs import SimpleGraph, canonical_key
from .hajos import check_bounds
from .limits import omega_limit, oracle_limit
from .sequences import (
    SOURCE_ORACLE,
    SOURCE_RAO,
    DegreeSequence,
    SequenceStats,
    is_graphic,
    largecl_check,
    omega_of_sequence,
    rao_omega_at_least,
)

__all__ = [
    "nonisomorphic_graphs",
    "enumerate_graphic_sequences",
    "has_realization_bruteforce",
    "chi_of_sequence",
    "h1_of_sequence",
    "omega_of_sequence_bruteforce",
    "CheckOutcome",
    "SweepReport",
    "sweep",
    "CHI_CHECKS",
    "OMEGA_CHECKS",
    "ALL_CHECKS",
]

# graphs on 1..7 vertices up to isomorphism; used as a self-test of the
# catalog builder every time it runs
KNOWN_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def _coerce(seq) -> DegreeSequence:
    return seq if isinstance(seq, DegreeSequence) else DegreeSequence(seq)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """All graphs on n vertices, one per isomorphism class.

    Built incrementally: every n-vertex graph arises from an (n-1)-vertex
    graph by adding vertex n with some neighborhood, so extending the whole
    (n-1) catalog and deduplicating by canonical form covers everything.
    The result is sorted by canonical form, hence stable.
    """
    if n < 1:
        raise ArgumentError(f"need n >= 1, got {n}")
    if n == 1:
        return (SimpleGraph(1),)
    seen: dict = {}
    for g in nonisomorphic_graphs(n - 1):
        base = list(g.edges)
        for mask in range(2 ** (n - 1)):
            edges = base + [(i + 1, n) for i in range(n - 1) if mask >> i & 1]
            h = SimpleGraph(n, edges)
            key = canonical_key(h)
            if key not in seen:
                seen[key] = h
    out = tuple(seen[k] for k in sorted(seen))
    if n in KNOWN_GRAPH_COUNTS and len(out) != KNOWN_GRAPH_COUNTS[n]:
        raise InternalBugError(
            f"catalog for n={n} has {len(out)} classes, "
            f"expected {KNOWN_GRAPH_COUNTS[n]}"
        )
    return out


@lru_cache(maxsize=None)
def _sequence_invariants(n: int) -> dict:
    """Per degree sequence of length n: (max chi, max omega, max h1)."""
    table: dict = {}
    for g in nonisomorphic_graphs(n):
        ds = g.degree_sequence().degrees
        chi = chromatic_number(g)
        om = clique_number(g)
        h1, _ = h1_of_graph(g)
        cur = table.get(ds)
        if cur is None:
            table[ds] = [chi, om, h1]
        else:
            cur[0] = max(cur[0], chi)
            cur[1] = max(cur[1], om)
            cur[2] = max(cur[2], h1)
    return {k: tuple(v) for k, v in table.items()}


def _prefix_feasible(n: int, prefix: list[int]) -> bool:
    # optimistic Erdos-Gallai: assume each of the n-k open slots
    # contributes its maximum min(last, t)
    k = len(prefix)
    last = prefix[-1]
    total = 0
    for t in range(1, k + 1):
        total += prefix[t - 1]
        rhs = t * (t - 1)
        for i in range(t, k):
            rhs += min(prefix[i], t)
        rhs += (n - k) * min(last, t)
        if total > rhs:
            return False
    return True


def enumerate_graphic_sequences(n: int, *, limit: int | None = None):
    """Every non-increasing graphic sequence of length n, zeros allowed.

    Yields DegreeSequence objects in descending lexicographic order.  The
    default length cap comes from DEGSEQ_ORACLE_LIMIT; pass ``limit``
    explicitly to acknowledge going past it.
    """
    if limit is None:
        limit = omega_limit()
    if not 1 <= n <= limit:
        raise ResourceLimitError(f"length {n} outside 1..{limit}")
    return _sequences(n)


def _sequences(n: int):
    prefix: list[int] = []

    def rec():
        k = len(prefix)
        if k == n:
            if sum(prefix) % 2 == 0 and is_graphic(prefix):
                yield DegreeSequence(prefix)
            return
        hi = prefix[-1] if prefix else n - 1
        for v in range(hi, -1, -1):
            prefix.append(v)
            if _prefix_feasible(n, prefix):
                yield from rec()
            prefix.pop()

    return rec()


def _take_splits(runs, need):
    # ways to draw `need` items from runs of equal values, one count per run
    if not runs:
        if need == 0:
            yield ()
        return
    if need == 0:
        yield (0,) * len(runs)
        return
    _, cnt = runs[0]
    rest_total = sum(c for _, c in runs[1:])
    for take in range(min(cnt, need), max(0, need - rest_total) - 1, -1):
        for tail in _take_splits(runs[1:], need - take):
            yield (take,) + tail


@lru_cache(maxsize=None)
def _solvable(resid: tuple[int, ...]) -> bool:
    # resid: positive demands, sorted descending
    if not resid:
        return True
    first, rest = resid[0], resid[1:]
    if first > len(rest):
        return False
    runs = [(v, len(list(g))) for v, g in groupby(rest)]
    for split in _take_splits(runs, first):
        nxt = []
        for (v, cnt), take in zip(runs, split):
            nxt.extend([v - 1] * take)
            nxt.extend([v] * (cnt - take))
        state = tuple(sorted((x for x in nxt if x > 0), reverse=True))
        if _solvable(state):
            return True
    return False


def has_realization_bruteforce(seq) -> bool:
    """Whether any graph has these degrees, by direct search.

    Independent of the counting characterization behind is_graphic: satisfy
    the largest demand by connecting to a choice of other slots, recurse on
    the rest.  States are canonicalized and memoized, but there is no
    arithmetic pruning.
    """
    s = _coerce(seq)
    if s.n and s.max_deg > s.n - 1:
        return False
    return _solvable(tuple(x for x in s.degrees if x > 0))


def _cycle_partitions(n: int, mx: int | None = None):
    # partitions of n into parts >= 3, non-increasing
    if mx is None:
        mx = n
    if n == 0:
        yield ()
        return
    for head in range(min(n, mx), 2, -1):
        if n - head in (1, 2):
            continue
        for tail in _cycle_partitions(n - head, head):
            yield (head,) + tail


def _disjoint_cycles(parts) -> SimpleGraph:
    edges = []
    off = 0
    for p in parts:
        edges.extend((off + i, off + i % p + 1) for i in range(1, p + 1))
        off += p
    return SimpleGraph(off, edges)


def _regular_family_chi(n: int) -> int:
    # realizations of the constant sequence (n-3)^n are exactly the
    # complements of disjoint cycle covers of n vertices
    best = 0
    for parts in _cycle_partitions(n):
        g = _disjoint_cycles(parts).complement()
        best = max(best, chromatic_number(g))
    return best


def chi_of_sequence(seq, *, limit: int | None = None) -> int:
    """Largest chromatic number over all realizations of the sequence."""
    s = _coerce(seq)
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    n = s.n
    if n == 0:
        return 0
    if limit is None:
        limit = oracle_limit()
    if n >= 3 and s.max_deg == s.min_deg == n - 3 and n <= GRAPH_LIMIT_DEFAULT:
        return _regular_family_chi(n)
    if n > limit:
        raise ResourceLimitError(f"sequence length {n} exceeds limit {limit}")
    return _sequence_invariants(n)[s.degrees][0]


def omega_of_sequence_bruteforce(seq, *, limit: int | None = None) -> int:
    """Largest clique number over all realizations, from the graph catalog."""
    s = _coerce(seq)
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    if s.n == 0:
        return 0
    if limit is None:
        limit = oracle_limit()
    if s.n > limit:
        raise ResourceLimitError(f"sequence length {s.n} exceeds limit {limit}")
    return _sequence_invariants(s.n)[s.degrees][1]


def h1_of_sequence(seq, *, limit: int | None = None) -> int:
    """Largest witness order over all realizations of the sequence."""
    s = _coerce(seq)
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    if s.n == 0:
        return 0
    if limit is None:
        limit = oracle_limit()
    if s.n > limit:
        raise ResourceLimitError(f"sequence length {s.n} exceeds limit {limit}")
    return _sequence_invariants(s.n)[s.degrees][2]


CHI_CHECKS = frozenset({"hajos", "sf", "reed", "hajos2", "rao_vs_oracle"})
OMEGA_CHECKS = frozenset({"eg_vs_oracle", "largecl_vs_rao"})
ALL_CHECKS = CHI_CHECKS | OMEGA_CHECKS
_CHECK_ORDER = (
    "hajos",
    "sf",
    "reed",
    "hajos2",
    "rao_vs_oracle",
    "eg_vs_oracle",
    "largecl_vs_rao",
)


@dataclass(frozen=True)
class CheckOutcome:
    """One check's findings: the sizes it ran at and what it flagged."""

    max_n: int
    violations: tuple[tuple[int, ...], ...]
    tight_cases: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "violations": [list(s) for s in self.violations],
            "tight_cases": [list(s) for s in self.tight_cases],
        }


@dataclass(frozen=True)
class SweepReport:
    """Everything a sweep found, serializable and printable."""

    n_max: int
    sequences_checked: int
    outcomes: dict = field(default_factory=dict)
    per_n: dict = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def has_violations(self) -> bool:
        return any(o.violations for o in self.outcomes.values())

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "sequences_checked": self.sequences_checked,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "checks": {k: o.to_dict() for k, o in self.outcomes.items()},
        }

    def summary(self) -> str:
        lines = [
            f"sweep to n={self.n_max}: {self.sequences_checked} graphic "
            f"sequences, {len(self.outcomes)} checks, "
            f"{sum(len(o.violations) for o in self.outcomes.values())} "
            f"violations ({self.elapsed_seconds:.1f}s)"
        ]
        lines.append(f"{'check':<16} {'max_n':>5} {'violations':>10} {'tight':>6}")
        for name in _CHECK_ORDER:
            if name not in self.outcomes:
                continue
            o = self.outcomes[name]
            lines.append(
                f"{name:<16} {o.max_n:>5} {len(o.violations):>10} "
                f"{len(o.tight_cases):>6}"
            )
        return "\n".join(lines)


def _all_candidate_tuples(n: int):
    # every non-increasing tuple over 0..n-1, graphic or not
    prefix: list[int] = []

    def rec():
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        hi = prefix[-1] if prefix else n - 1
        for v in range(hi, -1, -1):
            prefix.append(v)
            yield from rec()
            prefix.pop()

    return rec()


def sweep(n_max: int, checks=None, *, force: bool = False) -> SweepReport:
    """Run selected checks over every graphic sequence up to length n_max.

    Checks needing the chromatic oracle cap at the chi layer limit, the
    rest at the omega layer limit; exceeding a cap raises
    ResourceLimitError whose ``partial`` attribute holds the report for the
    sizes that fit.  force=True acknowledges the cost and lifts the caps.
    """
    if checks is None:
        checks = set(ALL_CHECKS)
    checks = set(checks)
    unknown = checks - ALL_CHECKS
    if unknown:
        raise ArgumentError(f"unknown checks: {sorted(unknown)}")
    if not checks:
        raise ArgumentError("no checks selected")
    if n_max < 1:
        raise ArgumentError(f"n_max must be >= 1, got {n_max}")

    start = time.monotonic()
    cap = {
        c: (oracle_limit() if c in CHI_CHECKS else omega_limit()) for c in checks
    }
    if force:
        eff = {c: n_max for c in checks}
    else:
        eff = {c: min(n_max, cap[c]) for c in checks}
    capped = sorted(c for c in checks if eff[c] < n_max)
    top = max(eff.values())

    viols: dict = {c: [] for c in checks}
    tights: dict = {c: [] for c in checks}
    per_n: dict = {}
    for n in range(1, top + 1):
        active = {c for c in checks if n <= eff[c]}
        if "eg_vs_oracle" in active:
            for cand in _all_candidate_tuples(n):
                if is_graphic(cand) != has_realization_bruteforce(cand):
                    viols["eg_vs_oracle"].append(cand)
        count = 0
        chi_active = active & CHI_CHECKS
        for s in enumerate_graphic_sequences(n, limit=max(n, omega_limit())):
            count += 1
            ds = s.degrees
            om = omega_of_sequence(s)
            if chi_active:
                chi = chi_of_sequence(s, limit=max(n, oracle_limit()))
                h1v = (
                    h1_of_sequence(s, limit=max(n, oracle_limit()))
                    if "hajos" in chi_active
                    else None
                )
                stats = SequenceStats(
                    chi=chi,
                    omega=om,
                    h1=h1v,
                    delta_max=s.max_deg,
                    sources={
                        "chi": SOURCE_ORACLE,
                        "omega": SOURCE_RAO,
                        "h1": SOURCE_ORACLE,
                    },
                )
                rep = check_bounds(stats)
                for name, keys in (
                    ("sf", ("sf",)),
                    ("reed", ("reed",)),
                    ("hajos", ("hajos",)),
                    ("hajos2", ("hajos2a", "hajos2b")),
                ):
                    if name not in chi_active:
                        continue
                    parts = [rep.get(k) for k in keys]
                    if not all(p.holds for p in parts):
                        viols[name].append(ds)
                    elif any(p.tight for p in parts):
                        tights[name].append(ds)
                if "rao_vs_oracle" in chi_active:
                    if om != omega_of_sequence_bruteforce(
                        s, limit=max(n, oracle_limit())
                    ):
                        viols["rao_vs_oracle"].append(ds)
            if "largecl_vs_rao" in active and n % 2 == 1:
                k = (n + 1) // 2
                if s.min_deg >= k - 1:
                    if largecl_check(s, k) != rao_omega_at_least(s, k):
                        viols["largecl_vs_rao"].append(ds)
        per_n[n] = count

    outcomes = {
        c: CheckOutcome(
            max_n=eff[c],
            violations=tuple(viols[c]),
            tight_cases=tuple(tights[c]),
        )
        for c in _CHECK_ORDER
        if c in checks
    }
    report = SweepReport(
        n_max=n_max,
        sequences_checked=sum(per_n.values()),
        outcomes=outcomes,
        per_n=per_n,
        elapsed_seconds=time.monotonic() - start,
    )
    if capped:
        err = ResourceLimitError(
            f"checks {capped} capped below n_max={n_max}; "
            "pass force to acknowledge the cost"
        )
        err.partial = report
        raise err
    return report
