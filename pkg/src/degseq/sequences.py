"""Degree sequences and the classical realizability and clique tests on them.

A degree sequence D = (d_1 >= d_2 >= ... >= d_n) is *graphic* if some simple
graph has exactly these vertex degrees.  Everything in this module is pure
integer arithmetic on the sorted sequence:

* ``is_graphic``            Erdos-Gallai test (even sum plus prefix bounds).
* ``rao_omega_at_least``    Rao's condition: some realization contains a
                            clique of order k, with the clique placed on the
                            k largest degrees.
* ``omega_of_sequence``     largest such k (written omega(D)).
* ``yinli_sufficient``      the Yin-Li sufficient condition for Rao's test.
* ``largecl_check``    an equivalent form of Rao's condition specialised
                            to sequences of odd length n = 2k-1 with
                            d_n >= k-1.
* ``classify_basic_profile``  the case split used by the witness builder.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum

from .errors import ArgumentError, NotGraphicError, ParseError

__all__ = [
    "DegreeSequence",
    "parse_sequence",
    "is_graphic",
    "rao_omega_at_least",
    "omega_of_sequence",
    "yinli_sufficient",
    "largecl_check",
    "ProfileVerdict",
    "BasicProfile",
    "classify_basic_profile",
    "SequenceStats",
    "SOURCE_RAO",
    "SOURCE_ORACLE",
    "SOURCE_WITNESS",
]

SOURCE_RAO = "rao-exact"
SOURCE_ORACLE = "oracle-enumeration"
SOURCE_WITNESS = "witness-lower-bound"


class DegreeSequence:
    """An immutable multiset of vertex degrees, stored non-increasing.

    Construction sorts the input and validates that every entry is a
    non-negative integer.  A DegreeSequence may well be non-graphic; run
    :func:`is_graphic` to find out.  The empty sequence is allowed and is
    graphic (the empty graph).
    """

    __slots__ = ("degrees", "n", "sum", "min_deg", "max_deg")

    def __init__(self, degrees: Iterable[int]):
        vals: list[int] = []
        for x in degrees:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ArgumentError(f"degree {x!r} is not an integer")
            if x < 0:
                raise ArgumentError(f"degree {x} is negative")
            vals.append(x)
        vals.sort(reverse=True)
        self.degrees: tuple[int, ...] = tuple(vals)
        self.n: int = len(vals)
        self.sum: int = sum(vals)
        self.max_deg: int = vals[0] if vals else 0
        self.min_deg: int = vals[-1] if vals else 0

    def d(self, i: int) -> int:
        """The i-th largest degree, 1-based, matching the usual d_i notation."""
        if not 1 <= i <= self.n:
            raise ArgumentError(f"index {i} out of range 1..{self.n}")
        return self.degrees[i - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, DegreeSequence) and self.degrees == other.degrees

    def __hash__(self) -> int:
        return hash(self.degrees)

    def __repr__(self) -> str:
        return f"DegreeSequence({list(self.degrees)!r})"


def _coerce(seq) -> DegreeSequence:
    if isinstance(seq, DegreeSequence):
        return seq
    return DegreeSequence(seq)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse comma- or whitespace-separated non-negative integers.

    Raises ParseError naming the offending token.  An empty string parses to
    the empty sequence.
    """
    tokens = text.replace(",", " ").split()
    vals = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"invalid token {tok!r}: expected a non-negative integer") from None
        if v < 0:
            raise ParseError(f"invalid token {tok!r}: degrees must be non-negative")
        vals.append(v)
    return DegreeSequence(vals)


def is_graphic(seq) -> bool:
    """Erdos-Gallai test.

    D is graphic iff the sum is even and for every prefix length t,

        sum(d_1..d_t) <= t(t-1) + sum(min(d_i, t) for i > t).

    Checking prefixes only is equivalent to checking every index subset
    because the sequence is sorted non-increasing.
    """
    s = _coerce(seq)
    d = s.degrees
    n = s.n
    if n == 0:
        return True
    if s.sum % 2 != 0:
        return False
    if d[0] > n - 1:
        return False
    lhs = 0
    for t in range(1, n + 1):
        lhs += d[t - 1]
        rhs = t * (t - 1) + sum(min(d[i], t) for i in range(t, n))
        if lhs > rhs:
            return False
    return True


def rao_omega_at_least(seq, k: int) -> bool:
    """Rao's condition: some realization of D has a clique of order >= k.

    True iff the sum is even, d_k >= k-1, and for all 0 <= s <= k and
    0 <= t <= n-k,

        sum(d_1..d_s) + sum(d_{k+1}..d_{k+t}) - (s+t)(s+t-1)
            <= sum(min(s+t, d_i + s - k + 1) for s < i <= k)
             + sum(min(s+t, d_i) for i > k+t).

    When this holds the clique can be taken on vertices carrying the degrees
    d_1..d_k.  The condition is self-contained: if it holds, D is graphic.
    """
    s_ = _coerce(seq)
    d = s_.degrees
    n = s_.n
    if not 1 <= k <= n:
        raise ArgumentError(f"k={k} out of range 1..{n}")
    if s_.sum % 2 != 0:
        return False
    if d[k - 1] < k - 1:
        return False
    pre = [0] * (n + 1)
    for i, x in enumerate(d):
        pre[i + 1] = pre[i] + x
    for s in range(0, k + 1):
        for t in range(0, n - k + 1):
            lhs = pre[s] + (pre[k + t] - pre[k]) - (s + t) * (s + t - 1)
            rhs = sum(min(s + t, d[i - 1] + s - k + 1) for i in range(s + 1, k + 1))
            rhs += sum(min(s + t, d[i - 1]) for i in range(k + t + 1, n + 1))
            if lhs > rhs:
                return False
    return True


def omega_of_sequence(seq) -> int:
    """omega(D): the largest clique order achievable over all realizations.

    Exact via Rao's condition, searched downward from min(n, max degree + 1).
    The empty sequence yields 0.
    """
    s = _coerce(seq)
    if s.n == 0:
        return 0
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    for k in range(min(s.n, s.max_deg + 1), 0, -1):
        if rao_omega_at_least(s, k):
            return k
    raise AssertionError("unreachable: k=1 always holds for a graphic sequence")


def yinli_sufficient(seq, k: int) -> bool:
    """Yin-Li sufficient condition for Rao's test.

    True iff d_k >= k-1, n >= 2k, and d_{2k} >= k-2.  For graphic D this
    implies rao_omega_at_least(D, k); the converse fails in general.
    """
    s = _coerce(seq)
    if k < 1:
        raise ArgumentError(f"k={k} must be at least 1")
    if s.n < 2 * k:
        return False
    return s.d(k) >= k - 1 and s.d(2 * k) >= k - 2


def largecl_check(seq, k: int) -> bool:
    """Rao's condition specialised to odd length n = 2k-1 with d_n >= k-1.

    Under those preconditions, rao_omega_at_least(D, k) is equivalent to

        sum(d_i - d_k for i < k) + sum(d_k - d_i for i > k) >= 2k - 2 - d_k.

    Raises ArgumentError if the length or minimum-degree precondition fails.
    """
    s = _coerce(seq)
    if k < 1:
        raise ArgumentError(f"k={k} must be at least 1")
    if s.n != 2 * k - 1:
        raise ArgumentError(f"length {s.n} != 2k-1 = {2 * k - 1}")
    if s.n and s.min_deg < k - 1:
        raise ArgumentError(f"min degree {s.min_deg} < k-1 = {k - 1}")
    dk = s.d(k)
    spread = sum(s.d(i) - dk for i in range(1, k)) + sum(dk - s.d(i) for i in range(k + 1, 2 * k))
    return spread >= 2 * k - 2 - dk


class ProfileVerdict(Enum):
    """Outcome of the case split performed by classify_basic_profile."""

    NOT_ODD_LENGTH = "NotOddLength"
    MIN_DEG_TOO_LOW = "MinDegTooLow"
    LARGE_CLIQUE_EXISTS = "LargeCliqueExists"
    NONTRIVIAL_BASIC = "NontrivialBasicProfile"


@dataclass(frozen=True)
class BasicProfile:
    """Verdict plus m where n = 2m+1 (m is None for even length)."""

    verdict: ProfileVerdict
    m: int | None = None


def classify_basic_profile(seq) -> BasicProfile:
    """Decide whether D has the shape the witness construction needs.

    For graphic D of odd length n = 2m+1 with minimum degree >= m, either
    largecl_check(D, m+1) holds (some realization contains a clique of
    order m+1) or D is a NontrivialBasicProfile and build_basic_witness
    applies.  Raises NotGraphicError on non-graphic input.
    """
    s = _coerce(seq)
    if not is_graphic(s):
        raise NotGraphicError(f"{list(s.degrees)} is not graphic")
    if s.n % 2 == 0:
        return BasicProfile(ProfileVerdict.NOT_ODD_LENGTH)
    m = (s.n - 1) // 2
    if s.min_deg < m:
        return BasicProfile(ProfileVerdict.MIN_DEG_TOO_LOW, m)
    if largecl_check(s, m + 1):
        return BasicProfile(ProfileVerdict.LARGE_CLIQUE_EXISTS, m)
    return BasicProfile(ProfileVerdict.NONTRIVIAL_BASIC, m)


@dataclass
class SequenceStats:
    """Bundle of sequence-level invariants with per-field provenance tags.

    chi    largest chromatic number over realizations, when computed
    omega  largest clique order over realizations, when computed
    h1     largest star-subdivision witness order over realizations
    delta_max  the maximum degree of the sequence

    sources maps field name to one of SOURCE_RAO, SOURCE_ORACLE,
    SOURCE_WITNESS.  Fields left as None were not evaluated.
    """

    chi: int | None = None
    omega: int | None = None
    h1: int | None = None
    delta_max: int = 0
    sources: dict[str, str] = field(default_factory=dict)

    def validate(self) -> None:
        if self.omega is not None and self.h1 is not None and self.omega > self.h1:
            raise ArgumentError(f"omega={self.omega} exceeds h1={self.h1}")
        for name in ("chi", "omega", "h1"):
            if getattr(self, name) is not None and getattr(self, name) < 0:
                raise ArgumentError(f"{name} is negative")
