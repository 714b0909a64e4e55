"""Circular perfect matchings, their crossings and the rotation action.

Points are stored 0-based (``0 .. 2n-1``, clockwise).  Everything a person
reads or types (text form, JSON, :func:`make_matching`) is 1-based.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import kernel

UNMATCHED = -1

Chord = tuple[int, int]


class MatchingError(ValueError):
    """Invalid matching data; ``point`` is the offending 1-based label."""

    def __init__(self, point: int, message: str | None = None):
        self.point = point
        super().__init__(message or f"{type(self).__name__}({point})")


class DuplicatePoint(MatchingError):
    pass


class MissingPoint(MatchingError):
    pass


class OutOfRange(MatchingError):
    pass


class NotClassifiable(ValueError):
    pass


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@dataclass(frozen=True)
class Matching:
    """A perfect matching of ``2n`` points on a circle.

    ``partner[i]`` is the point matched to ``i``.  Instances are immutable
    and hashable, so they can go straight into sets.
    """

    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        N = 2 * self.n
        if self.n < 1 or len(self.partner) != N:
            raise ValueError(f"partner must have length 2n = {N}")
        for i, p in enumerate(self.partner):
            if not 0 <= p < N:
                raise OutOfRange(p + 1)
            if p == i or self.partner[p] != i:
                raise DuplicatePoint(i + 1, f"partner is not a fixed-point-free involution at {i + 1}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Chord]) -> Matching:
        """Build from 0-based pairs without the detailed diagnostics of :func:`make_matching`."""
        partner = [UNMATCHED] * (2 * n)
        for a, b in pairs:
            partner[a] = b
            partner[b] = a
        return cls(n, tuple(partner))

    @property
    def size(self) -> int:
        return 2 * self.n

    def pairs(self) -> list[Chord]:
        """0-based chords ``(min, max)`` sorted by first element."""
        return [(i, p) for i, p in enumerate(self.partner) if i < p]

    def to_text(self) -> str:
        return format_chords(self.pairs())

    def to_dict(self) -> dict:
        return {"n": self.n, "pairs": [[a + 1, b + 1] for a, b in self.pairs()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class PartialMatching:
    """A matching on part of the ``2n`` points; free points hold ``UNMATCHED``."""

    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        if len(self.partner) != 2 * self.n:
            raise ValueError(f"partner must have length 2n = {2 * self.n}")
        for i, p in enumerate(self.partner):
            if p != UNMATCHED and (p == i or self.partner[p] != i):
                raise DuplicatePoint(i + 1, f"partner is not an involution at {i + 1}")

    def pairs(self) -> list[Chord]:
        return [(i, p) for i, p in enumerate(self.partner) if p != UNMATCHED and i < p]

    def unmatched(self) -> list[int]:
        return [i for i, p in enumerate(self.partner) if p == UNMATCHED]

    def to_text(self) -> str:
        return format_chords(self.pairs())

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class LabelSubset:
    """A subset of ``{0, .., 2n-1}``; ``members`` is strictly increasing."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        prev = -1
        for m in self.members:
            if m <= prev:
                raise ValueError("members must be strictly increasing")
            if m >= 2 * self.n:
                raise OutOfRange(m + 1)
            prev = m

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> LabelSubset:
        """0-based members in any order."""
        return cls(n, tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def shifted(self, j: int) -> LabelSubset:
        N = 2 * self.n
        return LabelSubset.of(self.n, ((m + j) % N for m in self.members))

    def to_text(self) -> str:
        return ",".join(str(m + 1) for m in self.members)

    def __str__(self) -> str:
        return self.to_text()


def make_subset(n: int, labels: Iterable[int]) -> LabelSubset:
    """Subset from 1-based labels."""
    members = []
    seen = set()
    for a in labels:
        if not 1 <= a <= 2 * n:
            raise OutOfRange(a)
        if a in seen:
            raise DuplicatePoint(a)
        seen.add(a)
        members.append(a - 1)
    return LabelSubset.of(n, members)


def parse_subset(n: int, text: str) -> LabelSubset:
    text = text.strip()
    if not text:
        return LabelSubset(n, ())
    return make_subset(n, (int(tok) for tok in text.split(",")))


class Kind(enum.Enum):
    ONE_CROSSING = "one-crossing"
    T = "T"
    R = "R"
    OTHER = "other"


@dataclass(frozen=True)
class CrossingTypeClass:
    kind: Kind
    k: int | None
    skeleton_size: int

    def __str__(self) -> str:
        if self.kind in (Kind.T, Kind.R):
            return f"{self.kind.value}({self.k})"
        return self.kind.value


def T(k: int) -> CrossingTypeClass:
    return CrossingTypeClass(Kind.T, k, k)


def R(k: int) -> CrossingTypeClass:
    return CrossingTypeClass(Kind.R, k, 3 * k)


# -- text form -------------------------------------------------------------

def format_chords(chords: Iterable[Chord]) -> str:
    """Canonical 1-based ``(a,b)(c,d)...`` text of 0-based chords."""
    norm = sorted((min(a, b), max(a, b)) for a, b in chords)
    return "".join(f"({a + 1},{b + 1})" for a, b in norm)


_PAIR_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_pairs(text: str) -> list[Chord]:
    """1-based pairs from ``(a,b)(c,d)...``; raises ``ValueError`` on junk."""
    stripped = _PAIR_RE.sub("", text)
    if stripped.strip():
        raise ValueError(f"cannot parse matching text near {stripped.strip()[:20]!r}")
    return [(int(a), int(b)) for a, b in _PAIR_RE.findall(text)]


def parse_matching(text: str, n: int | None = None) -> Matching:
    pairs = parse_pairs(text)
    return make_matching(len(pairs) if n is None else n, pairs)


def matching_from_json(data: str | dict) -> Matching:
    if isinstance(data, str):
        data = json.loads(data)
    return make_matching(int(data["n"]), [tuple(p) for p in data["pairs"]])


# -- operations ------------------------------------------------------------

def make_matching(n: int, pairs: Sequence[Sequence[int]]) -> Matching:
    """Validate 1-based ``pairs`` and return the matching they describe."""
    if n < 1:
        raise ValueError("n must be positive")
    N = 2 * n
    partner = [UNMATCHED] * N
    for pair in pairs:
        a, b = pair
        for x in (a, b):
            if not 1 <= x <= N:
                raise OutOfRange(x)
        if a == b:
            raise DuplicatePoint(a)
        for x in (a, b):
            if partner[x - 1] != UNMATCHED:
                raise DuplicatePoint(x)
        partner[a - 1] = b - 1
        partner[b - 1] = a - 1
    for i, p in enumerate(partner):
        if p == UNMATCHED:
            raise MissingPoint(i + 1)
    return Matching(n, tuple(partner))


def rotate(tau: Matching, j: int) -> Matching:
    """Shift every chord endpoint by ``j`` (mod 2n)."""
    N = tau.size
    j %= N
    if j == 0:
        return tau
    partner = [0] * N
    for i, p in enumerate(tau.partner):
        partner[(i + j) % N] = (p + j) % N
    return Matching(tau.n, tuple(partner))


def chords_cross(c1: Chord, c2: Chord) -> bool:
    a, b = sorted(c1)
    c, d = sorted(c2)
    return (a < c < b) != (a < d < b)


def crossing_number(tau: Matching) -> int:
    chords = tau.pairs()
    return sum(1 for c1, c2 in combinations(chords, 2) if chords_cross(c1, c2))


def is_fixed(tau: Matching, j: int) -> bool:
    N = tau.size
    p = tau.partner
    return all(p[(i + j) % N] == (p[i] + j) % N for i in range(N))


def period(tau: Matching) -> int:
    """Least ``j >= 1`` with ``rotate(tau, j) == tau``."""
    for d in divisors(tau.size):
        if is_fixed(tau, d):
            return d
    raise AssertionError("unreachable: the full turn fixes everything")


def max_crossings(n: int) -> int:
    return n * (n - 1) // 2


def _search(partner: list[int], N: int, c: int, kmax: int | None) -> Iterator[int]:
    # yields the crossing count of each completed matching; partner is
    # mutated in place and is complete at yield time
    try:
        i = partner.index(UNMATCHED)
    except ValueError:
        yield c
        return
    seen = 0
    for j in range(i + 1, N):
        if partner[j] != UNMATCHED:
            seen += 1
            continue
        # every matched point strictly inside (i, j) has its partner below i
        if kmax is not None and c + seen > kmax:
            break
        partner[i] = j
        partner[j] = i
        yield from _search(partner, N, c + seen, kmax)
        partner[i] = partner[j] = UNMATCHED


def enumerate_matchings(n: int, k_filter: int | None = None, prune: bool = True) -> Iterator[Matching]:
    """Yield every perfect matching of ``2n`` points (with ``k_filter`` crossings).

    The smallest free point is matched first, partners in increasing order,
    so the stream order is fixed.  With ``prune`` a branch is abandoned as
    soon as its partial crossing count passes ``k_filter``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k_filter is not None and k_filter > max_crossings(n):
        return
    N = 2 * n
    partner = [UNMATCHED] * N
    kmax = k_filter if prune else None
    for c in _search(partner, N, 0, kmax):
        if k_filter is None or c == k_filter:
            yield Matching(n, tuple(partner))


@lru_cache(maxsize=None)
def period_histogram(n: int, k: int) -> tuple[int, ...]:
    """``h[d]`` = number of matchings in P(n, k) with period ``d``."""
    if k > max_crossings(n):
        return (0,) * (2 * n + 1)
    return tuple(kernel.period_histogram(n, k))


def count_fixed(n: int, k: int, j: int) -> int:
    """Number of matchings with ``k`` crossings fixed by rotation by ``j``."""
    hist = period_histogram(n, k)
    g = gcd(j % (2 * n), 2 * n)
    return sum(hist[d] for d in divisors(g))


def fixed_table(n: int, k: int) -> dict[int, int]:
    return {j: count_fixed(n, k, j) for j in range(1, 2 * n + 1)}


# -- skeleton reduction ----------------------------------------------------

def reduce_to_skeleton(tau: Matching, order: str = "increasing") -> tuple[frozenset[Chord], list[Chord]]:
    """Peel chords that cross nothing and span adjacent remaining points.

    Returns ``(skeleton, removed)`` with 0-based chords; ``removed`` is in
    deletion order.  ``order`` picks which qualifying chord goes first
    (by chord minimum); the result does not depend on it.
    """
    if order not in ("increasing", "decreasing"):
        raise ValueError("order must be 'increasing' or 'decreasing'")
    alive = sorted(tau.pairs(), reverse=(order == "decreasing"))
    crossers = {c: {d for d in alive if d != c and chords_cross(c, d)} for c in alive}
    covered = sorted(p for c in alive for p in c)
    removed = []
    while True:
        for c in alive:
            if crossers[c]:
                continue
            a, b = c
            ia, ib = covered.index(a), covered.index(b)
            if ib - ia == 1 or (ia == 0 and ib == len(covered) - 1):
                break
        else:
            break
        alive.remove(c)
        covered.remove(a)
        covered.remove(b)
        removed.append(c)
    return frozenset(alive), removed


def _rotate_chords(chords: Iterable[Chord], j: int, N: int) -> frozenset[Chord]:
    return frozenset(tuple(sorted(((a + j) % N, (b + j) % N))) for a, b in chords)


def classify(tau: Matching) -> CrossingTypeClass:
    """Crossing type from the skeleton size.

    Raises :class:`NotClassifiable` for three crossings whose skeleton is not
    symmetric under a third of a turn.
    """
    skeleton, _ = reduce_to_skeleton(tau)
    size = len(skeleton)
    c = crossing_number(tau)
    if c == 1:
        return CrossingTypeClass(Kind.ONE_CROSSING, None, size)
    if c == 2:
        return CrossingTypeClass(Kind.T, size, size)
    if c == 3:
        N = tau.size
        if N % 3 == 0 and size % 3 == 0 and _rotate_chords(skeleton, N // 3, N) == skeleton:
            return CrossingTypeClass(Kind.R, size // 3, size)
        raise NotClassifiable(f"{tau.to_text()} has three crossings but no symmetric skeleton")
    return CrossingTypeClass(Kind.OTHER, None, size)
