"""Noncrossing construction from a seed subset, and what it builds.

``ncc`` turns a subset S of the circle points into a noncrossing partial
matching with |S| chords.  Completing the leftover points gives the
one-crossing bijection and the k-to-1 maps onto the two- and three-crossing
types.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

from .matchcore import (
    UNMATCHED,
    CrossingTypeClass,
    Kind,
    LabelSubset,
    Matching,
    NotClassifiable,
    PartialMatching,
    chords_cross,
    classify,
    crossing_number,
    is_fixed,
)


class NccError(ValueError):
    pass


class SubsetTooLarge(NccError):
    pass


class Stalled(NccError):
    """No offset can match the remaining seeds; carries the partial state."""

    def __init__(self, message: str, partial: PartialMatching):
        self.partial = partial
        super().__init__(message)


class WrongUnmatchedCount(NccError):
    pass


class WrongSubsetSize(NccError):
    pass


class NotOneCrossing(NccError):
    pass


class ArityMismatch(NccError):
    pass


class IndivisibleSize(NccError):
    pass


def ncc(n: int, S: LabelSubset, scan: str = "increasing", trace: list | None = None) -> PartialMatching:
    """Match each seed ``i`` in S to ``i + t`` for the first odd ``t`` that works.

    Round ``t`` (t = 1, 3, 5, ...) matches every still-free seed ``i`` with
    ``i + t`` (mod 2n) when that point is neither a seed nor already taken.
    ``scan`` sets the order seeds are visited within a round; two seeds never
    compete for the same target in one round, so it cannot change the output.
    If ``trace`` is a list, ``(t, chords matched in round t)`` is appended
    for every round.
    """
    if S.n != n:
        raise ValueError(f"subset lives on 2*{S.n} points, not 2*{n}")
    if len(S) > n:
        raise SubsetTooLarge(f"|S| = {len(S)} exceeds n = {n}")
    N = 2 * n
    seeds = set(S.members)
    partner = [UNMATCHED] * N
    free = sorted(seeds, reverse=(scan == "decreasing"))
    t = 1
    while free:
        if t >= N:
            raise Stalled(f"seeds {[i + 1 for i in free]} cannot be matched", PartialMatching(n, tuple(partner)))
        still = []
        matched = []
        for i in free:
            target = (i + t) % N
            if target not in seeds and partner[target] == UNMATCHED:
                partner[i] = target
                partner[target] = i
                matched.append((i, target))
            else:
                still.append(i)
        if trace is not None:
            trace.append((t, matched))
        free = still
        t += 2
    return PartialMatching(n, tuple(partner))


def complete_one_crossing(pm: PartialMatching) -> Matching:
    """Join the four free points ``a < b < c < d`` as ``(a, c), (b, d)``."""
    free = pm.unmatched()
    if len(free) != 4:
        raise WrongUnmatchedCount(f"expected 4 unmatched points, found {len(free)}")
    a, b, c, d = free
    partner = list(pm.partner)
    for x, y in ((a, c), (b, d)):
        partner[x] = y
        partner[y] = x
    return Matching(pm.n, tuple(partner))


def one_crossing_from_subset(n: int, S: LabelSubset) -> Matching:
    if len(S) != n - 2:
        raise WrongSubsetSize(f"need an (n-2) = {n - 2} element subset, got {len(S)}")
    return complete_one_crossing(ncc(n, S))


def subset_from_one_crossing(tau: Matching) -> LabelSubset:
    """Inverse of :func:`one_crossing_from_subset`.

    The two crossing chords cut the circle into four arcs.  Every other chord
    sits inside one arc; keep the endpoint met first walking clockwise from
    the arc's start.
    """
    chords = tau.pairs()
    crossing = [(c1, c2) for c1, c2 in combinations(chords, 2) if chords_cross(c1, c2)]
    if len(crossing) != 1:
        raise NotOneCrossing(f"{tau.to_text()} has {len(crossing)} crossings")
    c1, c2 = crossing[0]
    cuts = sorted(c1 + c2)
    N = tau.size
    picked = []
    for a, b in chords:
        if (a, b) in (c1, c2):
            continue
        # arc start = last cut point at or before a, cyclically
        start = max((x for x in cuts if x < a), default=cuts[-1])
        picked.append(a if (a - start) % N < (b - start) % N else b)
    return LabelSubset.of(tau.n, picked)


def _completions(partner: list[int], N: int, c: int, cmax: int) -> Iterator[int]:
    # pair up the free points of partner; yields total crossing count with
    # partner complete, pruning once c exceeds cmax
    try:
        i = partner.index(UNMATCHED)
    except ValueError:
        yield c
        return
    for j in range(i + 1, N):
        if partner[j] != UNMATCHED:
            continue
        extra = 0
        for x in range(i + 1, j):
            p = partner[x]
            if p != UNMATCHED and not i < p < j:
                extra += 1
        if c + extra > cmax:
            continue
        partner[i] = j
        partner[j] = i
        yield from _completions(partner, N, c + extra, cmax)
        partner[i] = partner[j] = UNMATCHED


def list_completions(pm: PartialMatching, target: CrossingTypeClass) -> list[Matching]:
    """Every full matching extending ``pm`` whose type is ``target``.

    For ``R(k)`` the result must also be fixed by a third of a turn.  Found
    by pairing the free points exhaustively (pruned on crossing count) and
    keeping what :func:`classify` accepts.
    """
    free = pm.unmatched()
    N = 2 * pm.n
    if target.kind == Kind.T:
        want_c, need = 2, 2 * target.k
    elif target.kind == Kind.R:
        want_c, need = 3, 6 * target.k
    else:
        raise ArityMismatch(f"completions are defined for T(k) and R(k), not {target}")
    if len(free) != need:
        raise ArityMismatch(f"{target} needs {need} unmatched points, pm has {len(free)}")
    if target.kind == Kind.R:
        third = N // 3
        if N % 3 or {(x + third) % N for x in free} != set(free):
            raise ArityMismatch("R(k) needs an unmatched set invariant under a third of a turn")
    base = crossing_number_partial(pm)
    partner = list(pm.partner)
    out = []
    for c in _completions(partner, N, base, want_c):
        if c != want_c:
            continue
        tau = Matching(pm.n, tuple(partner))
        if target.kind == Kind.R and not is_fixed(tau, N // 3):
            continue
        try:
            if classify(tau) == target:
                out.append(tau)
        except NotClassifiable:
            pass
    return out


def crossing_number_partial(pm: PartialMatching) -> int:
    return sum(1 for c1, c2 in combinations(pm.pairs(), 2) if chords_cross(c1, c2))


class SymmetricSubsets:
    """Subsets of ``{0..2n-1}`` of a given size closed under ``i -> i + shift``.

    Iterating yields :class:`LabelSubset` values; the orbits of the shift
    all have ``orbit_length = 2n / shift`` points, and a subset is a choice
    of ``size / orbit_length`` of the ``shift`` orbits.  When ``size`` is not
    a multiple of the orbit length nothing is yielded and ``indivisible``
    is set.
    """

    def __init__(self, n: int, size: int, shift: int):
        N = 2 * n
        if shift < 1 or N % shift:
            raise ValueError(f"shift {shift} does not divide 2n = {N}")
        if size < 0:
            raise ValueError("size must be nonnegative")
        self.n, self.size, self.shift = n, size, shift
        self.orbit_length = N // shift
        self.indivisible = size % self.orbit_length != 0
        self.orbits = size // self.orbit_length

    def __len__(self) -> int:
        return 0 if self.indivisible else comb(self.shift, self.orbits)

    def __iter__(self) -> Iterator[LabelSubset]:
        if self.indivisible:
            return
        for reps in combinations(range(self.shift), self.orbits):
            yield LabelSubset.of(self.n, (r + t * self.shift for r in reps for t in range(self.orbit_length)))


def symmetric_subsets(n: int, size: int, shift: int, strict: bool = False) -> SymmetricSubsets:
    """See :class:`SymmetricSubsets`; ``strict`` raises IndivisibleSize instead of flagging."""
    result = SymmetricSubsets(n, size, shift)
    if strict and result.indivisible:
        raise IndivisibleSize(f"size {size} is not a multiple of the orbit length {result.orbit_length}")
    return result
