"""Closed-form counts, and the check that polynomial values equal fixed-point counts."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, gcd

from . import matchcore as mc
from . import nccbij, qpoly


def binom(m: int, r: int) -> int:
    """Binomial coefficient, zero outside ``0 <= r <= m``."""
    if r < 0 or m < 0 or r > m:
        return 0
    return comb(m, r)


def _whole(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form gave non-integer {x}")
    return int(x)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def closed_count(n: int, k: int) -> int:
    """|P(n, k)| from its closed form; k = 0 gives the Catalan number."""
    if n < 1:
        raise ValueError("n must be positive")
    if k == 0:
        return catalan(n)
    if k == 1:
        return binom(2 * n, n - 2)
    if k == 2:
        return _whole(Fraction(n + 3, 2) * binom(2 * n, n - 3))
    if k == 3:
        return _whole(Fraction(1, 3) * binom(n + 5, 2) * binom(2 * n, n - 4)) + binom(2 * n, n - 3)
    raise ValueError("closed_count is known for k = 0..3 only")


def half_turn_count(n: int, k: int) -> int:
    """Matchings with k crossings fixed by rotation by n, by the case formulas."""
    if k == 1:
        return 0 if n % 2 else binom(n, (n - 2) // 2)
    if k == 2:
        if n % 2:
            return (n - 1) // 2 * binom(n, (n - 1) // 2)
        return (n - 2) // 2 * binom(n, (n - 2) // 2)
    if k == 3:
        if n % 2:
            return binom(n, (n - 3) // 2)
        return (n + 4) // 2 * binom(n, (n - 4) // 2)
    raise ValueError(k)


def quarter_turn_count(n: int) -> int:
    """One-crossing matchings fixed by rotation by n/2."""
    if n % 4 != 2:
        return 0
    return binom(n // 2, (n - 2) // 4)


def third_turn_count(n: int) -> int:
    """Three-crossing matchings fixed by rotation by 2n/3."""
    if n % 3:
        return 0
    return _whole(Fraction(n, 3) * binom(2 * n // 3, n // 3 - 1))


def fixed_count_formula(n: int, k: int, j: int) -> int | None:
    """Fixed-point count under rotation by ``j`` as the case formulas give it.

    Only ``g = gcd(j, 2n)`` matters.  ``None`` where no formula is on offer:
    for k = 3 and a rotation by n/3 (a sixth of a turn) there is no
    case analysis behind the blanket zero, and it is wrong when n/3 is odd.
    """
    if k not in (1, 2, 3) or n < 3:
        return None
    N = 2 * n
    g = gcd(j % N, N)
    if g == N:
        return closed_count(n, k)
    if g == n:
        return half_turn_count(n, k)
    if k == 1 and 2 * g == n:
        return quarter_turn_count(n)
    if k == 3 and n % 3 == 0:
        if 3 * g == N:
            return third_turn_count(n)
        if 3 * g == n:
            return None
    return 0


# -- end-to-end check ------------------------------------------------------

@dataclass
class CspRow:
    j: int
    d: int
    poly: int | None
    brute: int
    match: bool


@dataclass
class CspReport:
    n: int
    k: int
    rows: list[CspRow] = field(default_factory=list)
    verdict: bool = False

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "rows": [asdict(r) for r in self.rows], "verdict": self.verdict}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "j", "d", "poly", "brute", "match"])
        for r in self.rows:
            w.writerow([self.n, self.k, r.j, r.d, "" if r.poly is None else r.poly, r.brute, str(r.match).lower()])
        return buf.getvalue()


def verify_csp(n: int, k: int) -> CspReport:
    """Compare the polynomial at every power of a primitive 2n-th root with brute force."""
    f = qpoly.csp_polynomial(n, k)
    N = 2 * n
    report = CspReport(n, k)
    for j in range(1, N + 1):
        value = qpoly.eval_at_unity(f, N, j)
        brute = mc.count_fixed(n, k, j)
        poly = value.as_integer
        report.rows.append(CspRow(j, value.modulus_d, poly, brute, poly is not None and poly == brute))
    report.verdict = all(r.match for r in report.rows)
    return report


# -- lemma audit -----------------------------------------------------------

@dataclass
class LemmaCheck:
    lemma: str
    n: int
    passed: bool
    detail: str
    counterexamples: list[str] = field(default_factory=list)


@dataclass
class AuditReport:
    n_max: int
    checks: list[LemmaCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[LemmaCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"n_max": self.n_max, "passed": self.passed, "checks": [asdict(c) for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


MAX_COUNTEREXAMPLES = 5


def _fixed_examples(n: int, k: int, j: int) -> list[str]:
    out = []
    for tau in mc.enumerate_matchings(n, k):
        if mc.is_fixed(tau, j):
            out.append(tau.to_text())
            if len(out) == MAX_COUNTEREXAMPLES:
                break
    return out


def _check(lemma, n, expected, observed, examples=()):
    ok = expected == observed
    return LemmaCheck(lemma, n, ok, f"expected {expected}, observed {observed}", [] if ok else list(examples))


def allowed_periods(n: int) -> set[int]:
    """Periods a one-crossing matching may have, by the residue of n mod 4."""
    if n % 2:
        return {2 * n}
    if n % 4 == 0:
        return {2 * n, n}
    return {2 * n, n, n // 2}


def audit_periods(n: int) -> LemmaCheck:
    allowed = allowed_periods(n)
    seen = Counter()
    bad = []
    for tau in mc.enumerate_matchings(n, 1):
        d = mc.period(tau)
        seen[d] += 1
        if d not in allowed and len(bad) < MAX_COUNTEREXAMPLES:
            bad.append(tau.to_text())
    got = sorted(seen)
    ok = not bad
    return LemmaCheck("period", n, ok, f"periods {got} within {sorted(allowed)}", bad)


def audit_one_crossing_fixed(n: int) -> list[LemmaCheck]:
    checks = [_check("|A_2n|", n, closed_count(n, 1), mc.count_fixed(n, 1, 2 * n))]
    checks.append(_check("|A_n|", n, half_turn_count(n, 1), mc.count_fixed(n, 1, n), _fixed_examples(n, 1, n)))
    if n % 2 == 0:
        checks.append(
            _check("|A_n/2|", n, quarter_turn_count(n), mc.count_fixed(n, 1, n // 2), _fixed_examples(n, 1, n // 2))
        )
    bad = [j for j in range(1, 2 * n) if 2 * j not in (n, 3 * n) and j != n and mc.count_fixed(n, 1, j)]
    checks.append(
        LemmaCheck("|A_j| = 0 off n/2, n, 2n", n, not bad, f"nonzero at j = {bad}" if bad else "all zero",
                   _fixed_examples(n, 1, bad[0]) if bad else [])
    )
    return checks


def audit_two_crossing_types(n: int) -> list[LemmaCheck]:
    sizes = Counter()
    others = []
    for tau in mc.enumerate_matchings(n, 2):
        t = mc.classify(tau)
        if t.kind == mc.Kind.T and 3 <= t.k <= n:
            sizes[t.k] += 1
        elif len(others) < MAX_COUNTEREXAMPLES:
            others.append(tau.to_text())
    checks = [_check(f"|T_{k}|", n, k * binom(2 * n, n - k), sizes[k]) for k in range(3, n + 1)]
    checks.append(LemmaCheck("T_k partition P_n,2", n, not others and sum(sizes.values()) == closed_count(n, 2),
                             f"classified {sum(sizes.values())} of {closed_count(n, 2)}", others))
    return checks


def audit_two_crossing_fixed(n: int) -> list[LemmaCheck]:
    checks = [
        _check("|B_2n|", n, closed_count(n, 2), mc.count_fixed(n, 2, 2 * n)),
        _check("|B_n|", n, half_turn_count(n, 2), mc.count_fixed(n, 2, n), _fixed_examples(n, 2, n)),
    ]
    bad = [j for j in range(1, 2 * n) if j != n and mc.count_fixed(n, 2, j)]
    checks.append(LemmaCheck("|B_j| = 0 off n, 2n", n, not bad, f"nonzero at j = {bad}" if bad else "all zero",
                             _fixed_examples(n, 2, bad[0]) if bad else []))
    return checks


def third_turn_set(n: int) -> list[mc.Matching]:
    """Three-crossing matchings fixed by a third of a turn."""
    if n % 3:
        return []
    return [tau for tau in mc.enumerate_matchings(n, 3) if mc.is_fixed(tau, 2 * n // 3)]


def r_type_sizes(n: int) -> tuple[Counter, list[str]]:
    sizes = Counter()
    stray = []
    for tau in third_turn_set(n):
        try:
            t = mc.classify(tau)
        except mc.NotClassifiable:
            t = None
        if t is not None and t.kind == mc.Kind.R:
            sizes[t.k] += 1
        else:
            stray.append(tau.to_text())
    return sizes, stray


def r_type_formula(n: int, k: int) -> int:
    if k == 1:
        return binom(2 * n // 3, (n - 3) // 3)
    return 2 * k * binom(2 * n // 3, (n - 3 * k) // 3)


def audit_three_crossing(n: int) -> list[LemmaCheck]:
    checks = [
        _check("|P_n,3| fixed by n", n, half_turn_count(n, 3), mc.count_fixed(n, 3, n), _fixed_examples(n, 3, n)),
    ]
    allowed = {n, 2 * n} | ({2 * n // 3, 4 * n // 3} if n % 3 == 0 else set())
    bad = [j for j in range(1, 2 * n) if j not in allowed and mc.count_fixed(n, 3, j)]
    checks.append(LemmaCheck("f_n,3 zero off 2n/3, n, 4n/3", n, not bad,
                             f"nonzero at j = {bad}" if bad else "all zero",
                             _fixed_examples(n, 3, bad[0]) if bad else []))
    if n % 3 == 0:
        checks.append(_check("|F|", n, third_turn_count(n), mc.count_fixed(n, 3, 2 * n // 3)))
        sizes, stray = r_type_sizes(n)
        for k in range(1, n // 3 + 1):
            checks.append(_check(f"|F cap R_{k}|", n, r_type_formula(n, k), sizes[k]))
        checks.append(LemmaCheck("R_k partition F", n, not stray, f"{len(stray)} unclassified", stray[:MAX_COUNTEREXAMPLES]))
    return checks


def audit_identities(n: int) -> list[LemmaCheck]:
    checks = []
    lhs = sum(k * binom(2 * n, n - k) for k in range(3, n + 1))
    checks.append(_check("sum k C(2n,n-k) telescoping", n, closed_count(n, 2), lhs))
    if n % 3 == 0:
        m = n // 3
        lhs = binom(2 * m, m - 1) + sum(2 * k * binom(2 * m, m - k) for k in range(2, m + 1))
        checks.append(_check("|F| telescoping", n, third_turn_count(n), lhs))
    return checks


def audit_bijection(n: int) -> LemmaCheck:
    if n < 2:
        return LemmaCheck("one-crossing bijection", n, True, "vacuous")
    N = 2 * n
    image = {}
    bad = []
    from itertools import combinations

    for S in combinations(range(N), n - 2):
        sub = mc.LabelSubset(n, S)
        tau = nccbij.one_crossing_from_subset(n, sub)
        if mc.crossing_number(tau) != 1 or nccbij.subset_from_one_crossing(tau) != sub or tau in image:
            bad.append(sub.to_text())
        image[tau] = sub
    ok = not bad and len(image) == closed_count(n, 1) == mc.count_fixed(n, 1, N)
    return LemmaCheck("one-crossing bijection", n, ok, f"{len(image)} images", bad[:MAX_COUNTEREXAMPLES])


def lemma_audit(n_max: int, n_min: int = 3) -> AuditReport:
    """Check every lemma against enumeration for ``n_min <= n <= n_max``."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    report = AuditReport(n_max)
    for n in range(n_min, n_max + 1):
        report.checks.append(audit_bijection(n))
        report.checks.append(audit_periods(n))
        report.checks.extend(audit_one_crossing_fixed(n))
        report.checks.extend(audit_two_crossing_types(n))
        report.checks.extend(audit_two_crossing_fixed(n))
        report.checks.extend(audit_three_crossing(n))
        report.checks.extend(audit_identities(n))
    return report
