"""Acceptance criteria 1-8, each at its stated bound and exact tolerance.

Every test carries an ``acceptance`` marker; conftest prints one
``criterion N PASS/FAIL`` line per criterion at the end of the run.  Run
just this file with ``pytest tests/test_acceptance.py -v``.  Brute-force
numbers come from enumeration (Cython or pure kernel and the Python
generator), never from the formulas under test.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

import oracles
from chordsieve import kernel
from chordsieve.cspverify import (
    closed_count,
    fixed_count_formula,
    half_turn_count,
    quarter_turn_count,
    r_type_formula,
    r_type_sizes,
    third_turn_count,
    verify_csp,
)
from chordsieve.matchcore import (
    Kind,
    LabelSubset,
    Matching,
    T,
    chords_cross,
    classify,
    count_fixed,
    crossing_number,
    enumerate_matchings,
    format_chords,
    make_matching,
    make_subset,
    parse_matching,
    reduce_to_skeleton,
    rotate,
)
from chordsieve.nccbij import (
    list_completions,
    ncc,
    one_crossing_from_subset,
    subset_from_one_crossing,
)
from chordsieve.qpoly import (
    IntPoly,
    eval_at_unity,
    poly_exact_div,
    q_binomial,
    q_binomial_product,
    q_int,
)


def acceptance(number, title):
    return pytest.mark.acceptance(number, title)


def brute_count(n, k):
    # two independent enumerations must agree before either is trusted
    via_kernel = count_fixed(n, k, 0)
    via_generator = sum(1 for _ in enumerate_matchings(n, k))
    assert via_kernel == via_generator
    return via_kernel


# -- 1. counting formulas ----------------------------------------------------

C1 = acceptance(1, "|P_n,k| closed forms equal enumeration (k=1: 3..8, k=2,3: 4..8)")


@C1
@pytest.mark.parametrize("n,k", [(n, 1) for n in range(3, 9)] + [(n, k) for k in (2, 3) for n in range(4, 9)])
def test_c1_counts(n, k):
    assert brute_count(n, k) == closed_count(n, k)


@C1
def test_c1_worked_values():
    assert closed_count(7, 1) == comb(14, 5) == brute_count(7, 1) == 2002
    assert closed_count(5, 2) == brute_count(5, 2) == 180
    assert closed_count(4, 3) == brute_count(4, 3) == 20


# -- 2. cyclic sieving ------------------------------------------------------

C2 = acceptance(2, "sieving polynomial matches fixed points for every j (k=1,2: 3..8, k=3: 4..9)")


@C2
@pytest.mark.parametrize("n,k", [(n, k) for k in (1, 2) for n in range(3, 9)] + [(n, 3) for n in range(4, 10)])
def test_c2_verify_csp(n, k):
    report = verify_csp(n, k)
    assert [r.j for r in report.rows] == list(range(1, 2 * n + 1))
    bad = [(r.j, r.poly, r.brute) for r in report.rows if not r.match]
    assert not bad
    assert report.verdict


@C2
def test_c2_third_turn_at_nine():
    assert count_fixed(9, 3, 6) == count_fixed(9, 3, 12) == 3 * comb(6, 2) == 45
    assert third_turn_count(9) == 45


# -- 3. fixed-point lemmas --------------------------------------------------

C3 = acceptance(3, "fixed-point case formulas equal enumeration for n <= 9")


@C3
@pytest.mark.parametrize("n", range(3, 10))
def test_c3_half_turn(n):
    # parity split for k = 1, 2, 3
    for k in (1, 2, 3):
        assert half_turn_count(n, k) == count_fixed(n, k, n), (n, k)


@C3
@pytest.mark.parametrize("n", range(4, 10, 2))
def test_c3_quarter_turn(n):
    # mod-4 split: nonzero only when n = 2 mod 4
    assert quarter_turn_count(n) == count_fixed(n, 1, n // 2)
    if n % 4 == 0:
        assert count_fixed(n, 1, n // 2) == 0


@C3
@pytest.mark.parametrize("n", range(3, 10))
def test_c3_third_turn(n):
    # mod-3 split: F is empty unless 3 | n
    if n % 3:
        assert third_turn_count(n) == 0
    else:
        assert third_turn_count(n) == count_fixed(n, 3, 2 * n // 3) == count_fixed(n, 3, 4 * n // 3)


@C3
@pytest.mark.parametrize("n", range(3, 10))
def test_c3_formula_table_against_enumeration(n):
    # every j the case analysis speaks for
    for k in (1, 2, 3):
        for j in range(1, 2 * n + 1):
            expected = fixed_count_formula(n, k, j)
            if expected is not None:
                assert expected == count_fixed(n, k, j), (n, k, j)


# -- 4. bijection round trip ------------------------------------------------

C4 = acceptance(4, "subset <-> one-crossing maps are mutually inverse for n <= 6")


@C4
@pytest.mark.parametrize("n", range(2, 7))
def test_c4_round_trip(n):
    N = 2 * n
    forward = {}
    for members in combinations(range(N), n - 2):
        S = LabelSubset(n, members)
        tau = one_crossing_from_subset(n, S)
        assert crossing_number(tau) == 1
        assert subset_from_one_crossing(tau) == S
        forward[tau] = S
    assert len(forward) == comb(N, n - 2)
    everything = list(enumerate_matchings(n, 1))
    assert set(everything) == set(forward)
    for tau in everything:
        assert one_crossing_from_subset(n, subset_from_one_crossing(tau)) == tau


# -- 5. type census ---------------------------------------------------------

C5 = acceptance(5, "T_k sizes for n <= 8 and R_k sizes for n in {3, 6, 9}")


@C5
@pytest.mark.parametrize("n", range(3, 9))
def test_c5_t_types(n):
    sizes = {}
    for tau in enumerate_matchings(n, 2):
        t = classify(tau)
        assert t.kind == Kind.T
        sizes[t.k] = sizes.get(t.k, 0) + 1
    assert sizes == {k: k * comb(2 * n, n - k) for k in range(3, n + 1)}
    assert sum(sizes.values()) == closed_count(n, 2)


@C5
@pytest.mark.parametrize("n", [3, 6, 9])
def test_c5_r_types(n):
    sizes, stray = r_type_sizes(n)
    assert not stray
    m = n // 3
    expected = {k: r_type_formula(n, k) for k in range(1, m + 1)}
    # closed forms written out independently of the library helper
    assert expected[1] == comb(2 * m, m - 1)
    assert all(expected[k] == 2 * k * comb(2 * m, m - k) for k in range(2, m + 1))
    assert dict(sizes) == {k: v for k, v in expected.items() if v}
    assert sum(sizes.values()) == count_fixed(n, 3, 2 * n // 3)


# -- 6. q-analog identities -------------------------------------------------

C6 = acceptance(6, "facts on [m]_q at -1 and cube roots (m <= 50), q-binomials (m <= 20), telescoping sums (n <= 60)")

ONE_PLUS_Q = IntPoly((1, 1))


def at(f, N, j):
    return eval_at_unity(f, N, j)


@C6
def test_c6_q_int_at_minus_one():
    for m in range(1, 51):
        assert at(q_int(m), 2, 1).as_integer == m % 2


@C6
def test_c6_ratio_at_minus_one():
    # [m]/[2] at -1 is m/2 for even m, so the ratio of two such is (m1/2)/(m2/2)
    halves = {m: at(poly_exact_div(q_int(m), q_int(2)), 2, 1).as_integer for m in range(2, 51, 2)}
    assert halves == {m: m // 2 for m in range(2, 51, 2)}
    for m1 in halves:
        for m2 in halves:
            assert Fraction(halves[m1], halves[m2]) == Fraction(m1, m2)
            if m1 % m2 == 0:
                assert at(poly_exact_div(q_int(m1), q_int(m2)), 2, 1).as_integer == m1 // m2


@C6
@pytest.mark.parametrize("j", [1, 2])
def test_c6_q_int_at_cube_roots(j):
    for m in range(1, 51):
        v = at(q_int(m), 3, j)
        if m % 3 == 0:
            assert v.as_integer == 0
        elif m % 3 == 1:
            assert v.as_integer == 1
        else:
            assert v.as_integer is None and v.residue == ONE_PLUS_Q


@C6
@pytest.mark.parametrize("j", [1, 2])
def test_c6_ratio_at_cube_roots(j):
    thirds = {m: at(poly_exact_div(q_int(m), q_int(3)), 3, j).as_integer for m in range(3, 51, 3)}
    assert thirds == {m: m // 3 for m in range(3, 51, 3)}
    for m1 in thirds:
        for m2 in thirds:
            assert Fraction(thirds[m1], thirds[m2]) == Fraction(m1, m2)
            if m1 % m2 == 0:
                assert at(poly_exact_div(q_int(m1), q_int(m2)), 3, j).as_integer == m1 // m2


@C6
def test_c6_q_binomial_constructions():
    for m in range(21):
        for r in range(m + 1):
            assert q_binomial(m, r) == q_binomial_product(m, r)
    for m in range(11):
        for r in range(m + 1):
            assert list(q_binomial(m, r).coeffs) == oracles.qbinom_by_inversions(m, r)


@C6
def test_c6_telescoping():
    for n in range(3, 61):
        lhs = sum(k * comb(2 * n, n - k) for k in range(3, n + 1))
        assert lhs == Fraction(n + 3, 2) * comb(2 * n, n - 3) == closed_count(n, 2)
        if n % 3 == 0:
            m = n // 3
            lhs = comb(2 * m, m - 1) + sum(2 * k * comb(2 * m, m - k) for k in range(2, m + 1))
            assert lhs == m * comb(2 * m, m - 1) == third_turn_count(n)


# -- 7. worked examples -----------------------------------------------------

C7 = acceptance(7, "worked examples reproduce their pair lists byte for byte")


@C7
def test_c7_ncc_trace():
    trace = []
    pm = ncc(7, make_subset(7, [1, 2, 3, 9, 12]), trace=trace)
    assert [(t, format_chords(chords)) for t, chords in trace] == [
        (1, "(3,4)(9,10)(12,13)"),
        (3, "(2,5)"),
        (5, "(1,6)"),
    ]
    assert pm.to_text() == "(1,6)(2,5)(3,4)(9,10)(12,13)"
    assert [i + 1 for i in pm.unmatched()] == [7, 8, 11, 14]


@C7
def test_c7_completion():
    pm = ncc(7, make_subset(7, [1, 2, 3, 9, 12]))
    tau = one_crossing_from_subset(7, make_subset(7, [1, 2, 3, 9, 12]))
    assert format_chords(set(tau.pairs()) - set(pm.pairs())) == "(7,11)(8,14)"
    assert tau == parse_matching("(1,6)(2,5)(3,4)(9,10)(12,13)(7,11)(8,14)")
    assert tau.to_text() == "(1,6)(2,5)(3,4)(7,11)(8,14)(9,10)(12,13)"


@C7
def test_c7_three_t3_completions():
    pm = ncc(7, make_subset(7, [1, 2, 5, 9]))
    assert [i + 1 for i in pm.unmatched()] == [7, 8, 11, 12, 13, 14]
    got = sorted(format_chords(set(t.pairs()) - set(pm.pairs())) for t in list_completions(pm, T(3)))
    listed = ["(7,12)(8,14)(11,13)", "(8,13)(7,11)(12,14)", "(11,14)(8,12)(7,13)"]
    assert got == sorted(parse_matching_chords(s) for s in listed)


def parse_matching_chords(text):
    # canonical text of a listed chord set, whatever order it was written in
    pairs = [tuple(int(x) for x in p.split(",")) for p in text.strip("()").split(")(")]
    return format_chords([(a - 1, b - 1) for a, b in pairs])


@C7
def test_c7_rotation():
    tau = make_matching(7, [(2, 3), (1, 4), (6, 7), (9, 10), (8, 12), (13, 14), (5, 11)])
    assert rotate(tau, 1).to_text() == "(1,14)(2,5)(3,4)(6,12)(7,8)(9,13)(10,11)"
    # the labelled one-crossing example: tau(1) = 4 becomes sigma(tau)(2) = 5
    labelled = parse_matching("(1,4)(2,3)(5,6)(7,11)(8,14)(9,10)(12,13)")
    turned = rotate(labelled, 1)
    assert turned.partner[1] == 4
    assert turned.to_text() == "(1,9)(2,5)(3,4)(6,7)(8,12)(10,11)(13,14)"


# -- 8. property suites -----------------------------------------------------

C8 = acceptance(8, "action laws, equivariance, skeleton confluence, NCC, pruning (exhaustive, small n)")


def all_up_to(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_matchings(n)


@C8
def test_c8_action_laws():
    for tau in all_up_to(5):
        N = tau.size
        assert rotate(tau, 0) == tau and rotate(tau, N) == tau
        images = [rotate(tau, i) for i in range(N + 1)]
        for i in range(N + 1):
            for j in range(N + 1):
                assert rotate(images[i], j) == rotate(tau, i + j)


@C8
def test_c8_crossing_equivariance():
    for tau in all_up_to(5):
        c = crossing_number(tau)
        assert all(crossing_number(rotate(tau, j)) == c for j in range(tau.size))


@C8
def test_c8_crossing_against_oracle():
    for n in range(1, 6):
        for m in oracles.all_matchings(2 * n):
            tau = Matching.from_pairs(n, [tuple(c) for c in m])
            assert crossing_number(tau) == oracles.crossings(m, 2 * n)


@C8
def test_c8_skeleton_confluence():
    for n in range(1, 6):
        for k in range(4):
            for tau in enumerate_matchings(n, k):
                assert reduce_to_skeleton(tau)[0] == reduce_to_skeleton(tau, order="decreasing")[0]


@C8
@pytest.mark.parametrize("n", range(1, 7))
def test_c8_ncc_noncrossing_and_terminates(n):
    for size in range(n + 1):
        for members in combinations(range(2 * n), size):
            S = LabelSubset(n, members)
            pm = ncc(n, S)  # Stalled would fail the test
            chords = pm.pairs()
            assert len(chords) == size
            assert not any(chords_cross(a, b) for a, b in combinations(chords, 2))
            assert pm == ncc(n, S, scan="decreasing")


@C8
def test_c8_pruned_equals_unpruned():
    for n in range(1, 7):
        for k in range(4):
            pruned = list(enumerate_matchings(n, k, prune=True))
            assert pruned == list(enumerate_matchings(n, k, prune=False))
            assert len(set(pruned)) == len(pruned)


@C8
def test_c8_backends_agree():
    for name in kernel.BACKENDS:
        backend = kernel.get_backend(name)
        for n in range(1, 8):
            assert backend.crossing_histogram(n, 3) == kernel.crossing_histogram(n, 3)
            assert backend.period_histogram(n, 2) == kernel.period_histogram(n, 2)
