import json
import subprocess
import sys

import pytest

import oracles

from chordsieve.cli import main
from chordsieve.matchcore import parse_matching
from chordsieve.render import parse_svg_chords, render_svg


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count(capsys):
    assert run(capsys, "count", "--n", "7", "--k", "1") == (0, "formula=2002 brute=2002 OK\n")
    assert run(capsys, "count", "--n", "5", "--k", "2") == (0, "formula=180 brute=180 OK\n")
    assert run(capsys, "count", "--n", "2", "--k", "3") == (0, "formula=0 brute=0 OK\n")


def test_count_json_and_guard(capsys):
    code, out = run(capsys, "count", "--n", "4", "--k", "3", "--json")
    assert code == 0 and json.loads(out) == {"n": 4, "k": 3, "formula": 20, "brute": 20, "ok": True}
    code, out = run(capsys, "count", "--n", "13", "--k", "1")
    assert code == 0 and out.startswith("formula=") and "skipped" in out


def test_count_mismatch_exits_1(capsys, monkeypatch):
    from chordsieve import cspverify

    monkeypatch.setattr(cspverify, "closed_count", lambda n, k: 7)
    code, out = run(capsys, "count", "--n", "4", "--k", "1")
    assert code == 1 and "MISMATCH" in out


def test_verify(capsys):
    code, out = run(capsys, "verify", "--n", "7", "--k", "1")
    assert code == 0 and out.endswith("verdict: true\n")
    code, out = run(capsys, "verify", "--all-up-to", "8", "--k", "3")
    assert code == 0 and out.count("verdict: true") == 6


def test_verify_json_schema(capsys):
    code, out = run(capsys, "verify", "--n", "6", "--k", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] is True
    assert set(data) == {"n", "k", "rows", "verdict"}
    assert len(data["rows"]) == 12
    assert set(data["rows"][0]) == {"j", "d", "poly", "brute", "match"}


def test_verify_csv(capsys):
    code, out = run(capsys, "verify", "--all-up-to", "4", "--k", "1", "--csv")
    lines = out.splitlines()
    assert lines[0] == "n,k,j,d,poly,brute,match"
    assert len(lines) == 1 + 6 + 8


def test_verify_failure_exits_1(capsys, monkeypatch):
    from chordsieve import qpoly

    monkeypatch.setattr(qpoly, "csp_polynomial", lambda n, k: qpoly.IntPoly((1,)))
    code, out = run(capsys, "verify", "--n", "5", "--k", "1")
    assert code == 1 and "verdict: false" in out


def test_ncc(capsys):
    code, out = run(capsys, "ncc", "--n", "7", "--set", "1,2,3,9,12")
    assert out == "(1,6)(2,5)(3,4)(9,10)(12,13)\nunmatched: 7,8,11,14\n"
    code, out = run(capsys, "ncc", "--n", "7", "--set", "1,2,5,9")
    assert out.splitlines()[0] == "(1,4)(2,3)(5,6)(9,10)"
    code, out = run(capsys, "ncc", "--n", "7", "--set", "1,2,3,9,12", "--complete", "one-crossing")
    assert out.splitlines()[2:] == ["completion: (7,11)(8,14)", "matching: (1,6)(2,5)(3,4)(7,11)(8,14)(9,10)(12,13)"]


def test_audit(capsys):
    code, out = run(capsys, "audit", "--n-max", "4")
    assert "PASS n=4 period: periods [4, 8] within [4, 8]" in out
    code, out = run(capsys, "audit", "--n-max", "3")
    assert "PASS n=3 |F cap R_1|: expected 1, observed 1" in out
    # one matching on 6 points is fixed by every rotation, against the blanket zero claim
    assert code == 1 and "FAIL n=3 f_n,3 zero off 2n/3, n, 4n/3" in out


def test_poly_and_fixed(capsys):
    code, out = run(capsys, "poly", "--n", "4", "--k", "3")
    assert out.startswith("2 + q + 2*q^2")
    code, out = run(capsys, "poly", "--n", "4", "--k", "1", "--json")
    assert json.loads(out) == {"coeffs": [str(c) for c in oracles.qbinom_by_inversions(8, 2)]}
    code, out = run(capsys, "fixed", "--n", "6", "--k", "3", "--json")
    table = {r["j"]: r["count"] for r in json.loads(out)["fixed"]}
    assert table[4] == table[8] == 8 and table[6] == 30 and table[12] == 1430


def test_render_running_example(capsys, tmp_path):
    out_file = tmp_path / "tau.svg"
    code, _ = run(capsys, "render", "--matching", "(2,3)(1,4)(6,7)(9,10)(8,12)(13,14)(5,11)", "--out", str(out_file))
    svg = out_file.read_text()
    assert code == 0 and svg.count('class="chord crossing"') == 2
    assert svg.count('class="chord"') == 5
    tau = parse_matching("(2,3)(1,4)(6,7)(9,10)(8,12)(13,14)(5,11)")
    assert parse_svg_chords(svg) == tau.pairs()


def test_render_no_crossing(capsys):
    code, svg = run(capsys, "render", "--matching", "(1,2)(3,4)")
    assert code == 0 and "crossing" not in svg and svg.count("<line") == 2


def test_render_is_deterministic_and_round_trips():
    tau = parse_matching("(1,6)(2,5)(3,4)(9,10)(12,13)(7,11)(8,14)")
    a = render_svg(tau.n, tau.pairs())
    assert a == render_svg(tau.n, list(reversed(tau.pairs())))
    assert parse_svg_chords(a) == tau.pairs()


def test_render_from_subset(capsys):
    code, svg = run(capsys, "render", "--n", "7", "--set", "1,2,3,9,12")
    assert "<title>(1,6)(2,5)(3,4)(7,11)(8,14)(9,10)(12,13)</title>" in svg


@pytest.mark.parametrize(
    "argv",
    [
        ["render", "--matching", "(1,2)(2,3)"],
        ["render", "--matching", "garbage"],
        ["render"],
        ["count", "--n", "x", "--k", "1"],
        ["verify", "--k", "1"],
        ["ncc", "--n", "3", "--set", "1,2,3,4"],
        ["audit", "--n-max", "2"],
        ["fixed", "--n", "13", "--k", "1"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_outputs_are_byte_identical(capsys):
    argvs = [["verify", "--n", "5", "--k", "2", "--json"], ["audit", "--n-max", "4", "--json"],
             ["render", "--matching", "(1,3)(2,4)"], ["fixed", "--n", "5", "--k", "1", "--csv"]]
    for argv in argvs:
        assert run(capsys, *argv) == run(capsys, *argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "chordsieve", "count", "--n", "4", "--k", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "formula=14 brute=14 OK\n"
