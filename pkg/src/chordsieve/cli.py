"""Command line: ``chordsieve {count,verify,ncc,audit,render,poly,fixed}``.

Exit status is 0 on success, 1 when a check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import cspverify, matchcore, nccbij, qpoly, render

N_GUARD = 12


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(args) -> str:
    if args.json:
        return "json"
    if args.csv:
        return "csv"
    return "text"


def _guard(args, n: int) -> None:
    if n < 1:
        raise UsageError("--n must be positive")
    if n > N_GUARD and not args.force:
        raise UsageError(f"n = {n} exceeds the enumeration guard {N_GUARD}; pass --force to run anyway")


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_count(args) -> int:
    n, k = args.n, args.k
    if n < 1 or k < 0:
        raise UsageError("need n >= 1 and k >= 0")
    try:
        formula = cspverify.closed_count(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    brute = None
    if n <= N_GUARD or args.force:
        brute = matchcore.count_fixed(n, k, 0)
    ok = brute is None or brute == formula
    fmt = _fmt(args)
    if fmt == "json":
        text = json.dumps({"n": n, "k": k, "formula": formula, "brute": brute, "ok": ok}) + "\n"
    elif fmt == "csv":
        text = _rows_csv(["n", "k", "formula", "brute", "ok"], [[n, k, formula, "" if brute is None else brute, str(ok).lower()]])
    elif brute is None:
        text = f"formula={formula} brute=skipped (n > {N_GUARD}, use --force)\n"
    elif ok:
        text = f"formula={formula} brute={brute} OK\n"
    else:
        text = f"formula={formula} brute={brute} MISMATCH diff={brute - formula}\n"
    _emit(args, text)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if args.all_up_to is not None:
        ns = list(range(3, args.all_up_to + 1))
    elif args.n is not None:
        ns = [args.n]
    else:
        raise UsageError("verify needs --n or --all-up-to")
    if not ns or ns[0] < 3:
        raise UsageError("verify needs n >= 3")
    for n in ns:
        _guard(args, n)
    reports = [cspverify.verify_csp(n, args.k) for n in ns]
    fmt = _fmt(args)
    if fmt == "json":
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        text = json.dumps(payload) + "\n"
    elif fmt == "csv":
        parts = [r.to_csv() for r in reports]
        text = parts[0] + "".join(p.split("\n", 1)[1] for p in parts[1:])
    else:
        lines = []
        for r in reports:
            lines.append(f"n={r.n} k={r.k}")
            lines.append(f"{'j':>4} {'d':>4} {'poly':>10} {'brute':>10}  match")
            for row in r.rows:
                poly = "-" if row.poly is None else str(row.poly)
                lines.append(f"{row.j:>4} {row.d:>4} {poly:>10} {row.brute:>10}  {'yes' if row.match else 'NO'}")
            lines.append(f"verdict: {'true' if r.verdict else 'false'}")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0 if all(r.verdict for r in reports) else 1


def cmd_ncc(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    try:
        S = matchcore.parse_subset(n, args.set)
        pm = nccbij.ncc(n, S)
    except (ValueError, nccbij.NccError) as exc:
        raise UsageError(str(exc)) from None
    completion = None
    if args.complete == "one-crossing":
        try:
            full = nccbij.complete_one_crossing(pm)
        except nccbij.WrongUnmatchedCount as exc:
            raise UsageError(str(exc)) from None
        added = sorted(set(full.pairs()) - set(pm.pairs()))
        completion = (added, full)
    free = ",".join(str(i + 1) for i in pm.unmatched())
    if _fmt(args) == "json":
        payload = {"n": n, "set": [i + 1 for i in S], "pairs": [[a + 1, b + 1] for a, b in pm.pairs()],
                   "unmatched": [i + 1 for i in pm.unmatched()]}
        if completion:
            payload["completion"] = [[a + 1, b + 1] for a, b in completion[0]]
            payload["matching"] = completion[1].to_text()
        text = json.dumps(payload) + "\n"
    else:
        lines = [pm.to_text(), f"unmatched: {free}"]
        if completion:
            lines.append(f"completion: {matchcore.format_chords(completion[0])}")
            lines.append(f"matching: {completion[1].to_text()}")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0


def cmd_audit(args) -> int:
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    _guard(args, args.n_max)
    report = cspverify.lemma_audit(args.n_max)
    fmt = _fmt(args)
    if fmt == "json":
        text = report.to_json() + "\n"
    elif fmt == "csv":
        text = _rows_csv(["n", "lemma", "passed", "detail"],
                         [[c.n, c.lemma, str(c.passed).lower(), c.detail] for c in report.checks])
    else:
        lines = []
        for c in report.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'} n={c.n} {c.lemma}: {c.detail}")
            lines.extend(f"    counterexample {x}" for x in c.counterexamples)
        fails = len(report.failures())
        lines.append(f"{len(report.checks) - fails} passed, {fails} failed")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    try:
        if args.matching:
            tau = matchcore.parse_matching(args.matching)
            n, chords, title = tau.n, tau.pairs(), tau.to_text()
        elif args.n is not None and args.set is not None:
            n = args.n
            S = matchcore.parse_subset(n, args.set)
            if len(S) == n - 2:
                tau = nccbij.one_crossing_from_subset(n, S)
                chords, title = tau.pairs(), tau.to_text()
            else:
                pm = nccbij.ncc(n, S)
                chords, title = pm.pairs(), pm.to_text()
        else:
            raise UsageError("render needs --matching or --n with --set")
    except (ValueError, nccbij.NccError) as exc:
        raise UsageError(str(exc)) from None
    _emit(args, render.render_svg(n, chords, highlight=not args.no_highlight, title=title))
    return 0


def cmd_poly(args) -> int:
    if args.n < 1 or args.k not in (1, 2, 3):
        raise UsageError("poly needs n >= 1 and k in 1..3")
    f = qpoly.csp_polynomial(args.n, args.k)
    _emit(args, (f.to_json() if args.json else f.to_text()) + "\n")
    return 0


def cmd_fixed(args) -> int:
    _guard(args, args.n)
    table = matchcore.fixed_table(args.n, args.k)
    fmt = _fmt(args)
    if fmt == "json":
        text = json.dumps({"n": args.n, "k": args.k, "fixed": [{"j": j, "count": c} for j, c in table.items()]}) + "\n"
    elif fmt == "csv":
        text = _rows_csv(["j", "count"], list(table.items()))
    else:
        text = "".join(f"{j:>4} {c}\n" for j, c in table.items())
    _emit(args, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output")
    fmt.add_argument("--csv", action="store_true", help="CSV output")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    common.add_argument("--force", action="store_true", help=f"allow n > {N_GUARD} for enumeration")

    p = argparse.ArgumentParser(prog="chordsieve", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="closed-form vs enumerated |P(n,k)|")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("verify", parents=[common], help="check the sieving polynomial against fixed points")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int, choices=(1, 2, 3), required=True)
    s.add_argument("--all-up-to", type=int, metavar="N", help="verify every 3 <= n <= N")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("ncc", parents=[common], help="noncrossing construction from a seed set")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", required=True, help="comma separated 1-based labels, e.g. 1,2,3,9,12")
    s.add_argument("--complete", choices=("one-crossing",))
    s.set_defaults(func=cmd_ncc)

    s = sub.add_parser("audit", parents=[common], help="check every lemma up to n-max")
    s.add_argument("--n-max", type=int, required=True)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("render", parents=[common], help="SVG chord diagram")
    s.add_argument("--matching", help='e.g. "(1,3)(2,4)"')
    s.add_argument("--n", type=int)
    s.add_argument("--set")
    s.add_argument("--no-highlight", action="store_true")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("poly", parents=[common], help="print the sieving polynomial")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("fixed", parents=[common], help="fixed-point count for every rotation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_fixed)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"chordsieve {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
