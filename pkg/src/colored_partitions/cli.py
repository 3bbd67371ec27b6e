"""Command-line front end.

Subcommands: count, sequence, verify, tables, wilf, bijection, egf, export.
Exit status: 0 all checks passed, 1 value mismatch / failed check, 2 usage or
pattern syntax error, 3 enumeration budget exceeded.

Reports on stdout are byte-identical across runs and worker counts; timing is
written to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Sequence

from .avoidance import (DEFAULT_BUDGET, EnumerationBudgetError, PatternSet,
                        Sense, avoids, count_avoiders, expand_lt,
                        expand_pattern, pattern_set)
from .bijections import (enumerate_marked, from_marked, from_rc_involution,
                         to_marked, to_rc_involution)
from .formulas import (FIXED_C2, FormulaId, evaluate, formula_for,
                       formula_patterns, sequence as formula_sequence)
from .partitions import (PatternSyntaxError, enumerate_colored, format_pattern,
                         parse_pattern)
from .series import EGF_NAMES, egf_coefficients
from .tables import check_table1, check_table2, check_table3
from .wilf import LENGTH3_PATTERNS, classify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_FORMULA_HELP = ", ".join(f.value for f in FormulaId) + ", repeat:<m>"


@dataclass
class RunReport:
    command: str
    params: dict[str, Any]
    results: list[Any] = field(default_factory=list)
    elapsed_ms: float = 0.0
    mode: str = ""
    ok: bool = True

    def emit(self, as_json: bool, payload: dict[str, Any], lines: list[str]) -> None:
        if as_json:
            print(json.dumps(payload, separators=(", ", ": ")))
        else:
            for line in lines:
                print(line)
        print(f"[{self.command}] elapsed {self.elapsed_ms:.0f} ms", file=sys.stderr)


def _parse_patterns(texts: Sequence[str], sense: str) -> PatternSet:
    pats = []
    for text in texts:
        for chunk in text.split(";"):
            if chunk.strip():
                pats.append(parse_pattern(chunk))
    return pattern_set(pats, Sense(sense))


def _parse_formula(text: str) -> tuple[FormulaId, int | None]:
    if text.startswith("repeat:"):
        return FormulaId.REPEAT, int(text.split(":", 1)[1])
    try:
        return FormulaId(text), None
    except ValueError:
        raise PatternSyntaxError(
            f"unknown formula id {text!r}; valid: {_FORMULA_HELP}") from None


def _resolve_formula(ps: PatternSet, c: int) -> tuple[FormulaId, int | None] | None:
    """Find a closed form for the set, expanding lt/pattern senses first."""
    if ps.sense is not Sense.EQ:
        expanded = []
        for p in ps.patterns:
            fn = expand_lt if ps.sense is Sense.LT else expand_pattern
            expanded.extend(fn(p, c).patterns)
        ps = pattern_set(expanded, Sense.EQ)
    return formula_for(ps)


def _pattern_set_text(ps: PatternSet) -> str:
    return ";".join(format_pattern(p) for p in ps.patterns)


def cmd_count(args) -> int:
    t0 = time.perf_counter()
    ps = _parse_patterns(args.pattern, args.sense)
    values = []
    ok = True
    ns = [args.n] if args.command == "count" else list(range(1, args.n + 1))
    fid = mpar = None
    if args.mode in ("formula", "both"):
        resolved = _resolve_formula(ps, args.c)
        if resolved is None:
            print(f"error: no closed form known for pattern set "
                  f"{_pattern_set_text(ps)} ({args.sense} sense)", file=sys.stderr)
            return EXIT_USAGE
        fid, mpar = resolved
        if fid in FIXED_C2 and args.c != 2:
            print(f"error: formula {fid.value} only applies at c=2", file=sys.stderr)
            return EXIT_USAGE
    for n in ns:
        entry: dict[str, Any] = {"n": n}
        if args.mode in ("brute", "both"):
            entry["brute"] = count_avoiders(n, args.c, ps, budget=args.budget,
                                            workers=args.workers)
        if args.mode in ("formula", "both"):
            entry["formula"] = evaluate(fid, n, args.c, m=mpar).value
        if args.mode == "both" and entry["brute"] != entry["formula"]:
            ok = False
        values.append(entry)
    report = RunReport(args.command, {"pattern": _pattern_set_text(ps)},
                       values, (time.perf_counter() - t0) * 1000, args.mode, ok)
    payload = {"pattern": _pattern_set_text(ps), "sense": args.sense, "c": args.c,
               "mode": args.mode, "values": values, "ok": ok}
    lines = []
    for entry in values:
        bits = [f"n={entry['n']}"]
        if "brute" in entry:
            bits.append(f"brute={entry['brute']}")
        if "formula" in entry:
            bits.append(f"formula={entry['formula']}")
        if args.mode == "both":
            bits.append("ok" if entry["brute"] == entry["formula"] else "MISMATCH")
        lines.append("  ".join(bits))
    if not ok:
        lines.append("MISMATCH between brute force and formula")
    report.emit(args.json, payload, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    ok = True
    rows = []
    for fid in FormulaId:
        if fid in (FormulaId.TOTAL, FormulaId.REPEAT):
            continue
        cs = [2] if fid in FIXED_C2 else [2, 3]
        for c in cs:
            n_max = args.n_max if c == 2 else args.n_max_c3
            ps = formula_patterns(fid)
            for n in range(1, n_max + 1):
                brute = count_avoiders(n, c, ps, budget=args.budget, workers=args.workers)
                form = evaluate(fid, n, c).value
                good = brute == form
                ok = ok and good
                rows.append({"id": fid.value, "n": n, "c": c, "brute": brute,
                             "formula": form, "ok": good})
    for m in (1, 2, 3):
        ps = formula_patterns(FormulaId.REPEAT, m)
        for c in (2, 3):
            n_max = args.n_max if c == 2 else args.n_max_c3
            for n in range(1, n_max + 1):
                brute = count_avoiders(n, c, ps, budget=args.budget, workers=args.workers)
                form = evaluate(FormulaId.REPEAT, n, c, m=m).value
                good = brute == form
                ok = ok and good
                rows.append({"id": f"repeat:{m}", "n": n, "c": c, "brute": brute,
                             "formula": form, "ok": good})
    report = RunReport("verify", {"n_max": args.n_max}, rows,
                       (time.perf_counter() - t0) * 1000, "both", ok)
    lines = [f"{r['id']:<14} n={r['n']} c={r['c']} brute={r['brute']} "
             f"formula={r['formula']} {'ok' if r['ok'] else 'MISMATCH'}"
             for r in rows if not r["ok"] or args.all]
    lines.append(f"verified {len(rows)} formula evaluations: "
                 + ("all match brute force" if ok else "MISMATCHES FOUND"))
    report.emit(args.json, {"checks": rows, "ok": ok}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_tables(args) -> int:
    t0 = time.perf_counter()
    notes = []
    if args.which == 1:
        rows, diffs = check_table1(budget=args.budget, workers=args.workers)
    elif args.which == 2:
        rows, diffs, notes = check_table2(budget=args.budget, workers=args.workers)
    else:
        rows, diffs = check_table3(budget=args.budget, workers=args.workers)
    ok = not diffs
    lines = []
    for row in rows:
        name, brute = row[0], row[1]
        lines.append(f"{name:<40} brute[1..{len(brute)}] = {','.join(map(str, brute))}")
        if args.which in (1, 3) and row[2] is not None:
            lines.append(f"{'':<40} formula      = {','.join(map(str, row[2]))}")
        if args.which == 2:
            lines.append(f"{'':<40} formula      = {','.join(map(str, row[2]))}")
            if row[3] is not None:
                lines.append(f"{'':<40} expansion    = {','.join(map(str, row[3]))}")
    for note in notes:
        lines.append(f"note: row {note.row}: label {note.label}: {note.message}")
    for d in diffs:
        lines.append(f"DIFF table {d.table} row {d.row} n={d.n} [{d.kind}]: "
                     f"got {d.got}, expected {d.expected}")
    lines.append("all cells match" if ok else f"{len(diffs)} cell(s) differ")
    report = RunReport("tables", {"which": args.which}, rows,
                       (time.perf_counter() - t0) * 1000, "both", ok)
    payload = {"table": args.which, "ok": ok,
               "diffs": [d._asdict() for d in diffs],
               "notes": [n._asdict() for n in notes]}
    report.emit(args.json, payload, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_wilf(args) -> int:
    t0 = time.perf_counter()
    result = classify(LENGTH3_PATTERNS, args.n_max, args.c,
                      budget=args.budget, workers=args.workers)
    class_of = {}
    for idx, group in enumerate(result.classes, start=1):
        for p in group:
            class_of[p] = idx
    payload = {
        "n_max": args.n_max, "c": args.c,
        "class_count": len(result.classes),
        "class_sizes": [len(g) for g in result.classes],
        "patterns": [
            {"pattern": format_pattern(p),
             "counts": list(result.evidence[p]),
             "class": class_of[p]}
            for p in LENGTH3_PATTERNS
        ],
    }
    lines = [f"{len(result.classes)} classes over {len(LENGTH3_PATTERNS)} patterns "
             f"(n_max={args.n_max}, c={args.c})"]
    for idx, group in enumerate(result.classes, start=1):
        members = "  ".join(format_pattern(p) for p in group)
        counts = ",".join(map(str, result.evidence[group[0]]))
        lines.append(f"class {idx}: counts {counts}")
        lines.append(f"         {members}")
    report = RunReport("wilf", {"n_max": args.n_max, "c": args.c}, payload["patterns"],
                       (time.perf_counter() - t0) * 1000, "brute", True)
    report.emit(args.json, payload, lines)
    return EXIT_OK


def cmd_bijection(args) -> int:
    t0 = time.perf_counter()
    n = args.n
    ok = True
    lines = []
    if args.which == "marked":
        ps = pattern_set([parse_pattern("1^1,2^1")])
        avoiders = [q for q in enumerate_colored(n, 2) if avoids(q, ps)]
        images = [to_marked(q) for q in avoiders]
        marked = list(enumerate_marked(n))
        ok = (len(set(images)) == len(avoiders)
              and sorted(m.word for m in images) == sorted(m.word for m in marked)
              and all(from_marked(img) == q for q, img in zip(avoiders, images)))
        form = evaluate(FormulaId.P12_AA, n, 2).value
        ok = ok and len(avoiders) == form
        lines.append(f"avoiders={len(avoiders)} marked partitions={len(marked)} "
                     f"formula={form}")
        for q, img in list(zip(avoiders, images))[:3]:
            lines.append(f"  {format_pattern(q)} -> {''.join(map(str, img.word))}")
    else:
        ps = pattern_set([parse_pattern("1^1,1^1"), parse_pattern("1^2,1^2")])
        avoiders = [q for q in enumerate_colored(n, 2) if avoids(q, ps)]
        images = [to_rc_involution(q) for q in avoiders]
        ok = (len(set(images)) == len(avoiders)
              and all(from_rc_involution(img) == q for q, img in zip(avoiders, images)))
        form = evaluate(FormulaId.S11_AA_BB, n, 2).value
        ok = ok and len(avoiders) == form
        lines.append(f"avoiders={len(avoiders)} formula={form}")
        for q, img in list(zip(avoiders, images))[:3]:
            lines.append(f"  {format_pattern(q)} -> {' '.join(map(str, img.perm))}")
    lines.append("roundtrip + image checks passed" if ok else "BIJECTION CHECK FAILED")
    report = RunReport("bijection", {"which": args.which, "n": n}, lines,
                       (time.perf_counter() - t0) * 1000, "both", ok)
    report.emit(args.json, {"which": args.which, "n": n, "ok": ok}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_egf(args) -> int:
    t0 = time.perf_counter()
    n_max = args.n_max
    ok = True
    lines = []
    results = {}
    fid_for = {"A011965": FormulaId.P12_AA, "A001861": FormulaId.S11_AA_AB,
               "A000898": FormulaId.S11_AA_BB}
    for name in EGF_NAMES:
        coeffs = egf_coefficients(name, n_max)
        formula = [evaluate(fid_for[name], n, 2).value for n in range(1, n_max + 1)]
        good = coeffs[1:] == formula
        ok = ok and good
        results[name] = {"coefficients": coeffs, "formula": formula, "ok": good}
        lines.append(f"{name}: {','.join(map(str, coeffs))} "
                     f"{'matches formula sequence' if good else 'MISMATCH'}")
    report = RunReport("egf", {"n_max": n_max}, results,
                       (time.perf_counter() - t0) * 1000, "both", ok)
    report.emit(args.json, {"n_max": n_max, "series": results, "ok": ok}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_export(args) -> int:
    t0 = time.perf_counter()
    if (args.id is None) == (args.pattern is None):
        print("error: export needs exactly one of --id or -p/--pattern", file=sys.stderr)
        return EXIT_USAGE
    if args.id is not None:
        fid, mpar = _parse_formula(args.id)
        values = formula_sequence(fid, args.n_max, args.c, m=mpar)
        source = {"id": args.id}
    else:
        ps = _parse_patterns(args.pattern, args.sense)
        values = [count_avoiders(n, args.c, ps, budget=args.budget, workers=args.workers)
                  for n in range(1, args.n_max + 1)]
        source = {"pattern": _pattern_set_text(ps), "sense": args.sense}
    if args.format == "bfile":
        text = "".join(f"{n} {v}\n" for n, v in enumerate(values, start=1))
    elif args.format == "csv":
        text = "n,value\n" + "".join(f"{n},{v}\n" for n, v in enumerate(values, start=1))
    else:
        payload = dict(source)
        payload.update({"c": args.c, "n_max": args.n_max,
                        "values": [{"n": n, "value": v}
                                   for n, v in enumerate(values, start=1)]})
        text = json.dumps(payload, separators=(", ", ": ")) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    print(f"[export] elapsed {(time.perf_counter() - t0) * 1000:.0f} ms", file=sys.stderr)
    return EXIT_OK


def _add_common(sub, budget=True, workers=True, as_json=True):
    if budget:
        sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help="max colored partitions a brute-force run may enumerate")
    if workers:
        sub.add_argument("--workers", type=int, default=1,
                         help="worker processes for brute-force counting")
    if as_json:
        sub.add_argument("--json", action="store_true", help="JSON report on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorpart",
        description="Exact counting of pattern-avoiding colored set partitions.",
        epilog=f"formula ids: {_FORMULA_HELP}")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, help_n in (("count", "single n"), ("sequence", "n = 1..n_max")):
        sub = subs.add_parser(name, help=f"count avoiders for {help_n}")
        sub.add_argument("-p", "--pattern", action="append", required=True,
                         help="pattern like '1^1,2^1'; repeat or ';'-join for sets")
        sub.add_argument("--sense", choices=["eq", "lt", "pattern"], default="eq")
        sub.add_argument("-n", type=int, required=True,
                         help="n" if name == "count" else "n_max")
        sub.add_argument("-c", type=int, default=2, help="number of colors")
        sub.add_argument("--mode", choices=["brute", "formula", "both"], default="brute")
        _add_common(sub)
        sub.set_defaults(func=cmd_count)

    sub = subs.add_parser("verify", help="cross-check every closed form against brute force")
    sub.add_argument("--n-max", type=int, default=6, dest="n_max", help="max n at c=2")
    sub.add_argument("--n-max-c3", type=int, default=5, dest="n_max_c3", help="max n at c=3")
    sub.add_argument("--all", action="store_true", help="print every check, not just failures")
    _add_common(sub)
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("tables", help="regenerate a golden table and diff it")
    sub.add_argument("which", type=int, choices=[1, 2, 3])
    _add_common(sub)
    sub.set_defaults(func=cmd_tables)

    sub = subs.add_parser("wilf", help="classify the 25 length-3 patterns")
    sub.add_argument("--n-max", type=int, default=6, dest="n_max")
    sub.add_argument("-c", type=int, default=3)
    _add_common(sub)
    sub.set_defaults(func=cmd_wilf)

    sub = subs.add_parser("bijection", help="verify a bijection over its full domain")
    sub.add_argument("--which", choices=["marked", "rc"], required=True)
    sub.add_argument("-n", type=int, required=True)
    _add_common(sub, budget=False, workers=False)
    sub.set_defaults(func=cmd_bijection)

    sub = subs.add_parser("egf", help="check the three EGF expansions")
    sub.add_argument("--n-max", type=int, default=12, dest="n_max")
    _add_common(sub, budget=False, workers=False)
    sub.set_defaults(func=cmd_egf)

    sub = subs.add_parser("export", help="write a sequence as b-file, csv or json")
    sub.add_argument("--id", help=f"formula id ({_FORMULA_HELP})")
    sub.add_argument("-p", "--pattern", action="append",
                     help="pattern set to count by brute force")
    sub.add_argument("--sense", choices=["eq", "lt", "pattern"], default="eq")
    sub.add_argument("--n-max", type=int, required=True, dest="n_max")
    sub.add_argument("-c", type=int, default=2)
    sub.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")
    sub.add_argument("--output", default="-", help="file path, or - for stdout")
    _add_common(sub, as_json=False)
    sub.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PatternSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
