"""Command-line interface.

Subcommands: analyze, construct, verify, search (plus `search table`).
Exit codes: 0 success / claim verified, 1 claim refuted (counterexample
printed), 2 usage, parse, or resource-budget errors. With --json exactly one
JSON document is written to stdout, with a fixed key order so identical runs
are byte-identical; no ANSI escapes are ever emitted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .constructions import cube_examples, prop2_word, prop3_word, square_chain
from .errors import PartialWordError, ResourceLimitError
from .powers import power_profile
from .search import (
    DEFAULT_NODE_BUDGET,
    SearchQuery,
    lower_bound_table,
    search_max_powers,
)
from .verify import (
    DEFAULT_CHECK_BUDGET,
    VerificationReport,
    verify_construction,
    verify_corollary_full,
    verify_fine_wilf,
    verify_lemma_2k,
    verify_lemma_short,
    verify_lemma_h1,
    verify_theorem_sq_bound,
)
from .words import Alphabet, PartialWord, format_word, parse_word


def _print_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _positions_set(positions) -> str:
    return "{" + ",".join(str(p) for p in positions) + "}"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--jobs", type=int, default=1, metavar="J",
                        help="worker threads (results are identical for any value)")
    parser.add_argument("--budget", type=int, default=None, metavar="B",
                        help="enumeration budget override (words checked / nodes explored)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwpowers",
        description="Squares, cubes, and higher powers in partial words: "
        "analysis, constructions, bounded verification, exhaustive search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="power profile of one word (or stdin batch)")
    pa.add_argument("word", nargs="?", default=None,
                    help="word text: letters a-z, holes '.' or '◊'")
    pa.add_argument("--r", type=int, required=True, metavar="R", help="exponent, >= 2")
    pa.add_argument("--alphabet", type=int, default=None, metavar="K",
                    help="alphabet size (default: inferred from the word)")
    pa.add_argument("--stdin", action="store_true", help="read one word per line from stdin")
    _add_common(pa)

    pc = sub.add_parser("construct", help="emit an extremal word family member")
    csub = pc.add_subparsers(dest="generator", required=True)
    cc = csub.add_parser("square-chain", help="doubling family word, k squares from one start")
    cc.add_argument("--k", type=int, required=True, metavar="K")
    _add_common(cc)
    c2 = csub.add_parser("prop2", help="length-2r word with two r-th powers from one start")
    c2.add_argument("--r", type=int, required=True, metavar="R")
    _add_common(c2)
    c3 = csub.add_parser("prop3", help="length-3r word with three r-th powers from one start")
    c3.add_argument("--r", type=int, required=True, metavar="R")
    c3.add_argument("--unchecked", action="store_true",
                    help="emit the formula word for any r >= 3, without profile claims")
    _add_common(c3)
    ce = csub.add_parser("cube-examples", help="the two length-9 three-cube words")
    _add_common(ce)

    pv = sub.add_parser("verify", help="brute-force check of a claim on a bounded space")
    vsub = pv.add_subparsers(dest="claim", required=True)
    vf = vsub.add_parser("fine-wilf", help="two strong periods force their gcd on full words")
    vf.add_argument("--k", type=int, required=True, metavar="K")
    vf.add_argument("--max-len", type=int, required=True, metavar="N")
    _add_common(vf)
    vc = vsub.add_parser("corollary-full",
                         help="full words: a doubled power start is never the last start")
    vc.add_argument("--r", type=int, required=True, metavar="R")
    vc.add_argument("--k", type=int, required=True, metavar="K")
    vc.add_argument("--max-len", type=int, required=True, metavar="N")
    _add_common(vc)
    vh = vsub.add_parser("lemma-h1",
                         help="multiple same-start squares force hole set {1}")
    vh.add_argument("--k", type=int, required=True, metavar="K")
    vh.add_argument("--max-len", type=int, required=True, metavar="N")
    _add_common(vh)
    v2 = vsub.add_parser("lemma-2k", help="long unique-start square forces an interior start")
    v2.add_argument("--k", type=int, required=True, metavar="K")
    v2.add_argument("--max-u-len", type=int, required=True, metavar="M")
    _add_common(v2)
    vs = vsub.add_parser("lemma-short", help="short matching square forces a square inside v")
    vs.add_argument("--k", type=int, required=True, metavar="K")
    vs.add_argument("--max-u-len", type=int, required=True, metavar="M")
    _add_common(vs)
    vt = vsub.add_parser("theorem-sq", help="unique-start words carry at most k squares")
    vt.add_argument("--k", type=int, required=True, metavar="K")
    vt.add_argument("--max-len", type=int, required=True, metavar="N")
    vt.add_argument("--bound", type=int, default=None, metavar="B",
                    help="override the asserted bound (default k); probes tightness")
    _add_common(vt)
    vx = vsub.add_parser("construction", help="re-check a construction's occurrence profile")
    vx.add_argument("--name", required=True,
                    choices=["square-chain", "prop2", "prop3", "cube-examples"])
    vx.add_argument("--k", type=int, default=None, metavar="K")
    vx.add_argument("--r", type=int, default=None, metavar="R")
    _add_common(vx)

    ps = sub.add_parser("search", help="exhaustive bounded search for many-power words")
    ssub = ps.add_subparsers(dest="search_cmd")
    ps.add_argument("--r", type=int, default=None, metavar="R")
    ps.add_argument("--k", type=int, default=None, metavar="K")
    ps.add_argument("--max-len", type=int, default=None, metavar="N")
    ps.add_argument("--t", type=int, default=1, metavar="T",
                    help="max distinct occurrence starts (default 1)")
    ps.add_argument("--witness-cap", type=int, default=16, metavar="C")
    _add_common(ps)
    st = ssub.add_parser("table", help="grid of bounded searches over (r, k) cells")
    st.add_argument("--r-min", type=int, required=True, metavar="R0")
    st.add_argument("--r-max", type=int, required=True, metavar="R1")
    st.add_argument("--k-min", type=int, required=True, metavar="K0")
    st.add_argument("--k-max", type=int, required=True, metavar="K1")
    st.add_argument("--max-len", type=int, required=True, metavar="N")
    st.add_argument("--t", type=int, default=1, metavar="T")
    st.add_argument("--witness-cap", type=int, default=4, metavar="C")
    st.add_argument("--csv", action="store_true", help="CSV instead of aligned text")
    _add_common(st)

    return parser


def _profile_text(profile) -> str:
    w = profile.word
    lines = [
        f"word: {format_word(w)}",
        f"length: {len(w)}",
        f"alphabet: {w.alphabet.size}",
        f"defined: {_positions_set(w.defined_positions())}",
        f"holes: {_positions_set(w.hole_positions())}",
        f"occurrences (r={profile.exponent}): {len(profile.occurrences)}",
    ]
    for o in profile.occurrences:
        lines.append(f"  start {o.start} length {o.length} root {o.root_length}")
    lines.append(f"start positions: {_positions_set(profile.start_positions)}")
    unique = profile.unique_start
    lines.append(f"unique start: {unique if unique is not None else '-'}")
    return "\n".join(lines)


def _run_analyze(args) -> int:
    alphabet = Alphabet(args.alphabet) if args.alphabet is not None else None
    if args.stdin and args.word is not None:
        print("analyze: give a word argument or --stdin, not both", file=sys.stderr)
        return 2
    if not args.stdin and args.word is None:
        print("analyze: a word argument (or --stdin) is required", file=sys.stderr)
        return 2
    texts = (
        [line.strip() for line in sys.stdin if line.strip()]
        if args.stdin
        else [args.word]
    )
    profiles = []
    for idx, text in enumerate(texts, start=1):
        try:
            word = parse_word(text, alphabet)
        except PartialWordError as exc:
            where = f"line {idx}: " if args.stdin else ""
            print(f"analyze: {where}{exc}", file=sys.stderr)
            return 2
        profiles.append(power_profile(word, args.r))
    if args.json:
        docs = [p.to_json_dict() for p in profiles]
        _print_json(docs if args.stdin else docs[0])
    else:
        print("\n\n".join(_profile_text(p) for p in profiles))
    return 0


def _run_construct(args) -> int:
    if args.generator == "square-chain":
        words = [square_chain(args.k)]
        parameters = {"k": args.k}
    elif args.generator == "prop2":
        words = [prop2_word(args.r)]
        parameters = {"r": args.r}
    elif args.generator == "prop3":
        words = [prop3_word(args.r, unchecked=args.unchecked)]
        parameters = {"r": args.r, "unchecked": args.unchecked}
    else:
        words = cube_examples()
        parameters = {}
    if args.json:
        _print_json(
            {
                "name": args.generator,
                "parameters": parameters,
                "words": [format_word(w) for w in words],
            }
        )
    else:
        for w in words:
            print(format_word(w))
    return 0


def _report_text(report: VerificationReport) -> str:
    params = " ".join(f"{key}={value}" for key, value in report.parameters.items())
    lines = [
        f"claim: {report.claim}",
        f"parameters: {params}",
        f"instances checked: {report.instances_checked}",
        f"outcome: {report.outcome.upper()}",
    ]
    if report.counterexample is not None:
        lines.append(f"counterexample: {format_word(report.counterexample.word)}")
        for key, value in report.counterexample.context.items():
            lines.append(f"  {key}: {value}")
    for key, value in report.findings.items():
        lines.append(f"{key}: {value}")
    lines.append(f"elapsed: {report.elapsed_seconds:.3f}s")
    return "\n".join(lines)


def _run_verify(args) -> int:
    budget = args.budget if args.budget is not None else DEFAULT_CHECK_BUDGET
    if args.claim == "fine-wilf":
        report = verify_fine_wilf(args.k, args.max_len, budget=budget)
    elif args.claim == "corollary-full":
        report = verify_corollary_full(args.r, args.k, args.max_len, budget=budget)
    elif args.claim == "lemma-h1":
        report = verify_lemma_h1(args.k, args.max_len, budget=budget)
    elif args.claim == "lemma-2k":
        report = verify_lemma_2k(args.k, args.max_u_len, budget=budget)
    elif args.claim == "lemma-short":
        report = verify_lemma_short(args.k, args.max_u_len, budget=budget)
    elif args.claim == "theorem-sq":
        report = verify_theorem_sq_bound(args.k, args.max_len, bound=args.bound, budget=budget)
    else:
        report = verify_construction(args.name, k=args.k, r=args.r, budget=budget)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(_report_text(report))
    return 0 if report.passed else 1


def _search_text(result) -> str:
    lines = [f"best count: {result.best_count}", f"witnesses ({len(result.witnesses)}):"]
    for w in result.witnesses:
        lines.append(f"  {format_word(w)}")
    lines.extend(
        [
            f"nodes explored: {result.nodes_explored}",
            f"pruned by symmetry: {result.pruned_by_symmetry}",
            f"pruned by start bound: {result.pruned_by_start_bound}",
            f"exhaustive: {'yes' if result.exhaustive else 'no'}",
        ]
    )
    return "\n".join(lines)


def _run_search(args) -> int:
    budget = args.budget if args.budget is not None else DEFAULT_NODE_BUDGET
    if args.search_cmd == "table":
        cells = lower_bound_table(
            range(args.r_min, args.r_max + 1),
            range(args.k_min, args.k_max + 1),
            args.max_len,
            t=args.t,
            witness_cap=args.witness_cap,
            budget=budget,
            jobs=args.jobs,
        )
        rows = [cell.to_json_dict() for cell in cells]
        if args.json:
            _print_json(rows)
            return 0
        header = ["r", "k", "maxLen", "best", "exhaustive", "known", "flag", "witness"]
        table = [
            [
                str(row["r"]),
                str(row["k"]),
                str(row["maxLen"]),
                str(row["bestCount"]),
                "yes" if row["exhaustive"] else "no",
                "-" if row["knownBound"] is None
                else ("=" if row["knownExact"] else ">=") + str(row["knownBound"]),
                row["flag"] or "-",
                row["witness"] if row["witness"] is not None else "-",
            ]
            for row in rows
        ]
        if args.csv:
            import csv

            writer = csv.writer(sys.stdout)
            writer.writerow(header)
            writer.writerows(table)
        else:
            widths = [max(len(h), *(len(r[i]) for r in table)) if table else len(h)
                      for i, h in enumerate(header)]
            print("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip())
            for r in table:
                print("  ".join(r[i].ljust(widths[i]) for i in range(len(header))).rstrip())
        return 0

    missing = [name for name, val in (("--r", args.r), ("--k", args.k), ("--max-len", args.max_len))
               if val is None]
    if missing:
        print(f"search: missing required options: {', '.join(missing)}", file=sys.stderr)
        return 2
    query = SearchQuery(
        exponent=args.r,
        alphabet_size=args.k,
        max_len=args.max_len,
        max_start_positions=args.t,
        witness_cap=args.witness_cap,
    )
    result = search_max_powers(query, budget=budget, jobs=args.jobs)
    if args.json:
        _print_json(result.to_json_dict())
    else:
        print(_search_text(result))
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _run_analyze(args)
        if args.command == "construct":
            return _run_construct(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_search(args)
    except ResourceLimitError as exc:
        print(f"pwpowers: {exc}", file=sys.stderr)
        return 2
    except (PartialWordError, ValueError) as exc:
        print(f"pwpowers: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
