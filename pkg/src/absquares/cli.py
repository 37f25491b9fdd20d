"""Command-line driver: count, search, avoid, verify, construct, table.

Exit codes: 0 success / all PASS, 2 a check FAILed, 3 a result is
UNRESOLVED (budget ran out), 64 usage error, 65 bad input data.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, counting, families, search
from .reports import EXIT_OK, EXIT_UNRESOLVED
from .words import Word, WordFormatError, glyph_style, render_word, word

EX_USAGE = 64
EX_DATA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="absquares", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="census of abelian squares in a word")
    p.add_argument("word", nargs="?", help="word text over a-h or 0-7")
    p.add_argument("--file", help="file with one word per line")
    p.add_argument("--topology", choices=("linear", "circular"), default="linear")
    p.add_argument("--mode", default="all",
                   choices=("all", "total", "distinct", "noneq", "k-abelian", "squares", "power"))
    p.add_argument("--k", type=int, help="order for --mode k-abelian")
    p.add_argument("--p", type=int, help="order for --mode power")
    p.add_argument("--occurrences", action="store_true", help="include occurrence list")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search", help="solve one extremal problem exactly")
    p.add_argument("--objective", choices=search.OBJECTIVES, required=True)
    p.add_argument("--mode", choices=search.MODES, required=True)
    p.add_argument("--topology", choices=search.TOPOLOGIES, default="linear")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=2, help="alphabet size")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int, help="node budget (default 10^9)")
    p.add_argument("--resume", help="checkpoint file to continue from / write to")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("avoid", help="longest word within a distinct-square budget")
    p.add_argument("--t", type=int, required=True, help="alphabet size")
    p.add_argument("--kind", choices=search.AVOIDANCE_KINDS, default="abelian")
    p.add_argument("--max-distinct", type=int, help="allowed distinct squares")
    p.add_argument("--max-square-length", type=int, help="allowed square length")
    p.add_argument("--k", type=int, default=2, help="order for k-abelian kind")
    p.add_argument("--p", type=int, default=3, help="order for abelian-power kind")
    p.add_argument("--cap", type=int, default=200, help="length cap")
    p.add_argument("--budget", type=int, help="node budget (default 10^9)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check conjectured values / catalogued words")
    p.add_argument("--target", required=True,
                   choices=("fps", "fici-saarela", "circular-min-distinct",
                            "circular-min-noneq", "binary-max", "named-words", "appendix"))
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("construct", help="emit a word from a named family")
    p.add_argument("--family", choices=families.FAMILY_NAMES, required=True)
    p.add_argument("--param", required=True,
                   help="family parameter (length, index, or word id; 'list' lists ids)")

    p = sub.add_parser("table", help="reproduce an expected-value table by search")
    p.add_argument("--id", dest="table_id", choices=catalog.TABLE_IDS, required=True)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int)

    return parser


def _count_one(w: Word, args, style: str) -> tuple[dict, list[str]]:
    name = render_word(w, style)
    if args.mode == "squares":
        value = counting.count_distinct_ordinary_squares(w)
        return ({"word": name, "topology": args.topology, "n": len(w),
                 "distinct_ordinary_squares": value},
                [f"{name}: distinct ordinary squares: {value}"])
    if args.mode == "power":
        value = counting.is_abelian_power(w, args.p)
        return ({"word": name, "topology": args.topology, "n": len(w),
                 "p": args.p, "is_abelian_power": value},
                [f"{name}: abelian {args.p}-power: {'yes' if value else 'no'}"])
    if args.mode == "k-abelian":
        occ = list(counting.enumerate_k_abelian_squares(w, args.k))
        record = {"word": name, "topology": args.topology, "n": len(w),
                  "k": args.k, "total": len(occ)}
        if args.occurrences:
            record["occurrences"] = [[o.start, o.half_length] for o in occ]
        return record, [f"{name}: {args.k}-abelian square occurrences: {len(occ)}"]
    census = counting.census(w, keep_occurrences=args.occurrences)
    record = counting.census_record(w, census, style)
    if args.mode == "all":
        lines = [f"{name} ({args.topology}, n={len(w)}): total {census.total}, "
                 f"distinct {census.distinct}, nonequivalent {census.nonequivalent}"]
    else:
        value = census.by_mode(args.mode)
        lines = [f"{name}: {args.mode} {value}"]
    if args.occurrences:
        lines.append("occurrences (start, half length): "
                     + " ".join(f"({o.start},{o.half_length})" for o in census.occurrences))
    return record, lines


def _cmd_count(args) -> int:
    if (args.word is None) == (args.file is None):
        return _usage_error("count", "provide exactly one of WORD or --file")
    if args.mode == "k-abelian" and (args.k is None or args.k < 1):
        return _usage_error("count", "--mode k-abelian requires --k >= 1")
    if args.mode == "power" and (args.p is None or args.p < 2):
        return _usage_error("count", "--mode power requires --p >= 2")
    circular = args.topology == "circular"
    try:
        if args.word is not None:
            texts = [args.word]
        else:
            with open(args.file) as fh:
                texts = [line.strip() for line in fh if line.strip()]
        words = [word(text, circular=circular) for text in texts]
    except (OSError, WordFormatError) as exc:
        print(f"absquares count: {exc}", file=sys.stderr)
        return EX_DATA
    records = []
    lines = []
    for w, text in zip(words, texts):
        record, out = _count_one(w, args, glyph_style(text))
        records.append(record)
        lines.extend(out)
    if args.json:
        _print_json(records[0] if len(records) == 1 else records)
    else:
        print("\n".join(lines))
    return EXIT_OK


def _usage_error(command: str, message: str) -> int:
    print(f"absquares {command}: error: {message}", file=sys.stderr)
    return EX_USAGE


def _cmd_search(args) -> int:
    try:
        problem = search.ProblemSpec(args.objective, args.mode, args.topology, args.n, args.t)
    except ValueError as exc:
        return _usage_error("search", str(exc))
    try:
        result = search.solve(problem, node_budget=args.budget, threads=args.threads,
                              state_path=args.resume)
    except search.SearchBudgetExceeded as exc:
        print(f"UNRESOLVED: {exc}", file=sys.stderr)
        if args.resume:
            print(f"progress saved to {args.resume}; rerun with a larger --budget",
                  file=sys.stderr)
        return EXIT_UNRESOLVED
    except ValueError as exc:
        print(f"absquares search: {exc}", file=sys.stderr)
        return EX_DATA
    if args.json:
        _print_json(result.to_dict())
    else:
        shown = [render_word(w) for w in result.canonical_witnesses[:10]]
        more = len(result.canonical_witnesses) - len(shown)
        print(f"{problem.shorthand()} = {result.value}")
        print(f"attaining words: {result.witness_count}"
              + (" (witness list capped)" if result.witness_capped else ""))
        print("canonical witnesses: " + " ".join(shown) + (f" ... +{more}" if more > 0 else ""))
        print(f"nodes: {result.nodes}")
    return EXIT_OK


def _cmd_avoid(args) -> int:
    try:
        spec = search.AvoidanceSpec(
            alphabet_size=args.t,
            kind=args.kind,
            k=args.k,
            power=args.p,
            max_distinct=args.max_distinct,
            max_square_length=args.max_square_length,
            length_cap=args.cap,
            node_budget=args.budget if args.budget else search.DEFAULT_NODE_BUDGET,
        )
    except ValueError as exc:
        return _usage_error("avoid", str(exc))
    result = search.longest_avoiding(spec)
    if args.json:
        _print_json({
            "alphabet_size": spec.alphabet_size,
            "kind": spec.kind,
            "max_distinct": spec.max_distinct,
            "max_square_length": spec.max_square_length,
            "length": result.length,
            "witnesses": [render_word(w) for w in result.witnesses],
            "exhausted": result.exhausted,
            "nodes": result.nodes,
        })
    else:
        print(f"longest length: {result.length} (exhausted: {'yes' if result.exhausted else 'no'})")
        for w in result.witnesses[:5]:
            print(f"  {render_word(w)}")
        if len(result.witnesses) > 5:
            print(f"  ... +{len(result.witnesses) - 5} more")
        print(f"nodes: {result.nodes}")
    return EXIT_UNRESOLVED if result.budget_exhausted else EXIT_OK


_VERIFY_TARGET_MAP = {
    "fps": "fps-min-noneq",
    "fici-saarela": "fici-saarela-min-distinct",
    "circular-min-distinct": "circular-min-distinct",
    "circular-min-noneq": "circular-min-noneq-theorem",
    "binary-max": "binary-maximizes-distinct",
}


def _cmd_verify(args) -> int:
    if args.target == "named-words":
        report = catalog.verify_named_words()
    elif args.target == "appendix":
        report = catalog.verify_named_words()
        report.lines = [line for line in report.lines if line.label == "appendix"]
    else:
        report = search.verify_conjecture(
            _VERIFY_TARGET_MAP[args.target], args.n_max,
            node_budget=args.budget, threads=args.threads,
        )
    if args.json:
        _print_json(report.to_dict())
    else:
        print(report.format_text(color=_use_color()))
    return report.exit_code


def _cmd_construct(args) -> int:
    if args.family == "named" and args.param == "list":
        print("\n".join(catalog.named_word_ids()))
        return EXIT_OK
    try:
        w = families.generate(args.family, args.param)
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"absquares construct: {message}", file=sys.stderr)
        return EX_DATA
    style = catalog.named_word_style(args.param) if args.family == "named" else "letters"
    print(render_word(w, style))
    return EXIT_OK


def _cmd_table(args) -> int:
    try:
        report = catalog.reproduce_table(args.table_id, args.n_max,
                                         node_budget=args.budget, threads=args.threads)
    except ValueError as exc:
        return _usage_error("table", str(exc))
    if args.format == "json":
        _print_json(report.to_dict())
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_markdown())
    return report.exit_code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "search": _cmd_search,
        "avoid": _cmd_avoid,
        "verify": _cmd_verify,
        "construct": _cmd_construct,
        "table": _cmd_table,
    }
    try:
        return handlers[args.command](args)
    except catalog.CatalogDataError as exc:
        print(f"absquares: data error: {exc}", file=sys.stderr)
        return EX_DATA


if __name__ == "__main__":
    sys.exit(main())
