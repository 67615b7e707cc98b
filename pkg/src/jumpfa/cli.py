"""Command-line front end.

Exit status: 0 on ACCEPT / empty diff / success, 1 on REJECT / nonempty
diff, 2 on any error.  The empty word is written ``@``.  ``--file`` also
takes ``corpus:<name>`` to load one of the shipped example automata.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .core import LAMBDA, Automaton, ModelKind
from .engine import DEFAULT_MAX_WORDS, enumerate_language, search, trace
from .errors import JumpfaError
from .fileformat import dump_automaton, parse_automaton, parse_dfa
from .oracles import diff_sample, oracle, oracle_names
from .transforms import import_dfa, reverse_automaton

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _read(source: str, kind: str = "jfa") -> str:
    if source.startswith("corpus:"):
        return corpus.text(source[len("corpus:"):], kind)
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _load(source: str) -> Automaton:
    return parse_automaton(_read(source))


def _word(token: str) -> str:
    return "" if token == LAMBDA else token


def _show(word: str) -> str:
    return word or LAMBDA


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_check(args) -> int:
    automaton = _load(args.file)
    stats = search(automaton, args.model, _word(args.word), strict=args.strict_straddle)
    print("ACCEPT" if stats.accepted else "REJECT")
    print(f"configurations-visited: {stats.visited}")
    print(f"max-frontier: {stats.max_frontier}")
    return EXIT_OK if stats.accepted else EXIT_NO


def cmd_enum(args) -> int:
    automaton = _load(args.file)
    sample = enumerate_language(
        automaton, args.model, args.max_len, strict=args.strict_straddle, max_words=args.max_words
    )
    words = [_show(w) for w in sample.words]
    if args.format == "json":
        sys.stdout.write(json.dumps({"max_length": sample.max_length, "words": words},
                                    separators=(",", ":")) + "\n")
    else:
        sys.stdout.write("".join(w + "\n" for w in words))
    return EXIT_OK


def cmd_trace(args) -> int:
    automaton = _load(args.file)
    found = trace(automaton, args.model, _word(args.word), strict=args.strict_straddle)
    if found is None:
        print("REJECT")
        return EXIT_NO
    if not found.steps:
        print(found.initial.render())
    current = found.initial
    for step in found.steps:
        print(f"{current.render()} --{step.move}--> {step.successor.render()}")
        current = step.successor
    return EXIT_OK


def cmd_diff(args) -> int:
    automaton = _load(args.file)
    report = diff_sample(
        automaton, args.model, oracle(args.oracle), args.max_len,
        strict=args.strict_straddle, max_words=args.max_words,
    )
    print(f"max-length: {report.max_length}")
    print(f"missing ({len(report.missing)}):")
    for w in report.missing:
        print(f"  {_show(w)}")
    print(f"extra ({len(report.extra)}):")
    for w in report.extra:
        print(f"  {_show(w)}")
    return EXIT_OK if report.empty else EXIT_NO


def cmd_reverse(args) -> int:
    _write(dump_automaton(reverse_automaton(_load(args.file))), args.output)
    return EXIT_OK


def cmd_import_dfa(args) -> int:
    _write(dump_automaton(import_dfa(parse_dfa(_read(args.file, "dfa")))), args.output)
    return EXIT_OK


def cmd_oracles(args) -> int:
    for name in oracle_names():
        pred = oracle(name)
        print(f"{name:15} {{{','.join(pred.alphabet)}}}  {pred.description}")
    return EXIT_OK


def _model(name: str) -> ModelKind:
    try:
        return ModelKind.parse(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jumpfa", description="One-way jumping finite automata: membership, traces, enumeration."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word=False, bound=False):
        p.add_argument("--model", "-m", type=_model, required=True,
                       help="rowj, lowj, grl, gll, grc, glc or gjfa")
        p.add_argument("--file", "-f", required=True,
                       help="automaton file, '-' for stdin, or corpus:<name>")
        p.add_argument("--strict-straddle", action="store_true",
                       help="block a move when any rule word straddles the skip boundary")
        if word:
            p.add_argument("--word", "-w", required=True, help="input word ('@' for the empty word)")
        if bound:
            p.add_argument("--max-len", "-n", type=_non_negative, required=True)
            p.add_argument("--max-words", type=int, default=DEFAULT_MAX_WORDS,
                           help="guard on the number of candidate words")

    p = sub.add_parser("check", help="decide membership of one word")
    common(p, word=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("trace", help="print one accepting run")
    common(p, word=True)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("enum", help="list accepted words up to a length")
    common(p, bound=True)
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("diff", help="compare accepted words with a named oracle")
    common(p, bound=True)
    p.add_argument("--oracle", required=True, help=f"one of: {', '.join(oracle_names())}")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("reverse", help="write the word-reversed automaton")
    p.add_argument("--file", "-f", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reverse)

    p = sub.add_parser("import-dfa", help="convert a complete DFA to a letter-rule automaton")
    p.add_argument("--file", "-f", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_import_dfa)

    p = sub.add_parser("oracles", help="list the named oracle languages")
    p.set_defaults(func=cmd_oracles)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (JumpfaError, OSError, ValueError) as exc:
        print(f"jumpfa: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
