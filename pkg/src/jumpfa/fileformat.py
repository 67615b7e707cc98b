"""Line-oriented text format for automata and DFAs.

::

    # the shared example automaton
    alphabet: a b c
    start: q0
    final: q1
    rule: q0 c -> q0
    rule: q0 ab -> q1

``final:`` may list several states and may repeat.  States are declared
by appearing; an optional ``states:`` line declares extra isolated
states and is only written when needed.  Anything after ``#`` is a
comment.  The empty word is spelled ``@``.
"""

from __future__ import annotations

from pathlib import Path

from .core import LAMBDA, Automaton, validate_automaton
from .errors import IncompleteDfa, ParseError
from .transforms import Dfa, dfa_from_automaton

DIRECTIVES = ("alphabet", "start", "final", "states", "rule")


def parse_raw(text: str) -> dict:
    """Parse the text format into the raw mapping :func:`validate_automaton` takes."""
    alphabet = None
    start = None
    finals: list[str] = []
    extra_states: list[str] = []
    rules: list[tuple[str, str, str]] = []

    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in DIRECTIVES:
            raise ParseError(f"expected one of {', '.join(d + ':' for d in DIRECTIVES)}", lineno)
        tokens = rest.split()
        if key == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate alphabet: line", lineno)
            for tok in tokens:
                if len(tok) != 1:
                    raise ParseError(f"symbols must be single characters, got {tok!r}", lineno)
            alphabet = tokens
        elif key == "start":
            if start is not None:
                raise ParseError("duplicate start: line", lineno)
            if len(tokens) != 1:
                raise ParseError("start: takes exactly one state", lineno)
            start = tokens[0]
        elif key == "final":
            finals.extend(tokens)
        elif key == "states":
            extra_states.extend(tokens)
        else:
            if len(tokens) != 4 or tokens[2] != "->":
                raise ParseError("rule lines look like 'rule: <src> <word> -> <dst>'", lineno)
            src, word, _, dst = tokens
            rules.append((src, "" if word == LAMBDA else word, dst))

    if alphabet is None:
        raise ParseError("missing alphabet: line")
    if start is None:
        raise ParseError("missing start: line")
    raw = {"alphabet": alphabet, "start": start, "finals": finals, "rules": rules}
    if extra_states:
        raw["extra_states"] = extra_states
    return raw


def parse_automaton(text: str) -> Automaton:
    raw = parse_raw(text)
    extra = raw.pop("extra_states", None)
    if extra:
        mentioned = [raw["start"], *raw["finals"]]
        for src, _, dst in raw["rules"]:
            mentioned += [src, dst]
        raw["states"] = list(dict.fromkeys([*mentioned, *extra]))
    return validate_automaton(raw)


def load_automaton(path: str | Path) -> Automaton:
    return parse_automaton(Path(path).read_text(encoding="utf-8"))


def dump_automaton(automaton: Automaton) -> str:
    lines = [f"alphabet: {' '.join(automaton.alphabet)}", f"start: {automaton.start}"]
    finals = [s for s in automaton.states if s in automaton.finals]
    lines.append(f"final: {' '.join(finals)}".rstrip())
    implied = {automaton.start, *automaton.finals}
    for rule in automaton.rules:
        implied.update((rule.source, rule.target))
    isolated = [s for s in automaton.states if s not in implied]
    if isolated:
        lines.append(f"states: {' '.join(isolated)}")
    for rule in automaton.rules:
        lines.append(f"rule: {rule.source} {rule.word} -> {rule.target}")
    return "\n".join(lines) + "\n"


def parse_dfa(text: str) -> Dfa:
    """Parse a DFA written in the automaton format; transitions must be total."""
    automaton = parse_automaton(text)
    try:
        return dfa_from_automaton(automaton)
    except ParseError as exc:
        raise IncompleteDfa(str(exc)) from None


def load_dfa(path: str | Path) -> Dfa:
    return parse_dfa(Path(path).read_text(encoding="utf-8"))
