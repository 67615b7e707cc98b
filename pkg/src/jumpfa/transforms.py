"""Automaton constructions and bounded-sample language operations.

Sample operations keep track of the length bound up to which their
result is exact, so a closure experiment cannot compare words beyond
the region where its operands are complete.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .core import Automaton, Rule, validate_automaton
from .engine import LanguageSample
from .errors import AlphabetMismatch, BoundViolation, IncompleteDfa, ParseError


def reverse_automaton(automaton: Automaton) -> Automaton:
    """Reverse every rule word; run the result under the mirrored model.

    A rule ``p --w--> q`` becomes ``p --reverse(w)--> q``.  Interpreted
    under the mirrored model (grc/glc, grl/gll, rowj/lowj) the result
    accepts exactly the reversals of the original's words.
    """
    return validate_automaton({
        "alphabet": automaton.alphabet,
        "states": automaton.states,
        "start": automaton.start,
        "finals": automaton.finals,
        "rules": [Rule(r.source, r.word[::-1], r.target) for r in automaton.rules],
    })


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic finite automaton."""

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    start: str
    finals: frozenset[str]
    delta: Mapping[tuple[str, str], str]

    def __post_init__(self):
        if self.start not in self.states:
            raise IncompleteDfa(f"start state {self.start!r} is not a state")
        for state in self.states:
            for symbol in self.alphabet:
                target = self.delta.get((state, symbol))
                if target is None:
                    raise IncompleteDfa(f"no transition from {state!r} on {symbol!r}")
                if target not in self.states:
                    raise IncompleteDfa(f"transition to unknown state {target!r}")
        if not self.finals <= set(self.states):
            raise IncompleteDfa("final states must be states")

    @classmethod
    def from_rules(cls, alphabet, start, finals, rules: Iterable) -> Dfa:
        delta: dict[tuple[str, str], str] = {}
        states = [start]
        for source, symbol, target in rules:
            if len(symbol) != 1:
                raise IncompleteDfa(f"DFA transitions read one symbol, got {symbol!r}")
            if (source, symbol) in delta and delta[source, symbol] != target:
                raise IncompleteDfa(f"two transitions from {source!r} on {symbol!r}")
            delta[source, symbol] = target
            for s in (source, target):
                if s not in states:
                    states.append(s)
        for s in finals:
            if s not in states:
                states.append(s)
        return cls(tuple(alphabet), tuple(states), start, frozenset(finals), delta)

    def accepts(self, word: str) -> bool:
        state = self.start
        for symbol in word:
            state = self.delta[state, symbol]
        return state in self.finals


def import_dfa(dfa: Dfa) -> Automaton:
    """One letter rule per DFA transition.

    Every state can read every symbol, so the automaton can never jump
    and the rightward models behave exactly like the DFA.
    """
    if not isinstance(dfa, Dfa):
        raise IncompleteDfa("expected a Dfa")
    return validate_automaton({
        "alphabet": dfa.alphabet,
        "states": dfa.states,
        "start": dfa.start,
        "finals": sorted(dfa.finals, key=dfa.states.index),
        "rules": [
            (state, symbol, dfa.delta[state, symbol])
            for state in dfa.states
            for symbol in dfa.alphabet
        ],
    })


def dfa_from_automaton(automaton: Automaton) -> Dfa:
    """Read a letter-rule automaton back as a DFA (must be complete)."""
    for rule in automaton.rules:
        if len(rule.word) != 1:
            raise ParseError(f"DFA transitions read one symbol, got rule {rule}")
    return Dfa(
        automaton.alphabet,
        automaton.states,
        automaton.start,
        automaton.finals,
        {(r.source, r.word): r.target for r in automaton.rules},
    )


def _same_alphabet(s1: LanguageSample, s2: LanguageSample) -> None:
    if set(s1.alphabet) != set(s2.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {s1.alphabet} vs {s2.alphabet}")


def sample_reverse(sample: LanguageSample) -> LanguageSample:
    return LanguageSample.of((w[::-1] for w in sample.words), sample.alphabet, sample.max_length)


def sample_intersect(s1: LanguageSample, s2: LanguageSample) -> LanguageSample:
    _same_alphabet(s1, s2)
    bound = min(s1.max_length, s2.max_length)
    return LanguageSample.of(set(s1.words) & set(s2.words), s1.alphabet, bound)


def sample_union(s1: LanguageSample, s2: LanguageSample) -> LanguageSample:
    _same_alphabet(s1, s2)
    bound = min(s1.max_length, s2.max_length)
    return LanguageSample.of(set(s1.words) | set(s2.words), s1.alphabet, bound)


def sample_concat(s1: LanguageSample, s2: LanguageSample, max_length: int) -> LanguageSample:
    """``{xy : x in s1, y in s2}`` up to ``max_length``.

    Exact as long as ``max_length`` does not exceed either operand's
    bound, which is enforced.
    """
    _same_alphabet(s1, s2)
    if max_length > min(s1.max_length, s2.max_length):
        raise BoundViolation(
            f"bound {max_length} exceeds operand bounds {s1.max_length}, {s2.max_length}"
        )
    words = {x + y for x in s1.words for y in s2.words if len(x) + len(y) <= max_length}
    return LanguageSample.of(words, s1.alphabet, max_length)


def sample_star(sample: LanguageSample, max_length: int) -> LanguageSample:
    """Kleene closure up to ``max_length`` (at most the operand's bound)."""
    if max_length > sample.max_length:
        raise BoundViolation(f"bound {max_length} exceeds operand bound {sample.max_length}")
    pieces = [w for w in sample.words if w and len(w) <= max_length]
    reached = {""}
    frontier = [""]
    while frontier:
        nxt = []
        for prefix in frontier:
            for piece in pieces:
                word = prefix + piece
                if len(word) <= max_length and word not in reached:
                    reached.add(word)
                    nxt.append(word)
        frontier = nxt
    return LanguageSample.of(reached, sample.alphabet, max_length)
