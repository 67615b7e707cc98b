"""Automaton and configuration data model shared by every semantics.

Words are plain ``str`` values whose characters are symbols; the empty
word is ``""``.  Rules are always stored in travel order
``(source, word, target)``: the automaton in ``source`` deletes ``word``
and moves to ``target``, whichever direction the model scans in.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Union

from .errors import (
    DeterminismViolation,
    EmptyRuleWord,
    ModelMismatch,
    ParseError,
    UnknownState,
    UnknownSymbol,
    WordOverAlphabet,
)

LAMBDA = "@"

# Symbols that would make the text formats ambiguous.
RESERVED_SYMBOLS = frozenset({LAMBDA, "#", "|", ":"})


class ModelKind(enum.Enum):
    ROWJ = "rowj"
    LOWJ = "lowj"
    GRL = "grl"
    GLL = "gll"
    GRC = "grc"
    GLC = "glc"
    GJFA = "gjfa"

    @classmethod
    def parse(cls, name: str) -> ModelKind:
        try:
            return cls(name.lower())
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown model {name!r} (expected one of {names})") from None

    @property
    def letter_only(self) -> bool:
        return self in (ModelKind.ROWJ, ModelKind.LOWJ)

    @property
    def is_linear(self) -> bool:
        return self in (ModelKind.GRL, ModelKind.GLL)

    @property
    def is_left(self) -> bool:
        return self in (ModelKind.LOWJ, ModelKind.GLL, ModelKind.GLC)

    @property
    def mirror(self) -> ModelKind:
        """The model scanning in the opposite direction (gjfa is its own mirror)."""
        return _MIRROR[self]

    def __str__(self) -> str:
        return self.value


_MIRROR = {
    ModelKind.ROWJ: ModelKind.LOWJ,
    ModelKind.LOWJ: ModelKind.ROWJ,
    ModelKind.GRL: ModelKind.GLL,
    ModelKind.GLL: ModelKind.GRL,
    ModelKind.GRC: ModelKind.GLC,
    ModelKind.GLC: ModelKind.GRC,
    ModelKind.GJFA: ModelKind.GJFA,
}


@dataclass(frozen=True, order=True)
class Rule:
    source: str
    word: str
    target: str

    def __str__(self) -> str:
        return f"({self.source},{self.word},{self.target})"


class ReturnMove:
    """Marker for the head-return step of the linear models."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "RETURN"

    __str__ = __repr__

    def __reduce__(self):
        return (ReturnMove, ())


RETURN = ReturnMove()

Move = Union[Rule, ReturnMove]


class CircularConfig(NamedTuple):
    """Configuration ``state tape`` of the circular models and gjfa.

    For right models the head sits on ``tape[0]``; for left models on
    ``tape[-1]``.
    """

    state: str
    tape: str

    @property
    def remaining(self) -> str:
        return self.tape

    def render(self) -> str:
        return f"{self.state}|{self.tape or LAMBDA}"


class LinearConfig(NamedTuple):
    """Configuration ``left state right`` of the linear models."""

    left: str
    state: str
    right: str

    @property
    def remaining(self) -> str:
        return self.left + self.right

    def render(self) -> str:
        return f"{self.left or LAMBDA}|{self.state}|{self.right or LAMBDA}"


Configuration = Union[CircularConfig, LinearConfig]


class StepResult(NamedTuple):
    successor: Configuration
    move: Move


@dataclass(frozen=True)
class Trace:
    """An accepting run: the initial configuration and the steps taken from it."""

    model: ModelKind
    initial: Configuration
    steps: tuple[StepResult, ...] = ()

    @property
    def configurations(self) -> list[Configuration]:
        return [self.initial] + [s.successor for s in self.steps]

    @property
    def final(self) -> Configuration:
        return self.steps[-1].successor if self.steps else self.initial

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Automaton:
    """A validated, immutable automaton ``(alphabet, states, start, finals, rules)``.

    ``alphabet`` keeps declaration order, which fixes the canonical word
    order used by enumeration.  Build instances with
    :func:`validate_automaton` rather than directly.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    start: str
    finals: frozenset[str]
    rules: tuple[Rule, ...]

    @cached_property
    def outgoing(self) -> Mapping[str, tuple[Rule, ...]]:
        table: dict[str, list[Rule]] = {s: [] for s in self.states}
        for rule in self.rules:
            table[rule.source].append(rule)
        return {s: tuple(sorted(rs, key=lambda r: r.word)) for s, rs in table.items()}

    @cached_property
    def symbol_index(self) -> Mapping[str, int]:
        return {sym: i for i, sym in enumerate(self.alphabet)}

    def target(self, source: str, word: str) -> str | None:
        for rule in self.outgoing.get(source, ()):
            if rule.word == word:
                return rule.target
        return None

    def check_word(self, word: str) -> None:
        bad = sorted(set(word) - set(self.alphabet))
        if bad:
            raise WordOverAlphabet(
                f"word {word!r} uses symbols {bad} outside alphabet {list(self.alphabet)}"
            )

    def canonical_key(self, word: str):
        index = self.symbol_index
        return (len(word), [index[c] for c in word])

    @property
    def is_letter_automaton(self) -> bool:
        return all(len(r.word) == 1 for r in self.rules)


def _as_rule(item) -> Rule:
    if isinstance(item, Rule):
        return item
    source, word, target = item
    return Rule(str(source), str(word), str(target))


def _check_state_token(token: str) -> None:
    if not token or any(ch.isspace() for ch in token):
        raise ParseError(f"invalid state id {token!r}")


def validate_automaton(raw: Mapping | Automaton) -> Automaton:
    """Validate a raw description and return an :class:`Automaton`.

    ``raw`` is a mapping with keys ``alphabet`` (iterable of one-character
    symbols), ``start``, ``finals`` (iterable of states), ``rules``
    (iterable of ``(source, word, target)`` triples or :class:`Rule`) and
    optionally ``states``.  Without ``states`` the state set is whatever
    the other fields mention; with it, any other state is an error.
    """
    if isinstance(raw, Automaton):
        raw = {
            "alphabet": raw.alphabet,
            "states": raw.states,
            "start": raw.start,
            "finals": [s for s in raw.states if s in raw.finals],
            "rules": raw.rules,
        }

    alphabet: list[str] = []
    for sym in raw["alphabet"]:
        sym = str(sym)
        if len(sym) != 1:
            raise ParseError(f"symbols must be single characters, got {sym!r}")
        if sym.isspace() or sym in RESERVED_SYMBOLS:
            raise ParseError(f"symbol {sym!r} is reserved")
        if sym in alphabet:
            raise ParseError(f"symbol {sym!r} declared twice")
        alphabet.append(sym)
    if not alphabet:
        raise ParseError("alphabet must be non-empty")

    start = str(raw["start"])
    finals = raw.get("finals", ())
    if isinstance(finals, (set, frozenset)):
        ranked = {s: i for i, s in enumerate(raw.get("states") or ())}
        finals = sorted(finals, key=lambda s: (ranked.get(s, len(ranked)), s))
    finals = [str(f) for f in finals]
    rules = [_as_rule(r) for r in raw.get("rules", ())]

    declared = raw.get("states")
    if declared is not None:
        declared = [str(s) for s in declared]
        known = set(declared)
        mentioned = [start, *finals]
        for rule in rules:
            mentioned += [rule.source, rule.target]
        for state in mentioned:
            if state not in known:
                raise UnknownState(f"state {state!r} is not declared")

    order: list[str] = []
    seen: set[str] = set()

    def note(state: str) -> None:
        if state not in seen:
            _check_state_token(state)
            seen.add(state)
            order.append(state)

    for state in [start, *finals]:
        note(state)

    symbols = set(alphabet)
    targets: dict[tuple[str, str], str] = {}
    unique: list[Rule] = []
    for rule in rules:
        if not rule.word:
            raise EmptyRuleWord(f"rule {rule} deletes the empty word")
        bad = sorted(set(rule.word) - symbols)
        if bad:
            raise UnknownSymbol(f"rule {rule} uses symbols {bad} outside the alphabet")
        note(rule.source)
        note(rule.target)
        key = (rule.source, rule.word)
        if key in targets:
            if targets[key] != rule.target:
                raise DeterminismViolation(
                    f"rules from {rule.source!r} on {rule.word!r} lead to both "
                    f"{targets[key]!r} and {rule.target!r}"
                )
            continue
        targets[key] = rule.target
        unique.append(rule)
    for state in declared or ():
        note(state)

    return Automaton(
        alphabet=tuple(alphabet),
        states=tuple(order),
        start=start,
        finals=frozenset(finals),
        rules=tuple(unique),
    )


def rule_words_of(automaton: Automaton, state: str) -> frozenset[str]:
    """Words some rule deletes when leaving ``state``.

    Rules are stored in travel order for every model, so this is the
    projection on the source for left models too.
    """
    if state not in automaton.outgoing:
        raise UnknownState(f"state {state!r} is not in the automaton")
    return frozenset(r.word for r in automaton.outgoing[state])


def check_model_compatibility(automaton: Automaton, model: ModelKind) -> None:
    model = ModelKind(model)
    if model.letter_only:
        for rule in automaton.rules:
            if len(rule.word) != 1:
                raise ModelMismatch(
                    f"{model} requires single-letter rules, but {rule} deletes {len(rule.word)} symbols",
                    rule=rule,
                )


def initial_configuration(model: ModelKind, word: str, start: str) -> Configuration:
    model = ModelKind(model)
    if model is ModelKind.GRL:
        return LinearConfig("", start, word)
    if model is ModelKind.GLL:
        return LinearConfig(word, start, "")
    return CircularConfig(start, word)


def is_accepting(automaton: Automaton, config: Configuration) -> bool:
    return not config.remaining and config.state in automaton.finals

