"""Single-step jump relations of the seven models, as successor lists.

Every function here is a literal transcription of its relation: it tries
each rule at each split of the tape and keeps the splits whose side
conditions hold.  That is quadratic and deliberately so; the fast path
lives in :mod:`jumpfa._kernel` and is checked against this module.

Successors come back in a fixed order: by how far the head travels
before the deleted factor, then by rule word, with the linear return move
last.

``strict=True`` switches to the leftmost-occurrence reading of the
nearest-subword condition: an occurrence of *any* word of ``Σ_p`` that
crosses the skip boundary blocks the move, not just one of the rule word
being applied.
"""

from __future__ import annotations

from collections.abc import Iterator

from .core import (
    RETURN,
    Automaton,
    CircularConfig,
    Configuration,
    LinearConfig,
    ModelKind,
    Rule,
    StepResult,
    rule_words_of,
)


def is_skip_clean(automaton: Automaton, state: str, skipped: str) -> bool:
    """True iff no rule word leaving ``state`` occurs inside ``skipped``."""
    words = rule_words_of(automaton, state)
    n = len(skipped)
    for i in range(n):
        for j in range(i + 1, n + 1):
            if skipped[i:j] in words:
                return False
    return True


def is_straddle_free(skipped: str, word: str) -> bool:
    """True iff no nonempty suffix of ``skipped`` followed by a nonempty
    prefix of ``word`` spells ``word``.
    """
    for k in range(1, len(skipped) + 1):
        suffix = skipped[len(skipped) - k:]
        for j in range(1, len(word) + 1):
            if suffix + word[:j] == word:
                return False
    return True


def is_straddle_free_left(word: str, skipped: str) -> bool:
    """Mirror of :func:`is_straddle_free` for leftward scans, where the
    skipped part lies to the right of the deleted word.
    """
    for k in range(1, len(skipped) + 1):
        prefix = skipped[:k]
        for j in range(1, len(word) + 1):
            if word[len(word) - j:] + prefix == word:
                return False
    return True


def _crosses_boundary(words, tape: str, boundary: int) -> bool:
    """True iff some occurrence of a word in ``words`` starts before
    ``boundary`` and ends after it."""
    for w in words:
        for s in range(max(0, boundary - len(w) + 1), boundary):
            if tape.startswith(w, s):
                return True
    return False


def _right_deletions(
    automaton: Automaton, state: str, tape: str, strict: bool
) -> Iterator[tuple[Rule, str, str]]:
    """Yield ``(rule, skipped, rest)`` for every admissible ``tape = skipped·word·rest``."""
    rules = automaton.outgoing[state]
    words = rule_words_of(automaton, state)
    for i in range(len(tape)):
        skipped = tape[:i]
        if not is_skip_clean(automaton, state, skipped):
            break
        for rule in rules:
            x = rule.word
            if not tape.startswith(x, i):
                continue
            if not is_straddle_free(skipped, x):
                continue
            if strict and _crosses_boundary(words, tape, i):
                continue
            yield rule, skipped, tape[i + len(x):]


def _left_deletions(
    automaton: Automaton, state: str, tape: str, strict: bool
) -> Iterator[tuple[Rule, str, str]]:
    """Yield ``(rule, rest, skipped)`` for every admissible ``tape = rest·word·skipped``."""
    rules = automaton.outgoing[state]
    words = rule_words_of(automaton, state)
    n = len(tape)
    for i in range(n, 0, -1):
        skipped = tape[i:]
        if not is_skip_clean(automaton, state, skipped):
            break
        for rule in rules:
            x = rule.word
            start = i - len(x)
            if start < 0 or not tape.startswith(x, start):
                continue
            if not is_straddle_free_left(x, skipped):
                continue
            if strict and _crosses_boundary(words, tape, i):
                continue
            yield rule, tape[:start], skipped


def circular_right_successors(
    automaton: Automaton, config: CircularConfig, *, strict: bool = False
) -> list[StepResult]:
    """``p u x v  ->  q v u`` for each rule ``(p, x, q)`` reachable past ``u``."""
    return [
        StepResult(CircularConfig(rule.target, rest + skipped), rule)
        for rule, skipped, rest in _right_deletions(automaton, config.state, config.tape, strict)
    ]


def circular_left_successors(
    automaton: Automaton, config: CircularConfig, *, strict: bool = False
) -> list[StepResult]:
    """``v x u p  ->  u v q``: scan leftwards from the end of the tape."""
    return [
        StepResult(CircularConfig(rule.target, skipped + rest), rule)
        for rule, rest, skipped in _left_deletions(automaton, config.state, config.tape, strict)
    ]


def _has_rule_word(automaton: Automaton, state: str, text: str) -> bool:
    return not is_skip_clean(automaton, state, text)


def linear_right_successors(
    automaton: Automaton, config: LinearConfig, *, strict: bool = False
) -> list[StepResult]:
    left, state, right = config
    out = [
        StepResult(LinearConfig(left + skipped, rule.target, rest), rule)
        for rule, skipped, rest in _right_deletions(automaton, state, right, strict)
    ]
    if left and not _has_rule_word(automaton, state, right):
        out.append(StepResult(LinearConfig("", state, left + right), RETURN))
    return out


def linear_left_successors(
    automaton: Automaton, config: LinearConfig, *, strict: bool = False
) -> list[StepResult]:
    """Mirror of :func:`linear_right_successors`.

    Here ``left`` is the part still ahead of the head and ``right`` the
    part already jumped over; the return move sends the head to the
    right end.
    """
    left, state, right = config
    out = [
        StepResult(LinearConfig(rest, rule.target, skipped + right), rule)
        for rule, rest, skipped in _left_deletions(automaton, state, left, strict)
    ]
    if right and not _has_rule_word(automaton, state, left):
        out.append(StepResult(LinearConfig(left + right, state, ""), RETURN))
    return out


def gjfa_successors(automaton: Automaton, config: CircularConfig) -> list[StepResult]:
    """Delete any occurrence of any rule word; no skipping rules, no rotation."""
    state, tape = config
    out = []
    seen = set()
    for i in range(len(tape)):
        for rule in automaton.outgoing[state]:
            if tape.startswith(rule.word, i):
                step = StepResult(CircularConfig(rule.target, tape[:i] + tape[i + len(rule.word):]), rule)
                if step not in seen:
                    seen.add(step)
                    out.append(step)
    return out


def letter_right_successors(automaton: Automaton, config: CircularConfig) -> list[StepResult]:
    """``p x a y  ->  q y x`` with ``x`` free of letters readable in ``p``."""
    state, tape = config
    readable = {r.word: r for r in automaton.outgoing[state]}
    out = []
    for i, symbol in enumerate(tape):
        if any(c in readable for c in tape[:i]):
            break
        if symbol in readable:
            out.append(StepResult(
                CircularConfig(readable[symbol].target, tape[i + 1:] + tape[:i]), readable[symbol]
            ))
    return out


def letter_left_successors(automaton: Automaton, config: CircularConfig) -> list[StepResult]:
    """``y a x p  ->  x y q`` with ``x`` free of letters readable in ``p``."""
    state, tape = config
    readable = {r.word: r for r in automaton.outgoing[state]}
    out = []
    for i in range(len(tape) - 1, -1, -1):
        if any(c in readable for c in tape[i + 1:]):
            break
        if tape[i] in readable:
            rule = readable[tape[i]]
            out.append(StepResult(CircularConfig(rule.target, tape[i + 1:] + tape[:i]), rule))
    return out


def successors(
    automaton: Automaton, model: ModelKind, config: Configuration, *, strict: bool = False
) -> list[StepResult]:
    """Dispatch to the successor function of ``model``."""
    model = ModelKind(model)
    if model is ModelKind.GRC:
        return circular_right_successors(automaton, config, strict=strict)
    if model is ModelKind.GLC:
        return circular_left_successors(automaton, config, strict=strict)
    if model is ModelKind.GRL:
        return linear_right_successors(automaton, config, strict=strict)
    if model is ModelKind.GLL:
        return linear_left_successors(automaton, config, strict=strict)
    if model is ModelKind.ROWJ:
        return letter_right_successors(automaton, config)
    if model is ModelKind.LOWJ:
        return letter_left_successors(automaton, config)
    return gjfa_successors(automaton, config)
