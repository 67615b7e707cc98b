"""Membership, accepting traces and bounded language enumeration.

Membership and enumeration go through the search kernel
(:mod:`jumpfa._kernel`); traces and reachability walk the reference
relations in :mod:`jumpfa.semantics` so that what they print is exactly
what the definitions allow.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from . import _kernel
from .core import (
    Automaton,
    Configuration,
    ModelKind,
    StepResult,
    Trace,
    check_model_compatibility,
    initial_configuration,
    is_accepting,
)
from .errors import BudgetExceeded, JumpfaError
from .semantics import successors

DEFAULT_MAX_WORDS = 2_000_000


@dataclass(frozen=True)
class SearchStats:
    visited: int
    max_frontier: int
    accepted: bool


@dataclass(frozen=True)
class LanguageSample:
    """Every word of some language up to ``max_length``, in canonical order.

    Canonical order is by length, then lexicographic with respect to the
    declaration order of ``alphabet``.
    """

    max_length: int
    words: tuple[str, ...]
    alphabet: tuple[str, ...]

    def __post_init__(self):
        if self.max_length < 0:
            raise ValueError("max_length must be non-negative")
        if any(len(w) > self.max_length for w in self.words):
            raise ValueError("sample contains a word longer than its bound")
        if tuple(canonical_sorted(set(self.words), self.alphabet)) != self.words:
            raise ValueError("sample words must be duplicate-free and canonically ordered")

    @classmethod
    def of(cls, words: Iterable[str], alphabet: Iterable[str], max_length: int) -> LanguageSample:
        alphabet = tuple(alphabet)
        kept = {w for w in words if len(w) <= max_length}
        return cls(max_length, tuple(canonical_sorted(kept, alphabet)), alphabet)

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return word in self._members

    @property
    def _members(self) -> frozenset[str]:
        return frozenset(self.words)

    def over(self, alphabet: Iterable[str]) -> LanguageSample:
        """The same words, re-declared over a larger alphabet."""
        alphabet = tuple(alphabet)
        missing = set(self.alphabet) - set(alphabet)
        if missing:
            raise ValueError(f"alphabet {alphabet} lacks symbols {sorted(missing)}")
        return LanguageSample.of(self.words, alphabet, self.max_length)


def canonical_sorted(words: Iterable[str], alphabet: Iterable[str]) -> list[str]:
    index = {c: i for i, c in enumerate(alphabet)}
    return sorted(words, key=lambda w: (len(w), [index[c] for c in w]))


def all_words(alphabet: tuple[str, ...], max_length: int) -> Iterable[str]:
    """Every word over ``alphabet`` up to ``max_length``, canonically ordered."""
    for n in range(max_length + 1):
        for letters in itertools.product(alphabet, repeat=n):
            yield "".join(letters)


def candidate_count(alphabet_size: int, max_length: int) -> int:
    return sum(alphabet_size ** n for n in range(max_length + 1))


def check_budget(alphabet_size: int, max_length: int, max_words: int | None) -> None:
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    if max_words is None:
        return
    total = candidate_count(alphabet_size, max_length)
    if total > max_words:
        raise BudgetExceeded(
            f"{total} candidate words for |alphabet|={alphabet_size}, "
            f"max_length={max_length} exceeds the guard of {max_words}"
        )


@lru_cache(maxsize=512)
def _program(automaton: Automaton, backend: str):
    if len(automaton.alphabet) > 256:
        raise JumpfaError("the search kernel supports at most 256 symbols")
    index = {s: i for i, s in enumerate(automaton.states)}
    table = tuple(
        tuple((_encode(automaton, r.word), index[r.target]) for r in automaton.outgoing[s])
        for s in automaton.states
    )
    finals = tuple(s in automaton.finals for s in automaton.states)
    return _kernel.get_backend(backend).prepare((index[automaton.start], finals, table))


def _encode(automaton: Automaton, word: str) -> bytes:
    index = automaton.symbol_index
    return bytes(index[c] for c in word)


def _run(automaton, model, word, strict, backend):
    model = ModelKind(model)
    check_model_compatibility(automaton, model)
    automaton.check_word(word)
    backend = backend or _kernel.DEFAULT_BACKEND
    kernel = _kernel.get_backend(backend)
    return kernel.search(
        _program(automaton, backend), _kernel.MODEL_CODES[model.value], _encode(automaton, word), strict
    )


def search(
    automaton: Automaton, model: ModelKind, word: str, *, strict: bool = False, backend: str | None = None
) -> SearchStats:
    """Run the breadth-first acceptance search and report its statistics."""
    accepted, visited, widest = _run(automaton, model, word, strict, backend)
    return SearchStats(visited=visited, max_frontier=widest, accepted=accepted)


def accepts(
    automaton: Automaton, model: ModelKind, word: str, *, strict: bool = False, backend: str | None = None
) -> bool:
    return _run(automaton, model, word, strict, backend)[0]


def trace(automaton: Automaton, model: ModelKind, word: str, *, strict: bool = False) -> Trace | None:
    """One accepting run, found depth-first, or ``None`` if ``word`` is rejected.

    Successors are explored in the order :func:`jumpfa.semantics.successors`
    returns them, so the trace is deterministic.
    """
    model = ModelKind(model)
    check_model_compatibility(automaton, model)
    automaton.check_word(word)
    start = initial_configuration(model, word, automaton.start)
    if is_accepting(automaton, start):
        return Trace(model, start)

    seen = {start}
    path: list[StepResult] = []
    stack = [iter(successors(automaton, model, start, strict=strict))]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            if path:
                path.pop()
            continue
        if step.successor in seen:
            continue
        seen.add(step.successor)
        path.append(step)
        if is_accepting(automaton, step.successor):
            return Trace(model, start, tuple(path))
        stack.append(iter(successors(automaton, model, step.successor, strict=strict)))
    return None


def replay(automaton: Automaton, tr: Trace, *, strict: bool = False) -> bool:
    """Check that every step of ``tr`` is a successor of the one before it."""
    current = tr.initial
    for step in tr.steps:
        if step not in successors(automaton, tr.model, current, strict=strict):
            return False
        current = step.successor
    return is_accepting(automaton, current)


def reachable_configurations(
    automaton: Automaton, model: ModelKind, word: str, *, strict: bool = False
) -> set[Configuration]:
    model = ModelKind(model)
    check_model_compatibility(automaton, model)
    automaton.check_word(word)
    start = initial_configuration(model, word, automaton.start)
    seen = {start}
    frontier = deque([start])
    while frontier:
        config = frontier.popleft()
        for step in successors(automaton, model, config, strict=strict):
            if step.successor not in seen:
                seen.add(step.successor)
                frontier.append(step.successor)
    return seen


def enumerate_language(
    automaton: Automaton,
    model: ModelKind,
    max_length: int,
    *,
    strict: bool = False,
    backend: str | None = None,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> LanguageSample:
    """All accepted words of length at most ``max_length``.

    Candidates are generated length-lexicographically and tested one by
    one; ``max_words`` caps the number of candidates.
    """
    model = ModelKind(model)
    check_model_compatibility(automaton, model)
    check_budget(len(automaton.alphabet), max_length, max_words)
    backend = backend or _kernel.DEFAULT_BACKEND
    kernel = _kernel.get_backend(backend)
    program = _program(automaton, backend)
    code = _kernel.MODEL_CODES[model.value]
    alphabet = automaton.alphabet
    symbols = range(len(alphabet))

    words = []
    for n in range(max_length + 1):
        for letters in itertools.product(symbols, repeat=n):
            if kernel.search(program, code, bytes(letters), strict)[0]:
                words.append("".join(alphabet[i] for i in letters))
    return LanguageSample(max_length, tuple(words), alphabet)
