"""Closed-form membership predicates for the named example languages,
and differential comparison of an automaton against them.

Predicates never consult an automaton, so a diff against one is an
independent check of the engine.
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass

from .core import Automaton, ModelKind
from .engine import (
    DEFAULT_MAX_WORDS,
    LanguageSample,
    all_words,
    canonical_sorted,
    check_budget,
    enumerate_language,
)
from .errors import AlphabetMismatch, UnknownOracle


@dataclass(frozen=True)
class OraclePredicate:
    name: str
    membership: Callable[[str], bool]
    alphabet: tuple[str, ...]
    description: str = ""

    def __call__(self, word: str) -> bool:
        return self.membership(word)


@dataclass(frozen=True)
class DiffReport:
    max_length: int
    missing: tuple[str, ...]
    extra: tuple[str, ...]

    @property
    def empty(self) -> bool:
        return not self.missing and not self.extra

    def __bool__(self) -> bool:
        return not self.empty


def is_dyck(word: str) -> bool:
    depth = 0
    for c in word:
        depth += 1 if c == "a" else -1
        if depth < 0:
            return False
    return depth == 0


def is_equal_or_no_b(word: str) -> bool:
    return word.count("a") == word.count("b") or "b" not in word


def is_anbn(word: str) -> bool:
    n = len(word) // 2
    return word == "a" * n + "b" * n


def _regex(pattern: str) -> Callable[[str], bool]:
    compiled = re.compile(pattern)
    return lambda word: compiled.fullmatch(word) is not None


_REGISTRY = {
    "dyck": OraclePredicate(
        "dyck", is_dyck, ("a", "b"), "balanced words, a opens and b closes"),
    "equal-or-no-b": OraclePredicate(
        "equal-or-no-b", is_equal_or_no_b, ("a", "b"), "|w|_a = |w|_b or |w|_b = 0"),
    "anbn": OraclePredicate(
        "anbn", is_anbn, ("a", "b"), "a^n b^n, n >= 0"),
    "rowj-example": OraclePredicate(
        "rowj-example", _regex(r"ab*c|b*cab*"), ("a", "b", "c"),
        "a b^m c  |  b^l c a b^n"),
    "jfa-note": OraclePredicate(
        "jfa-note", _regex(r"b*ab*cb*|b*cb*ab*"), ("a", "b", "c"),
        "b^l a b^m c b^n  |  b^l c b^m a b^n"),
    "grl-example": OraclePredicate(
        "grl-example", _regex(r"c*ab|c*ac+bc*"), ("a", "b", "c"),
        "c^l a b  |  c^l a c^m b c^n, m >= 1"),
    "gll-example": OraclePredicate(
        "gll-example", _regex(r"abc*|c*ac+bc*"), ("a", "b", "c"),
        "a b c^n  |  c^l a c^m b c^n, m >= 1"),
    "grc-example": OraclePredicate(
        "grc-example", _regex(r"c*ab|c*ac+bc+|c*bc+a"), ("a", "b", "c"),
        "c^l a b  |  c^l a c^m b c^n, m,n >= 1  |  c^l b c^m a, m >= 1"),
    "glc-example": OraclePredicate(
        "glc-example", _regex(r"abc*|c+ac+bc*|bc+ac*"), ("a", "b", "c"),
        "a b c^n  |  c^l a c^m b c^n, l,m >= 1  |  b c^m a c^n, m >= 1"),
    "gjfa-example": OraclePredicate(
        "gjfa-example", _regex(r"c*ac*bc*"), ("a", "b", "c"),
        "c^l a c^m b c^n"),
}


def oracle_names() -> list[str]:
    return list(_REGISTRY)


def oracle(name: str) -> OraclePredicate:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownOracle(
            f"no oracle named {name!r} (known: {', '.join(_REGISTRY)})"
        ) from None


def predicate_sample(
    predicate: OraclePredicate,
    max_length: int,
    *,
    alphabet: tuple[str, ...] | None = None,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> LanguageSample:
    """Words up to ``max_length`` satisfying ``predicate``.

    ``alphabet`` only reorders the canonical order; it must be the
    predicate's alphabet as a set.
    """
    alphabet = tuple(alphabet or predicate.alphabet)
    if set(alphabet) != set(predicate.alphabet):
        raise AlphabetMismatch(f"{alphabet} is not the alphabet of oracle {predicate.name!r}")
    check_budget(len(alphabet), max_length, max_words)
    words = [w for w in all_words(alphabet, max_length) if predicate(w)]
    return LanguageSample(max_length, tuple(words), alphabet)


def diff_samples(subject: LanguageSample, reference: LanguageSample) -> DiffReport:
    """Words of ``reference`` not in ``subject`` (missing) and vice versa (extra)."""
    if set(subject.alphabet) != set(reference.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {subject.alphabet} vs {reference.alphabet}")
    bound = min(subject.max_length, reference.max_length)
    mine = {w for w in subject.words if len(w) <= bound}
    theirs = {w for w in reference.words if len(w) <= bound}
    order = subject.alphabet
    return DiffReport(
        max_length=bound,
        missing=tuple(canonical_sorted(theirs - mine, order)),
        extra=tuple(canonical_sorted(mine - theirs, order)),
    )


def diff_sample(
    automaton: Automaton,
    model: ModelKind,
    predicate: OraclePredicate,
    max_length: int,
    *,
    strict: bool = False,
    max_words: int | None = DEFAULT_MAX_WORDS,
) -> DiffReport:
    if set(automaton.alphabet) != set(predicate.alphabet):
        raise AlphabetMismatch(
            f"automaton alphabet {list(automaton.alphabet)} differs from "
            f"oracle {predicate.name!r} alphabet {list(predicate.alphabet)}"
        )
    accepted = enumerate_language(automaton, model, max_length, strict=strict, max_words=max_words)
    expected = predicate_sample(predicate, max_length, alphabet=automaton.alphabet, max_words=max_words)
    return diff_samples(accepted, expected)


def sample_predicate(sample: LanguageSample, name: str = "sample") -> OraclePredicate:
    """Wrap a sample as a predicate (exact only up to the sample's bound)."""
    members = frozenset(sample.words)
    return OraclePredicate(name, members.__contains__, sample.alphabet, f"finite sample <= {sample.max_length}")
