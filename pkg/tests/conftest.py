import random

import pytest
from hypothesis import strategies as st

from jumpfa import corpus
from jumpfa.core import validate_automaton

ALPHABETS = ("a", "ab", "abc")


def random_automaton(rng, *, max_states=4, max_word=3, alphabet=None, letter=False, density=0.35):
    """A random deterministic automaton with at most ``max_states`` states."""
    alphabet = alphabet or rng.choice(ALPHABETS)
    states = [f"q{i}" for i in range(rng.randint(1, max_states))]
    words = [w for n in range(1, (1 if letter else max_word) + 1)
             for w in _words(alphabet, n)]
    rules = []
    for p in states:
        for w in words:
            if rng.random() < density / (len(w) if not letter else 1):
                rules.append((p, w, rng.choice(states)))
    finals = [p for p in states if rng.random() < 0.5]
    return validate_automaton({
        "alphabet": alphabet, "start": "q0", "finals": finals, "rules": rules, "states": states,
    })


def _words(alphabet, n):
    if n == 0:
        return [""]
    return [w + c for w in _words(alphabet, n - 1) for c in alphabet]


@st.composite
def automata(draw, max_states=4, max_word=3, letter=False):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_automaton(random.Random(seed), max_states=max_states, max_word=max_word, letter=letter)


@st.composite
def automaton_and_tape(draw, max_tape=7, **kw):
    a = draw(automata(**kw))
    tape = draw(st.text(alphabet="".join(a.alphabet), max_size=max_tape))
    state = draw(st.sampled_from(a.states))
    return a, state, tape


@pytest.fixture(scope="session")
def shared():
    return corpus.load("shared_c_ab")


@pytest.fixture(scope="session")
def lab():
    return corpus.load("l_ab")


@pytest.fixture(scope="session")
def dyck_rule():
    return corpus.load("dyck_rule")


@pytest.fixture(scope="session")
def equal_counts():
    return corpus.load("equal_counts")


@pytest.fixture(scope="session")
def lc():
    return corpus.load("l_c")


@pytest.fixture(scope="session")
def rowj_example():
    return corpus.load("rowj_example")


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def verdict():
    """Record and print one PASS/FAIL line for an acceptance criterion."""
    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
