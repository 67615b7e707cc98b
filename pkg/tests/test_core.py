import pytest
from hypothesis import given, settings

from jumpfa.core import (
    CircularConfig,
    LinearConfig,
    ModelKind,
    Rule,
    check_model_compatibility,
    initial_configuration,
    is_accepting,
    rule_words_of,
    validate_automaton,
)
from jumpfa.errors import (
    DeterminismViolation,
    EmptyRuleWord,
    ModelMismatch,
    ParseError,
    UnknownState,
    UnknownSymbol,
    WordOverAlphabet,
)
from jumpfa.fileformat import dump_automaton, parse_automaton

from .conftest import automata


def lab_raw():
    return {"alphabet": "ab", "start": "q0", "finals": {"q0", "q1"},
            "rules": [("q0", "ab", "q1"), ("q1", "ba", "q0")]}


def test_validate_lab():
    a = validate_automaton(lab_raw())
    assert a.alphabet == ("a", "b")
    assert set(a.states) == {"q0", "q1"}
    assert a.finals == {"q0", "q1"}
    assert set(a.rules) == {Rule("q0", "ab", "q1"), Rule("q1", "ba", "q0")}


def test_determinism_violation():
    with pytest.raises(DeterminismViolation):
        validate_automaton({"alphabet": "a", "start": "q0", "finals": [],
                            "rules": [("q0", "a", "q1"), ("q0", "a", "q2")]})


def test_duplicate_rule_is_not_a_violation():
    a = validate_automaton({"alphabet": "a", "start": "q0", "finals": [],
                            "rules": [("q0", "a", "q1"), ("q0", "a", "q1")]})
    assert len(a.rules) == 1


def test_empty_rule_word():
    with pytest.raises(EmptyRuleWord):
        validate_automaton({"alphabet": "a", "start": "q0", "finals": [], "rules": [("q0", "", "q1")]})


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol):
        validate_automaton({"alphabet": "a", "start": "q0", "finals": [], "rules": [("q0", "ab", "q1")]})


def test_unknown_state_with_declared_states():
    with pytest.raises(UnknownState):
        validate_automaton({"alphabet": "a", "start": "q0", "finals": ["q9"], "states": ["q0"],
                            "rules": []})


@pytest.mark.parametrize("alphabet", [["ab"], ["@"], ["a", "a"], [], [" "]])
def test_bad_alphabets(alphabet):
    with pytest.raises(ParseError):
        validate_automaton({"alphabet": alphabet, "start": "q0", "finals": [], "rules": []})


def test_bad_state_token():
    with pytest.raises(ParseError):
        validate_automaton({"alphabet": "a", "start": "q 0", "finals": [], "rules": []})


def test_rule_words_of(shared):
    assert rule_words_of(shared, "q0") == {"c", "ab"}
    assert rule_words_of(shared, "q1") == frozenset()


def test_rule_words_of_isolated_and_unknown():
    a = validate_automaton({"alphabet": "a", "start": "q0", "finals": [], "states": ["q0", "q1"],
                            "rules": [("q0", "a", "q0")]})
    assert rule_words_of(a, "q1") == frozenset()
    with pytest.raises(UnknownState):
        rule_words_of(a, "nope")


@given(automata())
def test_rule_words_is_projection(a):
    for p in a.states:
        assert rule_words_of(a, p) == {r.word for r in a.rules if r.source == p}


def test_model_compatibility():
    ab = validate_automaton({"alphabet": "ab", "start": "q0", "finals": [], "rules": [("q0", "ab", "q1")]})
    with pytest.raises(ModelMismatch) as info:
        check_model_compatibility(ab, ModelKind.ROWJ)
    assert info.value.rule == Rule("q0", "ab", "q1")
    check_model_compatibility(ab, ModelKind.GRC)
    a = validate_automaton({"alphabet": "a", "start": "q0", "finals": [], "rules": [("q0", "a", "q1")]})
    for m in ModelKind:
        check_model_compatibility(a, m)


def test_model_kind_parse_and_mirror():
    assert ModelKind.parse("GRC") is ModelKind.GRC
    with pytest.raises(ValueError):
        ModelKind.parse("xyz")
    for m in ModelKind:
        assert m.mirror.mirror is m
    assert ModelKind.GJFA.mirror is ModelKind.GJFA


def test_initial_configurations():
    assert initial_configuration(ModelKind.GRL, "ab", "q0") == LinearConfig("", "q0", "ab")
    assert initial_configuration(ModelKind.GLL, "ab", "q0") == LinearConfig("ab", "q0", "")
    assert initial_configuration(ModelKind.GLC, "ab", "q0") == CircularConfig("q0", "ab")


def test_accepting_and_render(shared):
    assert is_accepting(shared, CircularConfig("q1", ""))
    assert not is_accepting(shared, CircularConfig("q0", ""))
    assert not is_accepting(shared, LinearConfig("a", "q1", ""))
    assert CircularConfig("q0", "").render() == "q0|@"
    assert LinearConfig("a", "q0", "").render() == "a|q0|@"


def test_check_word(shared):
    shared.check_word("abc")
    with pytest.raises(WordOverAlphabet):
        shared.check_word("abd")


@settings(max_examples=200)
@given(automata())
def test_file_round_trip(a):
    again = parse_automaton(dump_automaton(a))
    assert again == a


def test_validate_accepts_automaton(shared):
    assert validate_automaton(shared) == shared
