import pytest

from jumpfa import corpus
from jumpfa.core import Rule
from jumpfa.errors import EmptyRuleWord, IncompleteDfa, ParseError
from jumpfa.fileformat import dump_automaton, load_automaton, parse_automaton, parse_dfa


def test_parse_shared_example():
    a = parse_automaton("""
        # comment
        alphabet: a b c
        start: q0
        final: q1   # trailing comment
        rule: q0 c -> q0
        rule: q0 ab -> q1
    """)
    assert a.alphabet == ("a", "b", "c")
    assert a.start == "q0" and a.finals == {"q1"}
    assert set(a.rules) == {Rule("q0", "c", "q0"), Rule("q0", "ab", "q1")}


def test_repeated_final_lines():
    a = parse_automaton("alphabet: a\nstart: p\nfinal: p\nfinal: r s\n")
    assert a.finals == {"p", "r", "s"}


def test_states_directive_keeps_isolated_states():
    text = "alphabet: a\nstart: q0\nfinal:\nstates: lonely\nrule: q0 a -> q0\n"
    a = parse_automaton(text)
    assert "lonely" in a.states
    assert "states: lonely" in dump_automaton(a)
    assert parse_automaton(dump_automaton(a)) == a


@pytest.mark.parametrize("text", [
    "start: q0\n",
    "alphabet: a\n",
    "alphabet: a\nalphabet: b\nstart: q0\n",
    "alphabet: a\nstart: q0\nstart: q1\n",
    "alphabet: a\nstart: q0 q1\n",
    "alphabet: ab\nstart: q0\n",
    "alphabet: a\nstart: q0\nrule: q0 a q1\n",
    "alphabet: a\nstart: q0\nbogus line\n",
    "alphabet: a\nstart: q0\ntransition: q0 a -> q1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_automaton(text)


def test_parse_error_line_number():
    with pytest.raises(ParseError) as info:
        parse_automaton("alphabet: a\nstart: q0\n\nrule: q0 a\n")
    assert info.value.line == 4


def test_lambda_rule_word_is_rejected():
    with pytest.raises(EmptyRuleWord):
        parse_automaton("alphabet: a\nstart: q0\nrule: q0 @ -> q0\n")


def test_every_corpus_file_round_trips():
    for name in corpus.names():
        a = corpus.load(name)
        assert parse_automaton(dump_automaton(a)) == a
        assert load_automaton(corpus.path(name)) == a


def test_parse_dfa_requires_totality():
    with pytest.raises(IncompleteDfa):
        parse_dfa("alphabet: a b\nstart: s\nfinal: s\nrule: s a -> s\n")
    with pytest.raises(IncompleteDfa):
        parse_dfa("alphabet: a\nstart: s\nfinal: s\nrule: s aa -> s\nrule: s a -> s\n")


def test_corpus_dfas_are_complete():
    for name in corpus.names("dfa"):
        d = corpus.load_dfa(name)
        assert len(d.delta) == len(d.states) * len(d.alphabet)
