"""Automata and DFAs from the worked examples, shipped as data files."""

from importlib import resources

from ..fileformat import parse_automaton, parse_dfa


def _files():
    return resources.files(__name__)


def names(kind="jfa"):
    return sorted(p.name[: -len(kind) - 1] for p in _files().iterdir() if p.name.endswith("." + kind))


def path(name, kind="jfa"):
    return _files() / f"{name}.{kind}"


def text(name, kind="jfa"):
    return path(name, kind).read_text(encoding="utf-8")


def load(name):
    return parse_automaton(text(name))


def load_dfa(name):
    return parse_dfa(text(name, "dfa"))
