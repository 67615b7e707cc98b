import io
import json
import subprocess
import sys

import pytest

from jumpfa import corpus
from jumpfa.cli import main
from jumpfa.fileformat import parse_automaton


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_accept(capsys):
    code, out, _ = run(capsys, "check", "-m", "grc", "-f", "corpus:l_ab", "-w", "aabb")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ACCEPT"
    assert lines[1].startswith("configurations-visited: ")
    assert lines[2].startswith("max-frontier: ")


def test_check_reject(capsys):
    code, out, _ = run(capsys, "check", "--model", "grc", "--file", "corpus:dyck_rule", "--word", "aabb")
    assert code == 1 and out.startswith("REJECT")


def test_check_lambda(capsys):
    code, out, _ = run(capsys, "check", "-m", "grc", "-f", "corpus:l_ab", "-w", "@")
    assert code == 0 and out.startswith("ACCEPT")


@pytest.mark.parametrize("argv", [
    ["check", "-m", "rowj", "-f", "corpus:l_ab", "-w", "ab"],
    ["check", "-m", "grc", "-f", "corpus:l_ab", "-w", "abc"],
    ["check", "-m", "grc", "-f", "/nonexistent/file.jfa", "-w", "ab"],
    ["check", "-m", "grc", "-f", "corpus:nope", "-w", "ab"],
    ["diff", "-m", "grc", "-f", "corpus:l_ab", "--oracle", "nope", "-n", "2"],
    ["diff", "-m", "grc", "-f", "corpus:shared_c_ab", "--oracle", "dyck", "-n", "2"],
    ["enum", "-m", "grc", "-f", "corpus:shared_c_ab", "-n", "5", "--max-words", "10"],
])
def test_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("jumpfa: error:")
    assert out == ""


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check", "-m", "bogus", "-f", "corpus:l_ab", "-w", "ab"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["enum", "-m", "grc", "-f", "corpus:l_ab", "-n", "-1"])
    assert info.value.code == 2


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.jfa"
    bad.write_text("alphabet: a\nrule: q0 a -> q0\n")
    code, _, err = run(capsys, "check", "-m", "grc", "-f", str(bad), "-w", "a")
    assert code == 2 and "start" in err


def test_enum_lines(capsys):
    code, out, _ = run(capsys, "enum", "-m", "grc", "-f", "corpus:shared_c_ab", "-n", "3")
    assert code == 0 and out == "ab\nbca\ncab\n"


def test_enum_lines_lambda(capsys):
    code, out, _ = run(capsys, "enum", "-m", "grc", "-f", "corpus:equal_counts", "-n", "2")
    assert out == "@\na\naa\nab\nba\n"


def test_enum_empty(capsys):
    code, out, _ = run(capsys, "enum", "-m", "grc", "-f", "corpus:shared_c_ab", "-n", "0")
    assert code == 0 and out == ""


def test_enum_json(capsys):
    code, out, _ = run(capsys, "enum", "-m", "grc", "-f", "corpus:equal_counts", "-n", "2", "--format", "json")
    assert code == 0
    assert out == '{"max_length":2,"words":["@","a","aa","ab","ba"]}\n'
    assert list(json.loads(out)) == ["max_length", "words"]


def test_enum_is_byte_stable(capsys):
    first = run(capsys, "enum", "-m", "glc", "-f", "corpus:l_c", "-n", "6")[1]
    assert first == run(capsys, "enum", "-m", "glc", "-f", "corpus:l_c", "-n", "6")[1]


def test_trace_lab(capsys):
    code, out, _ = run(capsys, "trace", "-m", "grc", "-f", "corpus:l_ab", "-w", "ab")
    assert code == 0 and out == "q0|ab --(q0,ab,q1)--> q1|@\n"


def test_trace_grl(capsys):
    code, out, _ = run(capsys, "trace", "-m", "grl", "-f", "corpus:shared_c_ab", "-w", "acb")
    assert code == 0
    assert out.splitlines() == [
        "@|q0|acb --(q0,c,q0)--> a|q0|b",
        "a|q0|b --RETURN--> @|q0|ab",
        "@|q0|ab --(q0,ab,q1)--> @|q1|@",
    ]


def test_trace_reject_and_lambda(capsys):
    code, out, _ = run(capsys, "trace", "-m", "grc", "-f", "corpus:l_ab", "-w", "ba")
    assert code == 1 and out == "REJECT\n"
    code, out, _ = run(capsys, "trace", "-m", "grc", "-f", "corpus:l_ab", "-w", "@")
    assert code == 0 and out == "q0|@\n"


def test_diff_empty(capsys):
    code, out, _ = run(capsys, "diff", "-m", "grl", "-f", "corpus:dyck_rule", "--oracle", "dyck", "-n", "8")
    assert code == 0
    assert out == "max-length: 8\nmissing (0):\nextra (0):\n"


def test_diff_nonempty(capsys):
    code, out, _ = run(capsys, "diff", "-m", "grc", "-f", "corpus:dyck_rule", "--oracle", "dyck", "-n", "6")
    assert code == 1
    assert "  aabb\n" in out


def test_diff_equal_counts(capsys):
    code, _, _ = run(capsys, "diff", "-m", "grc", "-f", "corpus:equal_counts",
                     "--oracle", "equal-or-no-b", "-n", "8")
    assert code == 0


def test_reverse_to_file(capsys, tmp_path):
    target = tmp_path / "rev.jfa"
    code, out, _ = run(capsys, "reverse", "-f", "corpus:shared_c_ab", "-o", str(target))
    assert code == 0 and out == ""
    rev = parse_automaton(target.read_text())
    assert {r.word for r in rev.rules} == {"c", "ba"}


def test_reverse_stdout(capsys):
    code, out, _ = run(capsys, "reverse", "-f", "corpus:l_ab")
    assert code == 0 and "rule: q0 ba -> q1" in out and "rule: q1 ab -> q0" in out


def test_import_dfa(capsys, tmp_path):
    target = tmp_path / "parity.jfa"
    code, _, _ = run(capsys, "import-dfa", "-f", "corpus:parity", "-o", str(target))
    assert code == 0
    a = parse_automaton(target.read_text())
    assert len(a.rules) == 4


def test_import_incomplete_dfa(capsys, tmp_path):
    bad = tmp_path / "bad.dfa"
    bad.write_text("alphabet: a b\nstart: s\nfinal: s\nrule: s a -> s\n")
    code, _, err = run(capsys, "import-dfa", "-f", str(bad))
    assert code == 2 and "transition" in err


def test_stdin_file(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(corpus.text("l_ab")))
    code, out, _ = run(capsys, "check", "-m", "grc", "-f", "-", "-w", "abab")
    assert code in (0, 1) and out.split("\n")[0] in ("ACCEPT", "REJECT")


def test_strict_straddle_flag(capsys):
    code, _, _ = run(capsys, "check", "-m", "grc", "-f", "corpus:l_ab", "-w", "aabb", "--strict-straddle")
    assert code in (0, 1)


def test_oracles_listing(capsys):
    code, out, _ = run(capsys, "oracles")
    assert code == 0 and "dyck" in out and "gjfa-example" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jumpfa", "enum", "-m", "grc", "-f", "corpus:shared_c_ab", "-n", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "ab\nbca\ncab\n"
