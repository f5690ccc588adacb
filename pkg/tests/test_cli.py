import json
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from bklgarside import ncp
from bklgarside.bkl import BklInstance
from bklgarside.cli import Term, format_nf, main, parse_word, word_fraction, word_positive
from bklgarside.errors import MalformedError, ParseError
from bklgarside.ncp import NcPartition

from helpers import atoms_of, bkl


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_parse_examples():
    w = parse_word("a(0,1)*a(1,2)", 3)
    assert [t.kind for t in w.terms] == ["atom", "atom"] and w.is_positive()
    assert w.terms[0] == Term("atom", NcPartition.atom(3, 0, 1), 1)
    w = parse_word("{0 1}{2 3}^-1", 4)
    assert w.terms == (Term("partition", NcPartition(4, ((0, 1), (2, 3))), -1),)
    assert parse_word("", 3).terms == ()
    assert parse_word(" a( 0 , 2 ) ^ 3 . {1 2}", 3).terms[0].exponent == 3


@pytest.mark.parametrize("text, n, offset", [
    ("a(2,1)", 3, 2),
    ("a(0,3)", 3, 2),
    ("a(0,1) + a(1,2)", 3, 7),
    ("{0 2}{1 3}", 4, 0),
    ("{0 5}", 4, 3),
    ("b(0,1)", 3, 0),
    ("a(0,1)^", 3, 7),
    ("{}", 3, 1),
])
def test_parse_errors(text, n, offset):
    with pytest.raises(ParseError) as exc:
        parse_word(text, n)
    assert exc.value.offset == offset
    assert isinstance(exc.value, MalformedError)


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as exc:
        parse_word("a(0,1)*é", 3)
    assert exc.value.offset == 7
    with pytest.raises(ParseError) as exc:
        parse_word("é", 3)
    assert exc.value.offset == 0
    with pytest.raises(ParseError) as exc:
        parse_word("a(0,1)é*", 3)
    assert exc.value.offset == 6


def test_nf_examples(capsys):
    assert run(capsys, "nf", "-n", "3", "a(0,1)*a(1,2)") == (0, "{0 1 2}", "")
    assert run(capsys, "nf", "-n", "3", "") == (0, "{0}{1}{2}", "")
    assert run(capsys, "nf", "-n", "4", "--compact", "a(0,1).a(2,3)")[1] == "{0 1}{2 3}"
    # a(0,2) a(0,1) = Delta, so a(0,1)^-1 = Delta^-1 a(0,2)
    assert run(capsys, "nf", "-n", "3", "a(0,1)^-1")[1] == "{0 1 2}^-1 * {0 2}{1}"
    assert run(capsys, "nf", "-n", "3", "a(0,1)*a(0,1)^-1")[1] == "{0}{1}{2}"


def test_nf_json(capsys):
    code, out, _ = run(capsys, "nf", "-n", "3", "--json", "a(1,2)*a(0,1)")
    assert code == 0
    assert json.loads(out) == {"n": 3, "delta_power": 0, "factors": [[[0], [1, 2]], [[0, 1], [2]]]}
    data = json.loads(run(capsys, "nf", "-n", "3", "--json", "a(0,1)^-1")[1])
    assert data["delta_power"] == -1 and data["factors"] == [[[0, 2], [1]]]


def test_eq_exit_codes(capsys):
    assert run(capsys, "eq", "-n", "3", "a(0,1)*a(1,2)", "a(1,2)*a(0,2)") == (0, "equal", "")
    assert run(capsys, "eq", "-n", "3", "a(0,1)", "a(1,2)") == (1, "not equal", "")
    assert run(capsys, "eq", "-n", "3", "a(0,1)*a(0,1)^-1", "")[0] == 0
    code, out, err = run(capsys, "eq", "-n", "3", "a(0,1)", "a(0,")
    assert code == 2 and out == "" and "offset" in err


def test_lattice_commands(capsys):
    assert run(capsys, "lcm", "-n", "3", "a(0,1)", "a(1,2)")[1] == "{0 1 2}"
    assert run(capsys, "lcm", "-n", "4", "--compact", "a(0,1)", "a(2,3)")[1] == "{0 1}{2 3}"
    assert run(capsys, "gcd", "-n", "4", "--compact", "{0 1 2}", "{0 1}{2 3}")[1] == "{0 1}"
    assert run(capsys, "gcd", "-n", "3", "a(0,1)", "a(1,2)")[1] == "{0}{1}{2}"
    code, _, err = run(capsys, "gcd", "-n", "3", "a(0,1)^-1", "a(1,2)")
    assert code == 2 and "positive" in err


def test_conj(capsys):
    assert run(capsys, "conj", "-n", "3", "-k", "1", "a(0,1)")[1] == "{0 2}{1}"
    assert run(capsys, "conj", "-n", "3", "-k", "3", "a(0,1)")[1] == "{0 1}{2}"
    assert run(capsys, "conj", "-n", "3", "-k", "0", "--json", "a(0,1)")[1].startswith('{"n": 3, "k": 0')


def test_centralizer(capsys):
    code, out, _ = run(capsys, "centralizer", "-n", "4", "-d", "2")
    assert code == 0 and len(out.splitlines()) == 4
    code, _, err = run(capsys, "centralizer", "-n", "6", "-d", "4")
    assert code == 2 and "divide" in err
    data = json.loads(run(capsys, "centralizer", "-n", "4", "-d", "1", "--json")[1])
    assert len(data["atoms"]) == 6


def test_simples(capsys):
    assert run(capsys, "simples", "-n", "4", "--count") == (0, "14", "")
    assert run(capsys, "simples", "-n", "4") == (0, "14", "")
    listed = run(capsys, "simples", "-n", "4", "--list")[1].splitlines()
    assert len(listed) == 14 and {str(s) for s in ncp.enumerate_nc(4)} == set(listed)
    assert json.loads(run(capsys, "simples", "-n", "5", "--json")[1]) == {"n": 5, "count": 42}
    code, _, err = run(capsys, "simples", "-n", "6", "--max-n", "5")
    assert code == 2 and "bound" in err


def test_to_artin(capsys):
    assert run(capsys, "to-artin", "-n", "3", "a(0,2)")[1] == "s1 * s2 * s1^-1"
    assert run(capsys, "to-artin", "-n", "3", "a(0,2)^-1")[1] == "s1 * s2^-1 * s1^-1"
    assert json.loads(run(capsys, "to-artin", "-n", "3", "--json", "a(1,2)")[1]) == {"n": 3, "artin": [[2, 1]]}


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-n", "3", "--max-len", "3")
    assert code == 0 and "all checks agree" in out
    data = json.loads(run(capsys, "verify", "-n", "3", "--json", "--max-len", "2")[1])
    assert data["ok"] and all(c["ok"] for c in data["checks"])


def test_bad_n(capsys):
    assert run(capsys, "simples", "-n", "0")[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "bklgarside", "nf", "-n", "3", "a(0,1)*a(1,2)"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "{0 1 2}"


@st.composite
def signed_words(draw, n):
    terms = draw(st.lists(st.tuples(st.sampled_from(atoms_of(n)), st.integers(-2, 2)), max_size=6))
    return "*".join(f"a({i},{j})^{e}" for (i, j), e in terms)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_format_parse_round_trip(data):
    n = data.draw(st.integers(2, 5))
    inst = bkl(n)
    text = data.draw(signed_words(n))
    f = word_fraction(inst, parse_word(text, n))
    p, z = inst.delta_form(f)
    from bklgarside.cli import format_delta_form
    for compact in (False, True):
        printed = format_delta_form(inst, p, z, compact)
        assert word_fraction(inst, parse_word(printed, n)) == f
    # positive normal forms round trip exactly
    u = inst.normal_form(inst.atom(*a) for a in data.draw(st.lists(st.sampled_from(atoms_of(n)), max_size=6)))
    assert word_positive(inst, parse_word(format_nf(u), n)) == u
    for lam in u.simples():
        assert NcPartition.parse(str(lam), n) == lam == NcPartition.parse(lam.compact_str(), n)


def test_eq_is_an_equivalence_relation():
    n, rng = 3, random.Random(3)
    inst = BklInstance(n)
    words = []
    for _ in range(12):
        terms = [(rng.choice(atoms_of(n)), rng.choice([-1, 1])) for _ in range(rng.randint(0, 4))]
        words.append("*".join(f"a({i},{j})^{e}" for (i, j), e in terms))
    words += ["a(0,1)*a(1,2)", "a(1,2)*a(0,2)", "a(0,2)*a(0,1)"]
    eq = {(a, b): main(["eq", "-n", "3", a, b]) == 0 for a in words for b in words}
    for a in words:
        assert eq[a, a]
        for b in words:
            assert eq[a, b] == eq[b, a]
            for c in words:
                if eq[a, b] and eq[b, c]:
                    assert eq[a, c]
