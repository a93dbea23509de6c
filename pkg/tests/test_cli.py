import json
import subprocess
import sys
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncsf.algebra import LAMBDA, M, PSI, S, Element
from ncsf.bases import convert
from ncsf.cli import Atom, BinOp, Neg, Num, Omega, ParseError, evaluate, main, parse, to_text

CORPUS = [
    "M[3,1,2]",
    "omega(S[2])",
    "Psi[2]*M[3]",
    "F[2,2,1,3]",
    "Psi[1]*Psi[2] - Psi[2]*Psi[1]",
    "1/2*Psi[2] + 1/2*Psi[1,1]",
    "-S[2] + S[1,1]",
    "E[2] - Lam[2]",
    "Lambda[1,1]",
    "(M[1] + M[2])*(L[1] - R[2])",
    "omega(omega(R[2,1]))",
    "3",
    "2/3",
    "-(M[1]*M[1])",
    "M[1] - -M[1]",
    "S[1]*S[1]*S[1]",
    "M[1]*(M[2]*M[3])",
    "(M[1]*M[2])*M[3]",
    "M[1] - (M[2] - M[3])",
    "M[1] - M[2] - M[3]",
    "omega(F[1,2]) * 5/7",
    "  R[ 1 , 2 ]  ",
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_examples_evaluate():
    assert len(evaluate(parse("M[3,1,2]"))) == 4
    assert evaluate(parse("omega(S[2])")) == convert(Element.basis_element(LAMBDA, (2,)), PSI)
    want = Element(M, {(2, 3): 2, (5,): 1})
    assert convert(evaluate(parse("Psi[2]*M[3]")), M) == want


def test_products_keep_their_order():
    assert evaluate(parse("Psi[1]*Psi[2]")) != evaluate(parse("Psi[2]*Psi[1]"))


def test_precedence_and_associativity():
    assert parse("M[1] + M[2]*M[3]") == BinOp("+", Atom(M, (1,)), BinOp("*", Atom(M, (2,)), Atom(M, (3,))))
    assert parse("M[1] - M[2] - M[3]") == BinOp("-", BinOp("-", Atom(M, (1,)), Atom(M, (2,))), Atom(M, (3,)))
    assert parse("2/4") == Num(Fr(1, 2))
    assert parse("omega(-E[1])") == Omega(Neg(Atom(LAMBDA, (1,))))


@pytest.mark.parametrize("text", CORPUS)
def test_corpus_round_trips(text):
    tree = parse(text)
    assert parse(to_text(tree)) == tree


names = st.sampled_from(["Psi", "S", "E", "M", "F", "L", "R"])
atoms = st.builds(Atom, names.map(lambda n: {"E": LAMBDA}.get(n, n)), st.lists(st.integers(1, 4), min_size=1, max_size=3).map(tuple))
nums = st.fractions(min_value=0, max_value=9, max_denominator=5).map(Num)
trees = st.recursive(
    atoms | nums,
    lambda kids: st.builds(BinOp, st.sampled_from("+-*"), kids, kids) | st.builds(Neg, kids) | st.builds(Omega, kids),
    max_leaves=6,
)


@given(trees)
def test_generated_trees_round_trip(tree):
    assert parse(to_text(tree)) == tree


@pytest.mark.parametrize(
    "text, pos",
    [("M[0]", 2), ("Q[1]", 0), ("M[1] +", 6), ("M[1", 3), ("omega S[1]", 6), ("M[1] M[2]", 5), ("1/0", 0)],
)
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


def test_expand_command(capsys):
    code, out, _ = run(capsys, "expand", "F[2,2,1,3]", "--to", "M")
    assert code == 0
    assert out == "M[8] + M[2,6] + M[4,4] + M[2,2,4] + M[5,3] + M[2,3,3] + M[4,1,3] + M[2,2,1,3]\n"
    code, out, _ = run(capsys, "expand", "omega(S[2])")
    assert out == "-S[2] + S[1,1]\n"
    code, out, _ = run(capsys, "expand", "S[1] + M[1]")
    assert out == "2*Psi[1]\n"
    code, out, _ = run(capsys, "expand", "Lam[2]", "--format", "json")
    assert json.loads(out) == {"basis": "Lambda", "terms": [{"composition": [2], "coefficient": "1"}]}


def test_pair_command(capsys):
    assert run(capsys, "pair", "Psi[2,1]", "--with", "Psi[2,1]") == (0, "4\n", "")
    assert run(capsys, "pair", "M[1,1]", "--with", "Psi[2]")[1] == "-1\n"


def test_matrix_and_kostka_commands(capsys):
    code, out, _ = run(capsys, "matrix", "--from", "M", "--to", "Psi", "--degree", "2", "--format", "csv")
    assert out == "M\\Psi,2,1.1\n2,1,0\n1.1,-1/2,1/2\n"
    code, out, _ = run(capsys, "kostka", "--degree", "2", "--gessel", "--format", "json")
    assert json.loads(out)["entries"] == [["1", "0"], ["0", "1"]]


def test_qsym_command(capsys):
    code, out, _ = run(capsys, "qsym", "--family", "s", "--index", "2")
    assert out == "[2]\t1\n[1,1]\t1\n"
    code, out, _ = run(capsys, "qsym", "--family", "psi", "--index", "2,1", "--format", "json")
    assert json.loads(out)["degree"] == 3


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "cauchy", "--degree", "4")
    assert code == 0
    assert out.splitlines() == ["identity  bound  status  checks", "cauchy        4  pass         8"]


def test_usage_errors_exit_two(capsys, monkeypatch):
    assert run(capsys, "expand", "M[0]")[0] == 2
    assert run(capsys, "expand", "Z[1]")[0] == 2
    assert run(capsys, "verify", "nonsense", "--degree", "2")[0] == 2
    monkeypatch.setenv("NCSF_MAX_DEGREE", "5")
    code, _, err = run(capsys, "matrix", "--from", "M", "--to", "S", "--degree", "6")
    assert code == 2 and "NCSF_MAX_DEGREE" in err
    with pytest.raises(SystemExit) as info:
        main(["matrix", "--from", "M"])
    assert info.value.code == 2


def test_verification_failure_exits_one(capsys, monkeypatch):
    from ncsf import identities

    def broken(n):
        res = identities.VerificationResult("broken", n)
        res.check(False, index=(1,))
        return res.done()

    monkeypatch.setitem(identities.VERIFIERS, "broken", broken)
    code, out, _ = run(capsys, "verify", "broken", "--degree", "2")
    assert code == 1
    assert "FAIL" in out and "counterexample" in out


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "ncsf", "pair", "Psi[2]", "--with", "Psi[2]"], capture_output=True, text=True
    )
    assert out.returncode == 0 and out.stdout == "2\n"
