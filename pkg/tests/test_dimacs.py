import pytest

from sleecc.compiler import ruleset_conjuncts
from sleecc.core.formula import Atom, conjoin, implies, var
from sleecc.engine.cnf import ClauseSet, to_cnf, to_cnf_all
from sleecc.engine.query import solve
from sleecc.errors import InvalidCnf
from sleecc.interop.dimacs import parse_dimacs, read_dimacs, write_dimacs


def test_small_golden(data_dir):
    cs = to_cnf(conjoin(implies(var("p"), var("q")), var("r")))
    assert write_dimacs(cs) == (data_dir / "small.cnf").read_text(encoding="utf-8")


def test_body_line():
    cs = ClauseSet(((1, 2),), {Atom("p"): 1, Atom("q"): 2}, 2)
    assert write_dimacs(cs).splitlines()[-1] == "1 2 0"


def test_empty_clause_set():
    assert write_dimacs(ClauseSet()) == "p cnf 0 0\n"


def test_read_restores_names(data_dir):
    cs = read_dimacs((data_dir / "small.cnf").read_text(encoding="utf-8"))
    assert cs.atom_index == {Atom("p"): 1, Atom("q"): 2, Atom("r"): 3}
    assert cs.clauses == ((-1, 2), (3,))


def test_unnamed_variables():
    cs = read_dimacs("p cnf 2 1\n1 -2\n0\n")
    assert cs.atoms == (Atom("x1"), Atom("x2"))
    assert cs.clauses == ((1, -2),)


def test_roundtrip_curtains(curtains, with_facts):
    rs = with_facts(curtains, "a not d")
    cs = to_cnf_all(ruleset_conjuncts(rs), rs.atoms)
    text = write_dimacs(cs)
    again = read_dimacs(text)
    assert len(again) == len(cs)
    assert int(text.split("p cnf ")[1].split()[1]) == len(cs)
    assert solve(again).verdict is solve(cs).verdict
    assert {str(a) for a in again.atoms} == {str(a) for a in rs.atoms}


def test_raw_clauses_keep_repeats():
    problem = parse_dimacs("p cnf 1 1\n1 1 1 0\n")
    assert problem.clauses == [[1, 1, 1]]


@pytest.mark.parametrize(
    "text",
    [
        "1 2 0\n",
        "p cnf 2 2\n1 2 0\n",
        "p cnf 1 1\n2 0\n",
        "p cnf 2 1\n1 2\n",
        "p dnf 2 1\n1 0\n",
        "p cnf 2 1\n1 a 0\n",
    ],
)
def test_malformed(text):
    with pytest.raises(InvalidCnf):
        read_dimacs(text)
