import random

from sleecc.compiler import compile_rule
from sleecc.core.formula import TRUE, Atom, Not, conjoin, conjoin_all, disjoin_all, implies, var
from sleecc.core.interpretation import all_interpretations, evaluate
from sleecc.engine.cnf import DISTRIBUTION_LIMIT, ClauseSet, normalize_clause, to_cnf
from sleecc.engine.dpll import DpllSolver

p, q, r = var("p"), var("q"), var("r")


def satisfiable_under(cs: ClauseSet, v) -> bool:
    """Does ``cs`` have a model agreeing with ``v`` on the atoms?"""
    units = [[idx if v[atom] else -idx] for atom, idx in cs.atom_index.items() if not atom.reserved]
    return DpllSolver(cs.num_vars, list(cs.clauses) + units).solve() is not None


def test_clausal_input_is_kept():
    cs = to_cnf(disjoin_all([p, q]))
    assert cs.clauses == ((1, 2),)
    assert cs.atoms == (Atom("p"), Atom("q"))


def test_contradiction():
    cs = to_cnf(conjoin(p, Not(p)))
    assert set(cs.clauses) == {(1,), (-1,)}
    assert DpllSolver(cs.num_vars, cs.clauses).solve() is None


def test_normalize_clause():
    assert normalize_clause([1, 2, 1]) == (1, 2)
    assert normalize_clause([1, -1]) is None


def test_domain_numbered_first():
    cs = to_cnf(q, domain=[Atom("p"), Atom("q")])
    assert cs.atom_index == {Atom("p"): 1, Atom("q"): 2}
    assert cs.clauses == ((2,),)


def test_curtains_models_preserved(curtains):
    f = compile_rule(curtains.rules[0])
    cs = to_cnf(f, curtains.atoms)
    assert cs.num_vars == len(curtains.atoms)
    for v in all_interpretations(curtains.atoms):
        assert satisfiable_under(cs, v) == evaluate(f, v)


def test_tseitin_fallback_keeps_models():
    pool = [var(f"x{i}") for i in range(12)]
    f = disjoin_all([conjoin_all(pool[i:i + 3]) for i in range(0, 12, 3)])
    cs = to_cnf(f)
    assert 3 ** 4 > DISTRIBUTION_LIMIT
    assert cs.num_vars > 12
    atoms = cs.atoms
    rng = random.Random(11)
    for v in rng.sample(list(all_interpretations(atoms)), 200):
        assert satisfiable_under(cs, v) == evaluate(f, v)


def test_true_constant_is_reserved():
    cs = to_cnf(implies(p, TRUE))
    assert cs.atoms == (Atom("p"),)
    assert cs.num_atoms == 2
    assert DpllSolver(cs.num_vars, cs.clauses).solve() is not None


def test_deep_formulas_convert():
    names = [f"x{i}" for i in range(5000)]
    cs = to_cnf(disjoin_all([var(n) for n in names]))
    assert cs.clauses == (tuple(range(1, 5001)),)

    f = var("y0")
    for i in range(1, 3000):
        f = disjoin_all([conjoin(var(f"y{i}"), var(f"z{i}")), f])
    cs = to_cnf(f)
    assert cs.num_vars > cs.num_atoms
    assert all(len(clause) <= 3 for clause in cs.clauses)
    only_y0 = {atom: atom == Atom("y0") for atom in cs.atom_index}
    assert satisfiable_under(cs, only_y0)
    assert not satisfiable_under(cs, dict.fromkeys(cs.atom_index, False))
