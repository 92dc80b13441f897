import random

import numpy as np
import pytest

from sleecc.compiler import (
    compile_conjuncts,
    compile_rule,
    compile_ruleset,
    compiled_size,
    nested_form,
    semantics_eval,
    semantics_table,
)
from sleecc.core.formula import TRUE, implies, to_text, var
from sleecc.core.interpretation import (
    Interpretation,
    all_interpretations,
    equiv_bruteforce,
    evaluate,
    interpretation_at,
    truth_table,
)
from sleecc.core.ruleset import RuleSet, SleecRule
from sleecc.errors import UnknownAtom


def sigma(k: int) -> SleecRule:
    """Rule with k UNLESS clauses over distinct atomic conditions and outcomes."""
    return SleecRule(
        tuple(var(f"c{i}") for i in range(k + 1)),
        tuple(var(f"o{i}") for i in range(k + 1)),
    )


def test_curtains_golden(curtains, data_dir):
    expected = (data_dir / "curtains_compiled.txt").read_text(encoding="utf-8")
    assert to_text(compile_rule(curtains.rules[0])) + "\n" == expected


def test_single_clause_rule():
    rule = SleecRule((var("a"),), (var("o"),))
    assert compile_rule(rule) == implies(var("a"), var("o"))


def test_conjuncts_count(curtains):
    assert len(compile_conjuncts(curtains.rules[0])) == 3


def test_empty_ruleset_compiles_to_true():
    assert compile_ruleset(RuleSet()) == TRUE


def test_ruleset_includes_facts(curtains, with_facts):
    f = compile_ruleset(with_facts(curtains, "a not d"))
    v = Interpretation.from_names(a=True, d=False, h=False, o=False, n=True, s=True)
    assert evaluate(f, v)
    assert not evaluate(f, Interpretation.from_names(a=True, d=True, h=False, o=False, n=True, s=True))


def test_nested_form_equivalent(curtains):
    rule = curtains.rules[0]
    assert nested_form(rule) != compile_rule(rule)
    assert equiv_bruteforce(nested_form(rule), compile_rule(rule))


def test_direct_semantics_curtains(curtains):
    rule = curtains.rules[0]
    domain = curtains.atoms
    for v in all_interpretations(domain):
        assert semantics_eval(rule, v) == evaluate(compile_rule(rule), v)


def test_semantics_unknown_atom(curtains):
    with pytest.raises(UnknownAtom):
        semantics_eval(curtains.rules[0], Interpretation.from_names(a=True))


def test_direct_semantics_oracle(gen):
    """Direct truth conditions agree with the compiled formula on every interpretation."""
    rng = random.Random(5)
    for _ in range(500):
        pool = gen.atoms("v", rng.randint(1, 12))
        rule = gen.rule(rng, pool, max_unless=4, depth=2)
        domain = rule.atoms()
        expected = truth_table(compile_rule(rule), domain)
        assert np.array_equal(semantics_table(rule, domain), expected)
        row = rng.randrange(2 ** len(domain))
        assert semantics_eval(rule, interpretation_at(domain, row)) == bool(expected[row])


def test_compiled_size_is_quadratic():
    sizes = [compiled_size(sigma(k)) for k in range(65)]
    for k, s in enumerate(sizes):
        assert s == (5 * k * k + 33 * k + 8) // 2
        assert s <= 8 * (k + 2) ** 2
    assert all(b > a for a, b in zip(sizes, sizes[1:]))


def test_condition_negation_is_syntactic():
    rule = SleecRule((var("a"), var("d")), (var("o"), var("n")))
    assert to_text(compile_rule(rule)) == "(a and not d -> o) and (a and d -> n)"


def test_unless_clause_order_matters():
    a, b, c, o, n, s = (var(x) for x in "abcons")
    rule = SleecRule((a, b, c), (o, n, s))
    swapped = SleecRule((a, c, b), (o, s, n))
    assert not equiv_bruteforce(compile_rule(rule), compile_rule(swapped))

    # b holds and c does not: the first rule demands n, the swapped one only o
    v = Interpretation.from_names(a=True, b=True, c=False, o=True, n=False, s=False)
    assert semantics_eval(rule, v) is False
    assert semantics_eval(swapped, v) is True
