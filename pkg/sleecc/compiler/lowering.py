"""Compilation of SLEEC rules into propositional formulas.

A rule ``IF C0 THEN O0, UNLESS C1 IN WHICH CASE O1, ..., UNLESS Cn IN WHICH CASE On``
compiles to one implication per clause::

    (C0 and not C1 -> O0)
    (C0 and C1 and not C2 -> O1)
    ...
    (C0 and ... and Cn -> On)

joined by a right-associated conjunction. Antecedents are right-associated
conjunctions over j ascending; ``not C(i+1)`` is a syntactic wrapper, so a
condition ``not d`` yields ``not not d``.
"""

import logging
from typing import List

from sleecc.core.formula import Formula, Not, conjoin_all, implies, size, unless_iwc
from sleecc.core.ruleset import RuleSet, SleecRule

logger = logging.getLogger(__name__)


def compile_conjuncts(rule: SleecRule) -> List[Formula]:
    """The implications of ``compile_rule(rule)``, in clause order."""
    c, o = rule.conditions, rule.outcomes
    out = []
    for i in range(rule.n):
        antecedent = conjoin_all(list(c[: i + 1]) + [Not(c[i + 1])])
        out.append(implies(antecedent, o[i]))
    out.append(implies(conjoin_all(list(c)), o[-1]))
    return out


def compile_rule(rule: SleecRule) -> Formula:
    return conjoin_all(compile_conjuncts(rule))


def ruleset_conjuncts(rs: RuleSet) -> List[Formula]:
    """One formula per rule (in order), then one literal per fact."""
    parts = [compile_rule(r) for r in rs.rules]
    parts.extend(lit.to_formula() for lit in rs.facts)
    return parts


def compile_ruleset(rs: RuleSet) -> Formula:
    """Conjunction of the compiled rules followed by the facts; ``true`` if empty."""
    parts = ruleset_conjuncts(rs)
    logger.debug("compiled %d rules and %d facts", len(rs.rules), len(rs.facts))
    return conjoin_all(parts)


def compiled_size(rule: SleecRule) -> int:
    """Node count of ``compile_rule(rule)``; quadratic in the rule's size."""
    return size(compile_rule(rule))


def nested_form(rule: SleecRule) -> Formula:
    """The curried reading ``C0 -> (O0 UNLESS C1 IN WHICH CASE (O1 UNLESS ...))``.

    Logically equivalent to ``compile_rule(rule)`` (uncurrying), structurally
    different.
    """
    c, o = rule.conditions, rule.outcomes
    inner = o[-1]
    for i in reversed(range(rule.n)):
        inner = unless_iwc(o[i], c[i + 1], inner)
    return implies(c[0], inner)
