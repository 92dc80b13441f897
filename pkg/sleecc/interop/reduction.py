"""3CNF to SLEEC rule sets.

Each clause ``l1 or l2 or l3`` becomes the rule::

    IF ~l1 THEN l3 UNLESS l2 IN WHICH CASE true

with ``~p = not p`` and ``~(not p) = p``; the compiled rule is equivalent to
the clause, so the rule set is consistent iff the 3CNF is satisfiable.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sleecc.core.formula import TRUE, Atom, Not, Var, disjoin_all
from sleecc.core.ruleset import Literal, RuleSet, SleecRule
from sleecc.errors import InvalidCnf
from sleecc.interop.dimacs import parse_dimacs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CnfInput:
    clauses: Tuple[Tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for i, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise InvalidCnf(f"clause {i + 1} has {len(clause)} literals, expected 3")
        if not self.variables:
            raise InvalidCnf("3CNF without variables")

    @property
    def variables(self) -> Tuple[Atom, ...]:
        """Variables in first-occurrence order."""
        seen = {}
        for clause in self.clauses:
            for lit in clause:
                seen.setdefault(lit.atom, None)
        return tuple(seen)

    def clause_formula(self, i: int):
        return disjoin_all([lit.to_formula() for lit in self.clauses[i]])

    @classmethod
    def from_ints(cls, clauses: Sequence[Sequence[int]], prefix: str = "x") -> "CnfInput":
        """Build from signed integers; variable ``i`` becomes atom ``<prefix><i>``."""
        return cls(tuple(
            tuple(Literal(Atom(f"{prefix}{abs(v)}"), v > 0) for v in clause) for clause in clauses
        ))

    @classmethod
    def from_dimacs(cls, text: str) -> "CnfInput":
        """Clauses exactly as written: repeated literals still count toward the three."""
        problem = parse_dimacs(text)
        return cls(tuple(
            tuple(Literal(problem.atom(abs(v)), v > 0) for v in clause) for clause in problem.clauses
        ))


def _complement(lit: Literal):
    return Var(lit.atom) if not lit.positive else Not(Var(lit.atom))


def encode_clause(clause: Sequence[Literal], name: str = None) -> SleecRule:
    l1, l2, l3 = clause
    return SleecRule((_complement(l1), l2.to_formula()), (l3.to_formula(), TRUE), name)


def encode_3cnf(c: CnfInput, strict: bool = False) -> RuleSet:
    """One rule per clause, named ``c1``, ``c2``, ... in clause order.

    By default every variable is declared sensed. With ``strict`` the
    variables occurring as outcomes (third literal) are declared obligations
    and the rest sensed; the compiled formulas are the same either way.
    """
    rules: List[SleecRule] = [encode_clause(clause, f"c{i + 1}") for i, clause in enumerate(c.clauses)]
    variables = c.variables
    if strict:
        outcomes = {clause[2].atom for clause in c.clauses}
        sensed = tuple(v for v in variables if v not in outcomes)
        obligations = tuple(v for v in variables if v in outcomes)
    else:
        sensed, obligations = variables, ()
    logger.debug("encoded %d clauses over %d variables (strict=%s)", len(rules), len(variables), strict)
    return RuleSet(sensed, obligations, tuple(rules))
