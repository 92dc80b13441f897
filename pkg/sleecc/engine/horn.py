"""Linear-time entailment for the Horn-tractable fragment.

A rule set is eligible when every condition is a negated sensed atom and
every outcome a positive obligation atom. Each compiled conjunct is then a
dual-Horn clause (at most one negative literal)::

    C0 and ... and Ci and not C(i+1) -> Oi   ==   p0 or ... or pi or not p(i+1) or qi

where ``Cj = not pj``. Negating every variable turns the set into Horn
clauses, decided by counter-based forward chaining (Dowling-Gallier): each
clause keeps the number of body atoms not yet derived and fires when it
reaches zero.
"""

import logging
from collections import deque
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

from sleecc.core.formula import Atom, Formula, literal_of
from sleecc.core.interpretation import Interpretation
from sleecc.core.ruleset import RuleSet, SleecRule
from sleecc.engine.cnf import normalize_clause
from sleecc.engine.result import QueryResult, Verdict
from sleecc.errors import NotEligible

logger = logging.getLogger(__name__)


def _negated_sensed(f: Formula, rs: RuleSet) -> Optional[Atom]:
    lit = literal_of(f)
    if lit is None or lit[1] or not rs.is_sensed(lit[0]):
        return None
    return lit[0]


def _positive_obligation(f: Formula, rs: RuleSet) -> Optional[Atom]:
    lit = literal_of(f)
    if lit is None or not lit[1] or not rs.is_obligation(lit[0]):
        return None
    return lit[0]


def rule_eligible(rule: SleecRule, rs: RuleSet) -> bool:
    return all(_negated_sensed(c, rs) is not None for c in rule.conditions) and all(
        _positive_obligation(o, rs) is not None for o in rule.outcomes
    )


def horn_eligible(rs: RuleSet) -> bool:
    """True iff all conditions are negated sensed atoms and all outcomes positive obligation atoms.

    Facts may be arbitrary literals: a unit clause never breaks dual-Hornness.
    """
    return all(rule_eligible(rule, rs) for rule in rs.rules)


class HornClause(NamedTuple):
    """``body -> head`` over negated variables; ``head`` None for a goal clause."""

    body: Tuple[int, ...]
    head: Optional[int]
    origin: str


class HornResult(NamedTuple):
    satisfiable: bool
    derived: Set[int]
    steps: int


class HornInstance:
    """Horn clauses obtained by negating every variable of a dual-Horn set.

    ``dual_clauses`` keeps the clauses before negation.
    """

    def __init__(self, atom_index: Dict[Atom, int], dual_clauses: Sequence[Tuple[Tuple[int, ...], str]]):
        self.atom_index = atom_index
        self.dual_clauses: List[Tuple[int, ...]] = []
        self.clauses: List[HornClause] = []
        for lits, origin in dual_clauses:
            clause = tuple(lits)
            if len({abs(lit) for lit in clause}) != len(clause):
                clause = normalize_clause(clause)
                if clause is None:
                    continue
            heads = [-lit for lit in clause if lit < 0]
            if len(heads) > 1:
                raise NotEligible(f"{origin}: clause {clause} is not dual-Horn")
            body = tuple(lit for lit in clause if lit > 0)
            self.dual_clauses.append(clause)
            self.clauses.append(HornClause(body, heads[0] if heads else None, origin))

    @classmethod
    def from_ruleset(cls, rs: RuleSet, query: Optional[Atom] = None) -> "HornInstance":
        """Dual-Horn clauses of the rules and facts, plus ``not query`` when given.

        Eligibility is checked while the clauses are built.
        """
        index = {atom: i for i, atom in enumerate(rs.atoms, start=1)}
        dual: List[Tuple[Tuple[int, ...], str]] = []
        for r, rule in enumerate(rs.rules):
            label = rule.name or f"#{r}"
            p: List[int] = []
            for c in rule.conditions:
                atom = _negated_sensed(c, rs)
                if atom is None:
                    raise NotEligible(f"rule {label}: condition {c} is not a negated sensed atom")
                p.append(index[atom])
            q: List[int] = []
            for o in rule.outcomes:
                atom = _positive_obligation(o, rs)
                if atom is None:
                    raise NotEligible(f"rule {label}: outcome {o} is not an obligation atom")
                q.append(index[atom])
            for i in range(rule.n):
                dual.append((tuple(p[: i + 1]) + (-p[i + 1], q[i]), f"rule {label} clause {i}"))
            dual.append((tuple(p) + (q[-1],), f"rule {label} clause {rule.n}"))
        for lit in rs.facts:
            idx = index[lit.atom]
            dual.append(((idx if lit.positive else -idx,), f"fact {lit}"))
        if query is not None:
            if not rs.is_obligation(query):
                raise NotEligible(f"query {query} is not a declared obligation atom")
            dual.append(((-index[query],), f"query {query}"))
        return cls(index, dual)

    def propagate(self) -> HornResult:
        """Forward chaining; unsatisfiable as soon as a goal clause's body is derived."""
        remaining = [len(c.body) for c in self.clauses]
        occurs: Dict[int, List[int]] = {}
        queue = deque()
        steps = 0
        for ci, clause in enumerate(self.clauses):
            for atom in clause.body:
                occurs.setdefault(atom, []).append(ci)
            if not clause.body:
                if clause.head is None:
                    return HornResult(False, set(), steps)
                queue.append(clause.head)

        derived: Set[int] = set()
        while queue:
            atom = queue.popleft()
            if atom in derived:
                continue
            derived.add(atom)
            steps += 1
            for ci in occurs.get(atom, ()):
                steps += 1
                remaining[ci] -= 1
                if remaining[ci] == 0:
                    head = self.clauses[ci].head
                    if head is None:
                        return HornResult(False, derived, steps)
                    queue.append(head)
        return HornResult(True, derived, steps)

    def model(self, derived: Set[int]) -> Interpretation:
        """Model of the original (dual-Horn) clauses: an atom is true iff its negation was not derived."""
        return Interpretation({atom: idx not in derived for atom, idx in self.atom_index.items()})


def horn_entails(rs: RuleSet, o: Atom) -> QueryResult:
    """ENTAILED iff the Horn instance with the query clause is unsatisfiable."""
    instance = HornInstance.from_ruleset(rs, o)
    result = instance.propagate()
    stats = {"propagation_steps": result.steps, "clauses": len(instance.clauses)}
    logger.debug("horn: query %s, %s", o, stats)
    if not result.satisfiable:
        return QueryResult(Verdict.ENTAILED, None, "horn", stats)
    return QueryResult(Verdict.NOT_ENTAILED, instance.model(result.derived), "horn", stats)


def horn_consistent(rs: RuleSet) -> QueryResult:
    instance = HornInstance.from_ruleset(rs)
    result = instance.propagate()
    stats = {"propagation_steps": result.steps, "clauses": len(instance.clauses)}
    if not result.satisfiable:
        return QueryResult(Verdict.INCONSISTENT, None, "horn", stats)
    return QueryResult(Verdict.CONSISTENT, instance.model(result.derived), "horn", stats)
