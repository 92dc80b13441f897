"""Consistency, entailment and obligation queries over rule sets.

Entailment is decided by refutation: ``rs |= q`` iff the compiled rule set
together with ``not q`` is unsatisfiable. Every reported witness is checked
again by direct evaluation before it is returned.
"""

import logging
from typing import Dict, List, Optional, Tuple

from sleecc.compiler.lowering import ruleset_conjuncts
from sleecc.config import ENGINES, Config
from sleecc.core.formula import Atom, Formula, Not, Var, literal_of
from sleecc.core.interpretation import Interpretation, evaluate
from sleecc.core.ruleset import RuleSet
from sleecc.engine.cnf import ClauseSet, to_cnf_all
from sleecc.engine.dpll import DpllSolver
from sleecc.engine.horn import horn_consistent, horn_eligible, horn_entails
from sleecc.engine.result import ObligationStatus, QueryResult, Verdict
from sleecc.errors import ConfigError, InconsistentRuleSet, NotEligible, SleecError

logger = logging.getLogger(__name__)


def solve(cs: ClauseSet) -> QueryResult:
    """CONSISTENT with a model over the clause set's atoms, or INCONSISTENT."""
    solver = DpllSolver(cs.num_vars, cs.clauses)
    assignment = solver.solve()
    stats = solver.stats.to_dict()
    stats.update(variables=cs.num_vars, clauses=len(cs))
    if assignment is None:
        return QueryResult(Verdict.INCONSISTENT, None, "sat", stats)
    model = Interpretation({atom: assignment[idx - 1] for atom, idx in cs.atom_index.items()})
    return QueryResult(Verdict.CONSISTENT, model, "sat", stats)


def _query_atom(query: Optional[Formula], rs: RuleSet) -> Optional[Atom]:
    if query is None:
        return None
    lit = literal_of(query)
    if lit is None or not lit[1] or not isinstance(query, Var) or not rs.is_obligation(lit[0]):
        return None
    return lit[0]


def select_engine(rs: RuleSet, query: Optional[Formula] = None, engine: Optional[str] = None) -> str:
    """Resolve ``auto`` to ``horn`` or ``sat``; ``horn`` on an ineligible instance is an error."""
    engine = engine or Config().engine
    if engine not in ENGINES:
        raise ConfigError(f"Unknown engine: {engine} (choose from {', '.join(ENGINES)})")
    query_ok = query is None or _query_atom(query, rs) is not None
    if engine == "horn":
        if not horn_eligible(rs):
            raise NotEligible("rule set is outside the Horn fragment")
        if not query_ok:
            raise NotEligible("the Horn engine only answers single obligation-atom queries")
        return "horn"
    if engine == "auto":
        chosen = "horn" if query_ok and horn_eligible(rs) else "sat"
        logger.debug("engine auto -> %s", chosen)
        return chosen
    return "sat"


def validate_witness(rs: RuleSet, witness: Interpretation, query: Optional[Formula] = None) -> bool:
    """True iff ``witness`` satisfies the rule set and, when given, falsifies ``query``."""
    if not all(evaluate(part, witness) for part in ruleset_conjuncts(rs)):
        return False
    return query is None or not evaluate(query, witness)


def _checked(result: QueryResult, rs: RuleSet, query: Optional[Formula] = None) -> QueryResult:
    if result.witness is not None and not validate_witness(rs, result.witness, query):
        raise SleecError(f"{result.engine} engine returned an invalid witness: {result.witness!r}")
    return result


def check_consistency(rs: RuleSet, engine: Optional[str] = None) -> QueryResult:
    """CONSISTENT with a model over the declared atoms, or INCONSISTENT."""
    if select_engine(rs, None, engine) == "horn":
        return _checked(horn_consistent(rs), rs)
    result = solve(to_cnf_all(ruleset_conjuncts(rs), rs.atoms))
    if result.witness is not None:
        result = QueryResult(result.verdict, result.witness.restrict(rs.atoms), result.engine, result.stats)
    return _checked(result, rs)


def entails(rs: RuleSet, query: Formula, engine: Optional[str] = None) -> QueryResult:
    """ENTAILED, or NOT_ENTAILED with a countermodel over the declared atoms.

    Raises UndeclaredAtom when ``query`` mentions an atom ``rs`` does not declare.
    """
    rs.check_declared(query)
    if select_engine(rs, query, engine) == "horn":
        return _checked(horn_entails(rs, _query_atom(query, rs)), rs, query)
    premises = ruleset_conjuncts(rs) + [Not(query)]
    result = solve(to_cnf_all(premises, rs.atoms))
    if result.verdict is Verdict.INCONSISTENT:
        return QueryResult(Verdict.ENTAILED, None, "sat", result.stats)
    witness = result.witness.restrict(rs.atoms)
    return _checked(QueryResult(Verdict.NOT_ENTAILED, witness, "sat", result.stats), rs, query)


def _accumulate(total: Optional[Dict[str, int]], stats: Dict[str, int]):
    if total is None:
        return
    for key, value in stats.items():
        total[key] = total.get(key, 0) + value


def derive_obligations(
    rs: RuleSet,
    engine: Optional[str] = None,
    stats: Optional[Dict[str, int]] = None,
) -> List[Tuple[Atom, ObligationStatus]]:
    """Status of every declared obligation atom, in declaration order.

    Raises InconsistentRuleSet instead of reporting every obligation as
    entailed.
    """
    consistency = check_consistency(rs, engine)
    _accumulate(stats, consistency.stats)
    if consistency.verdict is Verdict.INCONSISTENT:
        logger.warning("refusing to derive obligations from an inconsistent rule set")
        raise InconsistentRuleSet()
    out: List[Tuple[Atom, ObligationStatus]] = []
    for atom in rs.obligations:
        result = entails(rs, Var(atom), engine)
        _accumulate(stats, result.stats)
        status = ObligationStatus.OBLIGED if result.verdict is Verdict.ENTAILED else ObligationStatus.NOT_OBLIGED
        out.append((atom, status))
    return out


def obliged(rs: RuleSet, engine: Optional[str] = None) -> List[Atom]:
    return [atom for atom, status in derive_obligations(rs, engine) if status is ObligationStatus.OBLIGED]
