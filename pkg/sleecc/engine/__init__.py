"""Reasoning engines: CNF conversion, DPLL, the Horn fragment and the query layer."""

from sleecc.engine.cnf import ClauseSet, to_cnf, to_cnf_all
from sleecc.engine.dpll import DpllSolver, SolverStats
from sleecc.engine.horn import HornInstance, horn_consistent, horn_eligible, horn_entails
from sleecc.engine.query import (
    check_consistency,
    derive_obligations,
    entails,
    obliged,
    select_engine,
    solve,
    validate_witness,
)
from sleecc.engine.result import ObligationStatus, QueryResult, Verdict
