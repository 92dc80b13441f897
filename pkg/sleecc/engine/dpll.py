"""Self-contained DPLL solver: two watched literals, chronological backtracking.

Branching is deterministic (lowest unassigned variable, false first), so the
same clause set always yields the same model.
"""

import logging
from collections import defaultdict
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass
class SolverStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


class DpllSolver:
    """Decide satisfiability of a CNF over variables ``1..num_vars``.

    Usage:
        model = DpllSolver(3, [[1, -2], [2, 3]]).solve()
        # model[i - 1] is the value of variable i, or None when unsatisfiable
    """

    def __init__(self, num_vars: int, clauses: Sequence[Sequence[int]]):
        self.num_vars = num_vars
        self.clauses: List[List[int]] = []
        self.empty = False
        for clause in clauses:
            lits = list(dict.fromkeys(clause))
            if any(-lit in lits for lit in lits):
                continue
            if not lits:
                self.empty = True
            self.clauses.append(lits)
        self.values: List[Optional[bool]] = [None] * (num_vars + 1)
        self.watches: Dict[int, List[int]] = defaultdict(list)
        self.trail: List[int] = []
        self.qhead = 0
        # (trail position, decision literal, already flipped)
        self.levels: List[Tuple[int, int, bool]] = []
        self.stats = SolverStats()

    def _value(self, lit: int) -> Optional[bool]:
        v = self.values[abs(lit)]
        if v is None:
            return None
        return v if lit > 0 else not v

    def _assign(self, lit: int):
        self.values[abs(lit)] = lit > 0
        self.trail.append(lit)

    def _propagate(self) -> bool:
        """Unit propagation over the trail; False on conflict."""
        while self.qhead < len(self.trail):
            false_lit = -self.trail[self.qhead]
            self.qhead += 1
            watching = self.watches[false_lit]
            i = 0
            while i < len(watching):
                ci = watching[i]
                clause = self.clauses[ci]
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], clause[0]
                if self._value(clause[0]) is True:
                    i += 1
                    continue
                moved = False
                for k in range(2, len(clause)):
                    if self._value(clause[k]) is not False:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches[clause[1]].append(ci)
                        watching[i] = watching[-1]
                        watching.pop()
                        moved = True
                        break
                if moved:
                    continue
                if self._value(clause[0]) is False:
                    self.stats.conflicts += 1
                    return False
                self._assign(clause[0])
                self.stats.propagations += 1
                i += 1
        return True

    def _backtrack(self) -> bool:
        """Undo to the most recent unflipped decision and flip it."""
        while self.levels:
            pos, lit, flipped = self.levels.pop()
            for undone in self.trail[pos:]:
                self.values[abs(undone)] = None
            del self.trail[pos:]
            self.qhead = pos
            if not flipped:
                self.levels.append((pos, -lit, True))
                self._assign(-lit)
                return True
        return False

    def _next_unassigned(self) -> Optional[int]:
        for var in range(1, self.num_vars + 1):
            if self.values[var] is None:
                return var
        return None

    def solve(self) -> Optional[List[bool]]:
        """A satisfying total assignment, or None when unsatisfiable."""
        if self.empty:
            return None
        for ci, clause in enumerate(self.clauses):
            if len(clause) == 1:
                value = self._value(clause[0])
                if value is False:
                    return None
                if value is None:
                    self._assign(clause[0])
            else:
                self.watches[clause[0]].append(ci)
                self.watches[clause[1]].append(ci)

        while True:
            if not self._propagate():
                if not self._backtrack():
                    logger.debug("dpll: unsatisfiable (%s)", self.stats)
                    return None
                continue
            var = self._next_unassigned()
            if var is None:
                logger.debug("dpll: satisfiable (%s)", self.stats)
                return [bool(v) for v in self.values[1:]]
            self.stats.decisions += 1
            self.levels.append((len(self.trail), -var, False))
            self._assign(-var)
