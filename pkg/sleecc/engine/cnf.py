"""Clausal form for the SAT and Horn engines.

Each top-level conjunct is distributed into clauses directly while that stays
small; larger conjuncts fall back to a Tseitin encoding whose auxiliary
variables are numbered above every atom. Both keep the models exactly: a
satisfying assignment restricted to the atoms is a model of the input.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sleecc.core.formula import TRUE_ATOM, Atom, Formula, Not, Or, Var, atoms_of_all, conjuncts

logger = logging.getLogger(__name__)

Clause = Tuple[int, ...]

DISTRIBUTION_LIMIT = 64


@dataclass(frozen=True)
class ClauseSet:
    """CNF clauses over signed variable indices plus the atom <-> index map.

    Indices ``1..len(atom_index)`` belong to atoms (user atoms first, the
    reserved ``true`` atom last if used); ``len(atom_index)+1..num_vars`` are
    auxiliary.
    """

    clauses: Tuple[Clause, ...] = ()
    atom_index: Dict[Atom, int] = field(default_factory=dict, hash=False)
    num_vars: int = 0

    def __post_init__(self):
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"Unmapped literal {lit} in clause {clause}")
            if any(-lit in clause for lit in clause):
                raise ValueError(f"Tautological clause {clause}")

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        """Declared (non-reserved) atoms in index order."""
        return tuple(a for a, _ in sorted(self.atom_index.items(), key=lambda kv: kv[1]) if not a.reserved)

    @property
    def num_atoms(self) -> int:
        return len(self.atom_index)

    def __len__(self) -> int:
        return len(self.clauses)


def normalize_clause(lits: Iterable[int]) -> Optional[Clause]:
    """Drop repeated literals; None for a tautology."""
    seen: Dict[int, None] = {}
    for lit in lits:
        if -lit in seen:
            return None
        seen.setdefault(lit, None)
    return tuple(seen)


def _peel(f: Formula) -> Tuple[Formula, bool]:
    """Strip negations: the innermost non-negation and its polarity."""
    positive = True
    while isinstance(f, Not):
        positive = not positive
        f = f.operand
    return f, positive


def _merge(
    left: Optional[List[List[int]]], right: Optional[List[List[int]]], positive: bool
) -> Optional[List[List[int]]]:
    if left is None or right is None:
        return None
    if not positive:
        # not (a or b) = not a and not b
        merged = left + right
    else:
        if len(left) * len(right) > DISTRIBUTION_LIMIT:
            return None
        merged = [l + r for l in left for r in right]
    return merged if len(merged) <= DISTRIBUTION_LIMIT else None


class _Encoder:
    def __init__(self, domain: Sequence[Atom]):
        self.atom_index: Dict[Atom, int] = {}
        for atom in domain:
            if not atom.reserved:
                self.atom_index.setdefault(atom, len(self.atom_index) + 1)
        self.num_vars = len(self.atom_index)
        self.clauses: List[Clause] = []
        self._seen: Dict[Clause, None] = {}
        self._aux: Dict[Formula, int] = {}

    def reserve_true(self):
        self.atom_index[TRUE_ATOM] = len(self.atom_index) + 1
        self.num_vars = len(self.atom_index)

    def add(self, lits: Iterable[int]):
        clause = normalize_clause(lits)
        if clause is not None and clause not in self._seen:
            self._seen[clause] = None
            self.clauses.append(clause)

    def index(self, atom: Atom) -> int:
        return self.atom_index[atom]

    # ── direct distribution ─────────────────────────────────────────

    def distribute(self, f: Formula, positive: bool = True) -> Optional[List[List[int]]]:
        """Clauses equivalent to ``f`` (or its negation), None above the size limit."""
        done: Dict[Tuple[int, bool], Optional[List[List[int]]]] = {}
        stack = [(f, positive)]
        while stack:
            node, pos = stack[-1]
            key = (id(node), pos)
            if key in done:
                stack.pop()
                continue
            base = node
            while isinstance(base, Not) and isinstance(base.operand, Not):
                base = base.operand.operand

            if isinstance(base, Var):
                idx = self.index(base.atom)
                result = [[idx if pos else -idx]]
            elif isinstance(base, Not):
                inner = (id(base.operand), not pos)
                if inner not in done:
                    stack.append((base.operand, not pos))
                    continue
                result = done[inner]
            else:
                # left first; the right side is skipped once the left is over the limit
                lkey, rkey = (id(base.left), pos), (id(base.right), pos)
                if lkey not in done:
                    stack.append((base.left, pos))
                    continue
                if done[lkey] is not None and rkey not in done:
                    stack.append((base.right, pos))
                    continue
                result = _merge(done[lkey], done.get(rkey), pos)
            done[key] = result
            stack.pop()
        return done[(id(f), positive)]

    # ── Tseitin ─────────────────────────────────────────────────────

    def _signed(self, f: Formula) -> int:
        base, positive = _peel(f)
        v = self.index(base.atom) if isinstance(base, Var) else self._aux[base]
        return v if positive else -v

    def literal(self, f: Formula) -> int:
        """Literal standing for ``f``; one auxiliary variable per distinct disjunction."""
        stack = [_peel(f)[0]]
        while stack:
            node = stack[-1]
            if isinstance(node, Var) or node in self._aux:
                stack.pop()
                continue
            children = [_peel(node.left)[0], _peel(node.right)[0]]
            pending = [c for c in children if not isinstance(c, Var) and c not in self._aux]
            if pending:
                stack.extend(reversed(pending))
                continue
            stack.pop()
            a = self._signed(node.left)
            b = self._signed(node.right)
            self.num_vars += 1
            v = self.num_vars
            self._aux[node] = v
            self.add((-v, a, b))
            self.add((v, -a))
            self.add((v, -b))
        return self._signed(f)

    def encode(self, f: Formula):
        for part in conjuncts(f):
            clauses = self.distribute(part)
            if clauses is None:
                self.add((self.literal(part),))
            else:
                for clause in clauses:
                    self.add(clause)


def to_cnf_all(formulas: Sequence[Formula], domain: Sequence[Atom] = ()) -> ClauseSet:
    """Clausal form of the conjunction of ``formulas``.

    Atoms of ``domain`` are numbered first, in order, whether or not they
    occur; remaining atoms follow in first-occurrence order.
    """
    encoder = _Encoder(tuple(domain) + atoms_of_all(formulas))
    if any(_mentions_true(f) for f in formulas):
        encoder.reserve_true()
    for f in formulas:
        encoder.encode(f)
    logger.debug(
        "cnf: %d atoms, %d variables, %d clauses",
        len(encoder.atom_index), encoder.num_vars, len(encoder.clauses),
    )
    return ClauseSet(tuple(encoder.clauses), dict(encoder.atom_index), encoder.num_vars)


def to_cnf(f: Formula, domain: Sequence[Atom] = ()) -> ClauseSet:
    """Equisatisfiable clause set whose models, restricted to atoms, are those of ``f``."""
    return to_cnf_all([f], domain)


def _mentions_true(f: Formula) -> bool:
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            if node.atom.reserved:
                return True
        elif isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, Or):
            stack.append(node.left)
            stack.append(node.right)
    return False
