"""DIMACS CNF reader and writer.

The atom map travels in comment lines ``c <atom> <index>`` ahead of the
problem line, so a written file reads back with its atom names.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from sleecc.core.formula import Atom
from sleecc.engine.cnf import ClauseSet, normalize_clause
from sleecc.errors import InvalidCnf

_NAME_COMMENT = re.compile(r"c\s+(\S+)\s+(\d+)\s*\Z")


def write_dimacs(cs: ClauseSet) -> str:
    lines = [f"c {atom} {idx}" for atom, idx in sorted(cs.atom_index.items(), key=lambda kv: kv[1])]
    lines.append(f"p cnf {cs.num_vars} {len(cs)}")
    for clause in cs.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + (" 0" if clause else "0"))
    return "\n".join(lines) + "\n"


@dataclass
class DimacsProblem:
    """Clauses exactly as written (no dedup), with any names found in comments."""

    num_vars: int
    clauses: List[List[int]]
    names: Dict[int, Atom] = field(default_factory=dict)

    def atom(self, index: int) -> Atom:
        return self.names.get(index) or Atom(f"x{index}")


def parse_dimacs(text: str) -> DimacsProblem:
    """Parse DIMACS text; clauses may span lines and end at each ``0``."""
    header = None
    names: Dict[int, Atom] = {}
    clauses: List[List[int]] = []
    current: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("c"):
            m = _NAME_COMMENT.match(line)
            if m:
                try:
                    names[int(m.group(2))] = Atom.parse(m.group(1))
                except ValueError:
                    pass
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise InvalidCnf(f"line {lineno}: invalid problem line: {line}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise InvalidCnf(f"line {lineno}: invalid problem line: {line}") from None
            continue
        if header is None:
            raise InvalidCnf(f"line {lineno}: clause before the problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise InvalidCnf(f"line {lineno}: not a literal: {tok!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
                continue
            if abs(lit) > header[0]:
                raise InvalidCnf(f"line {lineno}: literal {lit} exceeds {header[0]} variables")
            current.append(lit)
    if header is None:
        raise InvalidCnf("missing problem line 'p cnf <vars> <clauses>'")
    if current:
        raise InvalidCnf("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise InvalidCnf(f"problem line declares {header[1]} clauses, found {len(clauses)}")
    return DimacsProblem(header[0], clauses, {i: a for i, a in names.items() if 1 <= i <= header[0]})


def read_dimacs(text: str) -> ClauseSet:
    """ClauseSet with every variable mapped to an atom (named, or ``x<i>``)."""
    problem = parse_dimacs(text)
    atom_index: Dict[Atom, int] = {}
    for i in range(1, problem.num_vars + 1):
        atom = problem.atom(i)
        if atom in atom_index:
            raise InvalidCnf(f"atom {atom} names variables {atom_index[atom]} and {i}")
        atom_index[atom] = i
    clauses: List[Tuple[int, ...]] = []
    for lits in problem.clauses:
        clause = normalize_clause(lits)
        if clause is not None:
            clauses.append(clause)
    return ClauseSet(tuple(clauses), atom_index, problem.num_vars)
