"""SLEEC rule sets: atom declarations, rules in the IF/THEN/UNLESS pattern, facts."""

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from sleecc.core.formula import Atom, Formula, Not, Var, atoms_of_all, to_text
from sleecc.errors import ContradictoryFacts, DuplicateDeclaration, NotSensed, SleecError, UndeclaredAtom

SENSED = "sensed"
OBLIGATION = "obligation"


@dataclass(frozen=True)
class Literal:
    """A signed atom."""

    atom: Atom
    positive: bool = True

    def to_formula(self) -> Formula:
        return Var(self.atom) if self.positive else Not(Var(self.atom))

    def negate(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def __str__(self) -> str:
        return str(self.atom) if self.positive else f"not {self.atom}"


@dataclass(frozen=True)
class SleecRule:
    """IF C0 THEN O0, UNLESS C1 IN WHICH CASE O1, ..., UNLESS Cn IN WHICH CASE On.

    ``conditions`` and ``outcomes`` keep the written order.
    """

    conditions: Tuple[Formula, ...]
    outcomes: Tuple[Formula, ...]
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "conditions", tuple(self.conditions))
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        if not self.conditions or len(self.conditions) != len(self.outcomes):
            raise SleecError(
                f"Rule {self.name or '<anonymous>'}: conditions and outcomes must have "
                f"equal length >= 1 (got {len(self.conditions)} and {len(self.outcomes)})"
            )

    @property
    def n(self) -> int:
        """Number of UNLESS clauses."""
        return len(self.conditions) - 1

    @property
    def clauses(self) -> List[Tuple[Formula, Formula]]:
        return list(zip(self.conditions, self.outcomes))

    def atoms(self) -> Tuple[Atom, ...]:
        return atoms_of_all(self.conditions + self.outcomes)

    def __str__(self) -> str:
        return format_rule(self)


@dataclass(frozen=True)
class RuleSet:
    """Declared atoms (sensed / obligation partition), ordered rules and facts.

    Every atom used by a rule or fact must be declared in exactly one of the
    two partitions; facts never assert both signs of one atom.
    """

    sensed: Tuple[Atom, ...] = ()
    obligations: Tuple[Atom, ...] = ()
    rules: Tuple[SleecRule, ...] = ()
    facts: Tuple[Literal, ...] = ()
    descriptions: Dict[Atom, str] = field(default_factory=dict, hash=False)
    _sensed_set: FrozenSet[Atom] = field(init=False, repr=False, compare=False, hash=False)
    _obligation_set: FrozenSet[Atom] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for name in ("sensed", "obligations", "rules", "facts"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "_sensed_set", frozenset(self.sensed))
        object.__setattr__(self, "_obligation_set", frozenset(self.obligations))
        declared = set()
        for atom in self.sensed + self.obligations:
            if atom.reserved:
                raise SleecError(f"Reserved atom cannot be declared: {atom}")
            if atom in declared:
                raise DuplicateDeclaration(str(atom))
            declared.add(atom)
        for rule in self.rules:
            for atom in rule.atoms():
                if atom not in declared:
                    raise UndeclaredAtom(str(atom))
        signs: Dict[Atom, bool] = {}
        for lit in self.facts:
            if lit.atom not in declared:
                raise UndeclaredAtom(str(lit.atom))
            if lit.atom not in self._sensed_set:
                raise NotSensed(str(lit.atom))
            if signs.setdefault(lit.atom, lit.positive) != lit.positive:
                raise ContradictoryFacts(str(lit.atom))

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        """All declared atoms: sensed first, then obligations, in declared order."""
        return self.sensed + self.obligations

    def kind(self, atom: Atom) -> str:
        if atom in self._sensed_set:
            return SENSED
        if atom in self._obligation_set:
            return OBLIGATION
        raise UndeclaredAtom(str(atom))

    def is_sensed(self, atom: Atom) -> bool:
        return atom in self._sensed_set

    def is_obligation(self, atom: Atom) -> bool:
        return atom in self._obligation_set

    def check_declared(self, formula: Formula):
        declared = set(self.atoms)
        for atom in atoms_of_all((formula,)):
            if atom not in declared:
                raise UndeclaredAtom(str(atom))

    def with_facts(self, facts: Iterable[Literal]) -> "RuleSet":
        """Copy with ``facts`` appended; duplicates are dropped."""
        merged = list(self.facts)
        for lit in facts:
            if lit not in merged:
                merged.append(lit)
        return replace(self, facts=tuple(merged))

    def without_facts(self) -> "RuleSet":
        return replace(self, facts=())

    def close_world(self) -> "RuleSet":
        """Copy asserting every sensed atom not mentioned by a fact as false."""
        mentioned = {lit.atom for lit in self.facts}
        return self.with_facts(
            Literal(a, False) for a in self.sensed if a not in mentioned
        )

    def __str__(self) -> str:
        return format_ruleset(self)


# ── Canonical printer ────────────────────────────────────────────────────

def format_rule(rule: SleecRule) -> str:
    head = f"rule {rule.name}:" if rule.name else "rule:"
    lines = [f"{head} IF {to_text(rule.conditions[0])} THEN {to_text(rule.outcomes[0])}"]
    for cond, outcome in rule.clauses[1:]:
        lines.append(f"  UNLESS {to_text(cond)} IN WHICH CASE {to_text(outcome)}")
    return "\n".join(lines) + "."


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _format_decls(keyword: str, decls: Tuple[Atom, ...], descriptions: Dict[Atom, str]) -> List[str]:
    if not decls:
        return []
    if not any(a in descriptions for a in decls):
        return [f"{keyword} " + " ".join(str(a) for a in decls)]
    lines = [keyword]
    for atom in decls:
        desc = descriptions.get(atom)
        lines.append(f'  {atom} "{_escape(desc)}"' if desc is not None else f"  {atom}")
    return lines


def format_ruleset(rs: RuleSet) -> str:
    """Canonical ``.sleec`` text; ``parse_ruleset`` reads it back unchanged."""
    lines = _format_decls("sense", rs.sensed, rs.descriptions)
    lines += _format_decls("obligation", rs.obligations, rs.descriptions)
    for rule in rs.rules:
        lines.append(format_rule(rule))
    if rs.facts:
        lines.append("fact " + " ".join(str(lit) for lit in rs.facts))
    return "\n".join(lines) + "\n" if lines else ""
