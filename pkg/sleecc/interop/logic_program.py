"""Ground logic programs derived from rule sets, and their closed-world replay.

A rule set is exportable when every condition is a conjunction of sensed
literals and every outcome a conjunction of positive obligation atoms. Each
compiled implication then becomes one program rule per head atom; the
negated next condition ``not (l1 and ... and lm)`` splits into one rule per
complemented literal.

With sensed atoms fixed by the facts (closed world) and obligation heads never
negated, negation as failure and classical negation agree, so replaying the
program yields exactly the classically entailed obligations of the
closed-world rule set.
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from sleecc.core.formula import Atom, Formula, conjuncts, is_true, literal_of, to_text
from sleecc.core.ruleset import Literal, RuleSet, SleecRule
from sleecc.errors import NotExportable, SleecSyntaxError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProgramRule:
    head: Atom
    body: Tuple[Literal, ...]


@dataclass(frozen=True)
class LogicProgram:
    rules: Tuple[ProgramRule, ...] = ()
    facts: Tuple[Atom, ...] = ()

    @property
    def heads(self) -> FrozenSet[Atom]:
        return frozenset(r.head for r in self.rules)

    def predicates_needing_scaffold(self) -> List[Tuple[str, int]]:
        """Body predicates that no fact or rule head defines, in first-use order."""
        defined = {(a.name, a.arity) for a in self.facts} | {(a.name, a.arity) for a in self.heads}
        out: Dict[Tuple[str, int], None] = {}
        for rule in self.rules:
            for lit in rule.body:
                key = (lit.atom.name, lit.atom.arity)
                if key not in defined:
                    out.setdefault(key, None)
        return list(out)

    def replay(self) -> FrozenSet[Atom]:
        """The unique answer set: facts plus every head derivable under the closed world.

        Raises NotExportable when a negated atom is also a rule head (the
        program is then not stratified over the facts).
        """
        heads = self.heads
        for rule in self.rules:
            for lit in rule.body:
                if not lit.positive and lit.atom in heads:
                    raise NotExportable(f"negation over derived atom {lit.atom}")
        true: Set[Atom] = set(self.facts)
        changed = True
        while changed:
            changed = False
            for rule in self.rules:
                if rule.head in true:
                    continue
                if all((lit.atom in true) == lit.positive for lit in rule.body):
                    true.add(rule.head)
                    changed = True
        return frozenset(true)

    def derived(self) -> FrozenSet[Atom]:
        """Atoms in the answer set that are heads of some rule."""
        return self.replay() & self.heads


# ── building from rule sets ──────────────────────────────────────────────

def _sensed_literals(f: Formula, rs: RuleSet, where: str) -> List[Literal]:
    if is_true(f):
        return []
    out: List[Literal] = []
    for part in conjuncts(f):
        if is_true(part):
            continue
        lit = literal_of(part)
        if lit is None or not rs.is_sensed(lit[0]):
            raise NotExportable(f"{where} ({to_text(f)}) is not a conjunction of sensed literals")
        out.append(Literal(*lit))
    return out


def _obligation_heads(f: Formula, rs: RuleSet, where: str) -> List[Atom]:
    if is_true(f):
        return []
    out: List[Atom] = []
    for part in conjuncts(f):
        if is_true(part):
            continue
        lit = literal_of(part)
        if lit is None or not lit[1] or not rs.is_obligation(lit[0]):
            raise NotExportable(f"{where} ({to_text(f)}) is not a conjunction of obligation atoms")
        out.append(lit[0])
    return out


def _body(literals: List[Literal]) -> Optional[Tuple[Literal, ...]]:
    """Deduplicated body, or None when it contains complementary literals."""
    signs: Dict[Atom, bool] = {}
    for lit in literals:
        if signs.setdefault(lit.atom, lit.positive) != lit.positive:
            return None
    return tuple(dict.fromkeys(literals))


def rule_program(rule: SleecRule, rs: RuleSet, label: str = "") -> List[ProgramRule]:
    label = label or rule.name or "rule"
    conds = [_sensed_literals(c, rs, f"{label}: condition {i}") for i, c in enumerate(rule.conditions)]
    heads = [_obligation_heads(o, rs, f"{label}: outcome {i}") for i, o in enumerate(rule.outcomes)]
    out: List[ProgramRule] = []

    def emit(body_lits: List[Literal], targets: List[Atom]):
        body = _body(body_lits)
        if body is None:
            return
        for head in targets:
            out.append(ProgramRule(head, body))

    for i in range(rule.n):
        prefix = [lit for c in conds[: i + 1] for lit in c]
        for lit in conds[i + 1]:
            emit(prefix + [lit.negate()], heads[i])
    emit([lit for c in conds for lit in c], heads[-1])
    return out


def exportable(rs: RuleSet) -> bool:
    try:
        build_program(rs)
    except NotExportable:
        return False
    return True


def build_program(rs: RuleSet) -> LogicProgram:
    """Program rules in rule/clause order, then the positive facts."""
    rules: Dict[ProgramRule, None] = {}
    for r, rule in enumerate(rs.rules):
        for prog_rule in rule_program(rule, rs, rule.name or f"rule #{r + 1}"):
            rules.setdefault(prog_rule, None)
    facts = tuple(lit.atom for lit in rs.facts if lit.positive)
    logger.debug("program: %d rules, %d facts", len(rules), len(facts))
    return LogicProgram(tuple(rules), facts)


def replay_obligations(rs: RuleSet) -> FrozenSet[Atom]:
    """Obligations derived by replaying the exported program on ``rs``'s facts."""
    return build_program(rs).derived()


# ── reading exported text back ───────────────────────────────────────────

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<neck>:-)
  | (?P<naf>\\\+)
  | (?P<directive>\#[a-z]+)
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),./])
    """,
    re.VERBOSE,
)


class _ProgramReader:
    def __init__(self, text: str):
        self.tokens: List[Tuple[str, str, int]] = []
        line, pos = 1, 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise SleecSyntaxError(line, 0, "a token", text[pos])
            if m.lastgroup not in ("ws", "comment"):
                kind = m.group() if m.lastgroup == "punct" else m.lastgroup
                self.tokens.append((kind, m.group(), line))
            line += m.group().count("\n")
            pos = m.end()
        self.tokens.append(("eof", "", line))
        self.pos = 0

    def peek(self, offset: int = 0) -> Tuple[str, str, int]:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def take(self, kind: str, text: Optional[str] = None) -> str:
        k, t, line = self.peek()
        if k != kind or (text is not None and t != text):
            raise SleecSyntaxError(line, 0, text or kind, t or "end of input")
        self.pos += 1
        return t

    def atom(self) -> Atom:
        name = self.take("ident")
        args: List[str] = []
        if self.peek()[0] == "(":
            self.take("(")
            args.append(self.take("ident"))
            while self.peek()[0] == ",":
                self.take(",")
                args.append(self.take("ident"))
            self.take(")")
        return Atom(name, tuple(args))

    def skip_statement(self):
        while self.peek()[0] not in (".", "eof"):
            self.pos += 1
        self.take(".")

    def goal(self) -> Optional[Literal]:
        kind, text, _ = self.peek()
        if kind == "naf" or (kind == "ident" and text == "not"):
            self.pos += 1
            return Literal(self.atom(), False)
        if kind == "ident" and text == "write" and self.peek(1)[0] == "(" and self.peek(2)[0] == "string":
            self.pos += 2
            self.take("string")
            self.take(")")
            return None
        return Literal(self.atom(), True)

    def program(self) -> LogicProgram:
        rules: List[ProgramRule] = []
        facts: List[Atom] = []
        while self.peek()[0] != "eof":
            kind, _, _ = self.peek()
            if kind in ("directive", "neck"):
                self.skip_statement()
                continue
            head = self.atom()
            if self.peek()[0] == ".":
                self.take(".")
                facts.append(head)
                continue
            self.take("neck")
            body: List[Literal] = []
            while True:
                lit = self.goal()
                if lit is not None:
                    body.append(lit)
                if self.peek()[0] != ",":
                    break
                self.take(",")
            self.take(".")
            rules.append(ProgramRule(head, tuple(body)))
        return LogicProgram(tuple(rules), tuple(facts))


def parse_program(text: str) -> LogicProgram:
    """Read ground program text as written by the ASP and logic-program exporters.

    Directives (``#defined``, ``:- dynamic``) and ``write("...")`` goals are
    skipped.
    """
    return _ProgramReader(text).program()
