"""Logic-program export in Prolog syntax, with optional message goals."""

from typing import List, Optional

from sleecc.config import Config
from sleecc.core.formula import Atom
from sleecc.core.ruleset import Literal, RuleSet
from sleecc.interop.logic_program import LogicProgram, ProgramRule, build_program


def _literal(lit: Literal) -> str:
    return str(lit.atom) if lit.positive else f"\\+ {lit.atom}"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def message_for(atom: Atom, rs: RuleSet) -> str:
    desc = rs.descriptions.get(atom)
    if desc is not None:
        return desc
    return Config().message_template.format(atom=atom)


def format_rule(rule: ProgramRule, message: Optional[str] = None) -> str:
    goals = [_literal(lit) for lit in rule.body]
    if message is not None:
        goals.append(f"write({_quote(message)})")
    if not goals:
        return f"{rule.head}."
    return f"{rule.head} :- {', '.join(goals)}."


def scaffold_lines(program: LogicProgram, constant: str) -> List[str]:
    lines = []
    for name, arity in program.predicates_needing_scaffold():
        if arity:
            lines.append(f"{name}({','.join([constant] * arity)}).")
        else:
            lines.append(f":- dynamic {name}/0.")
    return lines


def export_prolog(rs: RuleSet, messages: bool = False, scaffold: bool = False) -> str:
    """Ground program with ``\\+`` for negation as failure.

    With ``messages`` each rule body ends with a ``write`` goal carrying the
    head's description (or the configured template).
    """
    program = build_program(rs)
    lines = [
        format_rule(r, message_for(r.head, rs) if messages else None) for r in program.rules
    ]
    lines += [f"{atom}." for atom in program.facts]
    if scaffold:
        lines += scaffold_lines(program, Config().scaffold_constant)
    return "\n".join(lines) + "\n" if lines else ""
