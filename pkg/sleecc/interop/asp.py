"""Answer-set program export (clingo syntax)."""

from typing import List

from sleecc.config import Config
from sleecc.core.ruleset import Literal, RuleSet
from sleecc.interop.logic_program import LogicProgram, ProgramRule, build_program


def _literal(lit: Literal) -> str:
    return str(lit.atom) if lit.positive else f"not {lit.atom}"


def format_rule(rule: ProgramRule) -> str:
    if not rule.body:
        return f"{rule.head}."
    return f"{rule.head} :- {', '.join(_literal(lit) for lit in rule.body)}."


def scaffold_lines(program: LogicProgram, constant: str) -> List[str]:
    """Definitions for body predicates that appear in no head or fact."""
    lines = []
    for name, arity in program.predicates_needing_scaffold():
        if arity:
            lines.append(f"{name}({','.join([constant] * arity)}).")
        else:
            lines.append(f"#defined {name}/0.")
    return lines


def export_asp(rs: RuleSet, scaffold: bool = False) -> str:
    """Ground ASP program: rules, then positive facts, then optional scaffolding.

    Raises NotExportable outside the exportable fragment.
    """
    program = build_program(rs)
    lines = [format_rule(r) for r in program.rules]
    lines += [f"{atom}." for atom in program.facts]
    if scaffold:
        lines += scaffold_lines(program, Config().scaffold_constant)
    return "\n".join(lines) + "\n" if lines else ""
