"""Formula core and the SLEEC rule language."""

from sleecc.core.formula import (
    FALSE,
    TRUE,
    Atom,
    Formula,
    Not,
    Or,
    Var,
    conjoin,
    implies,
    to_text,
    unless,
    unless_iwc,
)
from sleecc.core.interpretation import Interpretation, equiv_bruteforce, evaluate
from sleecc.core.parser import parse_facts, parse_formula, parse_ruleset
from sleecc.core.ruleset import Literal, RuleSet, SleecRule, format_ruleset
