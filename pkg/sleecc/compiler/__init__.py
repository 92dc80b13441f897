"""Lowering of SLEEC rules to propositional logic."""

from sleecc.compiler.lowering import (
    compile_conjuncts,
    compile_rule,
    compile_ruleset,
    compiled_size,
    nested_form,
    ruleset_conjuncts,
)
from sleecc.compiler.semantics import semantics_eval, semantics_table
