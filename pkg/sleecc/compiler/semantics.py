"""Direct truth conditions of a SLEEC rule, computed without compiling it.

``v`` satisfies a rule iff

* for every 0 <= i < n: some C_j (j <= i) is false, or C(i+1) is true, or O_i is true; and
* some C_i (i <= n) is false, or O_n is true.

Used as an independent oracle against ``compile_rule``.
"""

from typing import Sequence

import numpy as np

from sleecc.core.formula import Atom
from sleecc.core.interpretation import Interpretation, columns, evaluate, table_of
from sleecc.core.ruleset import SleecRule
from sleecc.errors import UnknownAtom


def semantics_eval(rule: SleecRule, v: Interpretation) -> bool:
    for atom in rule.atoms():
        if atom not in v:
            raise UnknownAtom(str(atom))
    c = [evaluate(f, v) for f in rule.conditions]
    o = [evaluate(f, v) for f in rule.outcomes]
    for i in range(rule.n):
        if all(c[: i + 1]) and not c[i + 1] and not o[i]:
            return False
    return not all(c) or o[-1]


def semantics_table(rule: SleecRule, domain: Sequence[Atom]) -> np.ndarray:
    """``semantics_eval`` on every interpretation over ``domain`` at once."""
    domain = tuple(domain)
    cols = columns(domain)
    nrows = 2 ** len(domain)
    c = [table_of(f, cols, nrows) for f in rule.conditions]
    o = [table_of(f, cols, nrows) for f in rule.outcomes]
    result = np.ones(nrows, dtype=bool)
    prefix = np.ones(nrows, dtype=bool)
    for i in range(rule.n):
        prefix = prefix & c[i]
        result &= ~prefix | c[i + 1] | o[i]
    prefix = prefix & c[-1]
    result &= ~prefix | o[-1]
    return result
