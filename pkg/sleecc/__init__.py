"""
sleecc - compiler and reasoning toolkit for SLEEC normative rules.

Parses rule sets written in the IF/THEN/UNLESS pattern, lowers them to
propositional logic, and answers consistency, entailment and obligation
queries; exports to DIMACS and logic-program text.
"""

__version__ = "0.1.0"

from sleecc.config import Config
