"""Interoperability: DIMACS, the 3CNF reduction and logic-program exports."""

from sleecc.interop.asp import export_asp
from sleecc.interop.dimacs import parse_dimacs, read_dimacs, write_dimacs
from sleecc.interop.logic_program import (
    LogicProgram,
    ProgramRule,
    build_program,
    exportable,
    parse_program,
    replay_obligations,
)
from sleecc.interop.prolog import export_prolog
from sleecc.interop.reduction import CnfInput, encode_3cnf
