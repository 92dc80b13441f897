"""Exception hierarchy for SLEEC rule compilation and reasoning."""

from typing import Optional


class SleecError(ValueError):
    """Base class for all errors raised by sleecc."""


class UnknownAtom(SleecError):
    """A formula mentions an atom outside an interpretation's domain."""

    def __init__(self, name: str):
        super().__init__(f"Unknown atom: {name}")
        self.name = name


class TooManyAtoms(SleecError):
    """Brute-force enumeration was asked for more atoms than allowed."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"Too many atoms for enumeration: {count} > {limit}")
        self.count = count
        self.limit = limit


class SleecSyntaxError(SleecError):
    """Parse error with source location."""

    def __init__(self, line: int, col: int, expected: str, found: Optional[str] = None):
        msg = f"{line}:{col}: expected {expected}"
        if found is not None:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found


class UndeclaredAtom(SleecError):
    def __init__(self, name: str, line: Optional[int] = None, col: Optional[int] = None):
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(f"{where}Undeclared atom: {name}")
        self.name = name
        self.line = line
        self.col = col


class DuplicateDeclaration(SleecError):
    def __init__(self, name: str):
        super().__init__(f"Atom declared more than once: {name}")
        self.name = name


class NotSensed(SleecError):
    """An obligation atom was asserted as a fact."""

    def __init__(self, name: str):
        super().__init__(f"Only sensed atoms may be facts, {name} is an obligation")
        self.name = name


class ContradictoryFacts(SleecError):
    def __init__(self, name: str):
        super().__init__(f"Fact asserted with both signs: {name}")
        self.name = name


class InconsistentRuleSet(SleecError):
    def __init__(self, msg: str = "Rule set is inconsistent; no obligation can be derived"):
        super().__init__(msg)


class NotEligible(SleecError):
    """The rule set or query is outside the Horn-tractable fragment."""


class NotExportable(SleecError):
    """The rule set is outside the logic-program export fragment."""

    def __init__(self, reason: str):
        super().__init__(f"Not exportable: {reason}")
        self.reason = reason


class InvalidCnf(SleecError):
    """Malformed DIMACS input, or a clause that is not a 3-literal clause."""


class ConfigError(SleecError):
    """Invalid run configuration."""
