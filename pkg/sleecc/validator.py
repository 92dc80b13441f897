"""Rule-set lint: modelling mistakes that parse fine but are likely unintended."""

from collections import Counter
from pathlib import Path
from typing import List, Optional

from sleecc.core.formula import atoms, is_false
from sleecc.core.parser import decode_source, parse_facts, parse_ruleset
from sleecc.core.ruleset import RuleSet
from sleecc.engine.horn import horn_eligible
from sleecc.engine.query import check_consistency
from sleecc.engine.result import Verdict
from sleecc.errors import SleecError, SleecSyntaxError
from sleecc.interop.logic_program import exportable


class ValidationResult:
    """Container for validation results."""

    def __init__(self):
        self.errors: List[str] = []
        self.warnings: List[str] = []
        self.notes: List[str] = []

    @property
    def is_valid(self) -> bool:
        return len(self.errors) == 0

    def add_error(self, msg: str):
        self.errors.append(msg)

    def add_warning(self, msg: str):
        self.warnings.append(msg)

    def add_note(self, msg: str):
        self.notes.append(msg)

    def to_dict(self) -> dict:
        return {"valid": self.is_valid, "errors": self.errors, "warnings": self.warnings, "notes": self.notes}

    def __str__(self):
        lines = []
        if self.errors:
            lines.append("ERRORS:")
            for e in self.errors:
                lines.append(f"  [ERROR] {e}")
        if self.warnings:
            lines.append("WARNINGS:")
            for w in self.warnings:
                lines.append(f"  [WARN]  {w}")
        if not self.errors and not self.warnings:
            lines.append("All checks passed.")
        for n in self.notes:
            lines.append(f"  [NOTE]  {n}")
        return "\n".join(lines)


class RuleSetValidator:
    """Validate a rule set before it is queried or exported."""

    def validate_file(self, rules_path: str, facts_path: Optional[str] = None) -> ValidationResult:
        """Read, parse and validate; unreadable files are reported as errors."""
        try:
            rules_text = decode_source(Path(rules_path).read_bytes())
            facts_text = decode_source(Path(facts_path).read_bytes()) if facts_path else None
        except (OSError, SleecSyntaxError) as e:
            result = ValidationResult()
            result.add_error(f"Failed to read rule set: {e}")
            return result
        return self.validate_text(rules_text, facts_text)

    def validate_text(self, rules_text: str, facts_text: Optional[str] = None) -> ValidationResult:
        """Parse and validate; parse failures are reported as errors."""
        result = ValidationResult()
        try:
            rs = parse_ruleset(rules_text)
            if facts_text is not None:
                rs = rs.with_facts(parse_facts(facts_text, rs))
        except SleecError as e:
            result.add_error(f"Failed to parse rule set: {e}")
            return result
        return self.validate(rs, result)

    def validate(self, rs: RuleSet, result: Optional[ValidationResult] = None) -> ValidationResult:
        result = result or ValidationResult()
        self._check_usage(rs, result)
        self._check_rules(rs, result)

        if check_consistency(rs, "sat").verdict is Verdict.INCONSISTENT:
            result.add_error("Rule set is inconsistent")

        result.add_note(
            "Horn fragment: yes" if horn_eligible(rs) else "Horn fragment: no (SAT engine will be used)"
        )
        result.add_note("Exportable to ASP/Prolog: " + ("yes" if exportable(rs) else "no"))
        return result

    def _check_usage(self, rs: RuleSet, result: ValidationResult):
        used = {a for rule in rs.rules for a in rule.atoms()} | {lit.atom for lit in rs.facts}
        for atom in rs.atoms:
            if atom not in used:
                result.add_warning(f"{rs.kind(atom)} atom {atom} is declared but never used")

    def _check_rules(self, rs: RuleSet, result: ValidationResult):
        names = Counter(rule.name for rule in rs.rules if rule.name)
        for name, count in names.items():
            if count > 1:
                result.add_warning(f"Rule name {name} is used {count} times")

        for r, rule in enumerate(rs.rules):
            label = rule.name or f"#{r + 1}"
            for i, outcome in enumerate(rule.outcomes):
                for atom in atoms(outcome):
                    if rs.is_sensed(atom):
                        result.add_warning(f"Rule {label}: sensed atom {atom} in outcome {i}")
            for i, cond in enumerate(rule.conditions):
                for atom in atoms(cond):
                    if rs.is_obligation(atom):
                        result.add_warning(f"Rule {label}: obligation atom {atom} in condition {i}")
                if is_false(cond):
                    result.add_warning(f"Rule {label}: condition {i} is false")
            repeated = [c for c, n in Counter(rule.conditions).items() if n > 1]
            for cond in repeated:
                result.add_warning(f"Rule {label}: condition {cond} is repeated")
