"""Command-line interface for sleecc.

Exit codes: 0 success (ENTAILED, CONSISTENT), 2 semantic negative
(NOT_ENTAILED, INCONSISTENT, validation errors), 1 usage, parse or internal
error.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from sleecc.config import ENGINES, OUTPUTS, Config
from sleecc.errors import ConfigError, SleecError

logger = logging.getLogger(__name__)

COMMANDS = ("compile", "check", "entail", "obligations", "export", "encode-3cnf", "validate")
FORMATS = ("formula", "dimacs", "asp", "prolog")


class ExitCodes:
    SUCCESS = 0
    ERROR = 1
    NEGATIVE = 2


class Style:
    """ANSI styling for human output; a no-op when disabled."""

    GREEN = "\033[32m"
    RED = "\033[31m"
    RESET = "\033[0m"

    def __init__(self, enabled: bool):
        self.enabled = enabled

    def paint(self, text: str, code: str) -> str:
        return f"{code}{text}{self.RESET}" if self.enabled else text

    def verdict(self, text: str, positive: bool) -> str:
        return self.paint(text, self.GREEN if positive else self.RED)


@dataclass
class RunConfig:
    command: str
    rules: Optional[str] = None
    facts: Optional[str] = None
    query: Optional[str] = None
    engine: str = "auto"
    format: Optional[str] = None
    output: str = "human"
    emit: str = "formula"
    input: Optional[str] = None
    write: Optional[str] = None
    stats: bool = False
    closed_world: bool = False
    messages: bool = False
    compat_scaffold: bool = False
    strict: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown command: {self.command}")
        if self.engine not in ENGINES:
            raise ConfigError(f"Unknown engine: {self.engine}")
        if self.output not in OUTPUTS:
            raise ConfigError(f"Unknown output mode: {self.output}")
        if self.command == "encode-3cnf":
            if not self.input:
                raise ConfigError("encode-3cnf requires --input")
            return
        if not self.rules:
            raise ConfigError(f"{self.command} requires --rules")
        if self.command == "entail" and not self.query:
            raise ConfigError("entail requires --query")
        if self.command == "export" and self.format not in FORMATS:
            raise ConfigError(f"export requires --format ({', '.join(FORMATS)})")
        if self.command == "compile" and self.emit not in ("formula", "dimacs"):
            raise ConfigError(f"Unknown --emit value: {self.emit}")


# ── helpers ──────────────────────────────────────────────────────────────

def _read(path: str) -> str:
    from sleecc.core.parser import decode_source

    if path == "-":
        buffer = getattr(sys.stdin, "buffer", None)
        return sys.stdin.read() if buffer is None else decode_source(buffer.read())
    return decode_source(Path(path).read_bytes())


def _load_ruleset(cfg: RunConfig):
    from sleecc.core.parser import parse_facts, parse_ruleset

    rs = parse_ruleset(_read(cfg.rules))
    if cfg.facts:
        rs = rs.with_facts(parse_facts(_read(cfg.facts), rs))
    if cfg.closed_world:
        rs = rs.close_world()
    return rs


def _emit_text(cfg: RunConfig, text: str, out: TextIO, what: str):
    if cfg.write:
        Path(cfg.write).write_text(text, encoding="utf-8")
        if cfg.output == "json":
            _emit_json(out, {"command": cfg.command, "written": cfg.write})
        else:
            print(f"{what} written to: {cfg.write}", file=out)
    elif cfg.output == "json":
        _emit_json(out, {"command": cfg.command, "text": text})
    else:
        out.write(text)


def _emit_json(out: TextIO, payload: Dict[str, Any]):
    print(json.dumps(payload, indent=2), file=out)


def _print_stats(stats: Dict[str, int], out: TextIO):
    if stats:
        print("stats: " + ", ".join(f"{k}={v}" for k, v in stats.items()), file=out)


def _print_witness(label: str, witness, out: TextIO):
    print(f"{label}:", file=out)
    for atom, value in witness.items():
        print(f"  {atom} = {'true' if value else 'false'}", file=out)


def _report(cfg: RunConfig, result, out: TextIO, style: Style) -> int:
    code = ExitCodes.SUCCESS if result.verdict.positive else ExitCodes.NEGATIVE
    if cfg.output == "json":
        payload = {"command": cfg.command}
        payload.update(result.to_dict())
        _emit_json(out, payload)
        return code
    print(style.verdict(result.verdict.value, result.verdict.positive), file=out)
    if result.witness is not None:
        _print_witness("countermodel" if cfg.command == "entail" else "model", result.witness, out)
    if cfg.stats:
        print(f"engine: {result.engine}", file=out)
        _print_stats(result.stats, out)
    return code


# ── commands ─────────────────────────────────────────────────────────────

def cmd_compile(cfg: RunConfig, out: TextIO, style: Style) -> int:
    """Print the compiled formula (or its DIMACS clauses)."""
    from sleecc.compiler.lowering import compile_ruleset, ruleset_conjuncts
    from sleecc.core.formula import size, to_text
    from sleecc.engine.cnf import to_cnf_all
    from sleecc.interop.dimacs import write_dimacs

    rs = _load_ruleset(cfg)
    stats: Dict[str, int] = {"rules": len(rs.rules), "facts": len(rs.facts)}
    if cfg.emit == "dimacs":
        cs = to_cnf_all(ruleset_conjuncts(rs), rs.atoms)
        text = write_dimacs(cs)
        stats.update(variables=cs.num_vars, clauses=len(cs))
    else:
        formula = compile_ruleset(rs)
        text = to_text(formula) + "\n"
        stats["size"] = size(formula)
    if cfg.output == "json" and not cfg.write:
        _emit_json(out, {"command": "compile", cfg.emit: text.rstrip("\n"), "stats": stats})
        return ExitCodes.SUCCESS
    _emit_text(cfg, text, out, "Compiled rule set")
    if cfg.stats and cfg.output == "human":
        _print_stats(stats, out)
    return ExitCodes.SUCCESS


def cmd_check(cfg: RunConfig, out: TextIO, style: Style) -> int:
    from sleecc.engine.query import check_consistency

    rs = _load_ruleset(cfg)
    return _report(cfg, check_consistency(rs, cfg.engine), out, style)


def cmd_entail(cfg: RunConfig, out: TextIO, style: Style) -> int:
    from sleecc.core.parser import parse_formula
    from sleecc.engine.query import entails

    rs = _load_ruleset(cfg)
    query = parse_formula(cfg.query)
    return _report(cfg, entails(rs, query, cfg.engine), out, style)


def cmd_obligations(cfg: RunConfig, out: TextIO, style: Style) -> int:
    """Report OBLIGED / NOT-OBLIGED for every declared obligation atom."""
    from sleecc.engine.query import derive_obligations, select_engine
    from sleecc.engine.result import ObligationStatus
    from sleecc.errors import InconsistentRuleSet

    rs = _load_ruleset(cfg)
    engine = select_engine(rs, None, cfg.engine)
    stats: Dict[str, int] = {}
    try:
        statuses = derive_obligations(rs, cfg.engine, stats)
    except InconsistentRuleSet:
        if cfg.output == "json":
            _emit_json(out, {"command": "obligations", "verdict": "INCONSISTENT", "engine": engine, "stats": stats})
        else:
            print(style.verdict("INCONSISTENT", False), file=out)
            print("no obligations derived from an inconsistent rule set", file=out)
        return ExitCodes.NEGATIVE

    obliged = [str(atom) for atom, status in statuses if status is ObligationStatus.OBLIGED]
    if cfg.output == "json":
        _emit_json(out, {
            "command": "obligations",
            "verdict": "CONSISTENT",
            "obligations": obliged,
            "statuses": {str(atom): status.value for atom, status in statuses},
            "engine": engine,
            "stats": stats,
        })
        return ExitCodes.SUCCESS
    for atom, status in statuses:
        positive = status is ObligationStatus.OBLIGED
        print(f"{atom}: {style.verdict(status.value, positive)}", file=out)
    if cfg.stats:
        print(f"engine: {engine}", file=out)
        _print_stats(stats, out)
    return ExitCodes.SUCCESS


def cmd_export(cfg: RunConfig, out: TextIO, style: Style) -> int:
    from sleecc.compiler.lowering import compile_ruleset, ruleset_conjuncts
    from sleecc.core.formula import to_text
    from sleecc.engine.cnf import to_cnf_all
    from sleecc.interop.asp import export_asp
    from sleecc.interop.dimacs import write_dimacs
    from sleecc.interop.prolog import export_prolog

    rs = _load_ruleset(cfg)
    if cfg.format == "formula":
        text = to_text(compile_ruleset(rs)) + "\n"
    elif cfg.format == "dimacs":
        text = write_dimacs(to_cnf_all(ruleset_conjuncts(rs), rs.atoms))
    elif cfg.format == "asp":
        text = export_asp(rs, scaffold=cfg.compat_scaffold)
    else:
        text = export_prolog(rs, messages=cfg.messages, scaffold=cfg.compat_scaffold)
    _emit_text(cfg, text, out, f"{cfg.format} export")
    return ExitCodes.SUCCESS


def cmd_encode_3cnf(cfg: RunConfig, out: TextIO, style: Style) -> int:
    """DIMACS 3CNF in, ``.sleec`` rule set out."""
    from sleecc.core.ruleset import format_ruleset
    from sleecc.interop.reduction import CnfInput, encode_3cnf

    rs = encode_3cnf(CnfInput.from_dimacs(_read(cfg.input)), strict=cfg.strict)
    _emit_text(cfg, format_ruleset(rs), out, "Encoded rule set")
    return ExitCodes.SUCCESS


def cmd_validate(cfg: RunConfig, out: TextIO, style: Style) -> int:
    from sleecc.validator import RuleSetValidator

    validator = RuleSetValidator()
    facts_text = _read(cfg.facts) if cfg.facts else None
    result = validator.validate_text(_read(cfg.rules), facts_text)
    if cfg.output == "json":
        payload = {"command": "validate"}
        payload.update(result.to_dict())
        _emit_json(out, payload)
    else:
        print(result, file=out)
    return ExitCodes.SUCCESS if result.is_valid else ExitCodes.NEGATIVE


_DISPATCH = {
    "compile": cmd_compile,
    "check": cmd_check,
    "entail": cmd_entail,
    "obligations": cmd_obligations,
    "export": cmd_export,
    "encode-3cnf": cmd_encode_3cnf,
    "validate": cmd_validate,
}


def run(cfg: RunConfig, out: Optional[TextIO] = None) -> int:
    """Execute one command; library errors become exit code 1 with a message on stderr."""
    out = out or sys.stdout
    style = Style(cfg.output == "human" and Config().color and getattr(out, "isatty", lambda: False)())
    try:
        return _DISPATCH[cfg.command](cfg, out, style)
    except (SleecError, OSError) as e:
        logger.debug("command %s failed", cfg.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return ExitCodes.ERROR
    except RecursionError:
        logger.debug("command %s exceeded the recursion limit", cfg.command, exc_info=True)
        print("error: formula nesting too deep", file=sys.stderr)
        return ExitCodes.ERROR


# ── argument parsing ─────────────────────────────────────────────────────

class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with code 1, not argparse's 2 (2 means a semantic negative)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(ExitCodes.ERROR)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=OUTPUTS, help="Report format (default from config)")
    common.add_argument("--stats", action="store_true", help="Print engine statistics")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    common.add_argument("--config", help="Configuration file")

    rules = argparse.ArgumentParser(add_help=False)
    rules.add_argument("-r", "--rules", required=True, help="Rule set (.sleec), '-' for stdin")
    rules.add_argument("-f", "--facts", help="Fact literals (.facts)")

    engine = argparse.ArgumentParser(add_help=False)
    engine.add_argument("--engine", choices=ENGINES, help="Reasoning engine (default from config)")

    parser = _ArgumentParser(
        prog="sleecc",
        description="sleecc - SLEEC rule compiler and reasoner",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    comp = subparsers.add_parser("compile", parents=[common, rules], help="Compile a rule set")
    comp.add_argument("--emit", choices=("formula", "dimacs"), default="formula")
    comp.add_argument("-w", "--write", help="Output file")

    subparsers.add_parser("check", parents=[common, rules, engine], help="Check consistency")

    ent = subparsers.add_parser("entail", parents=[common, rules, engine], help="Decide entailment of a query")
    ent.add_argument("-q", "--query", required=True, help="Query formula")
    ent.add_argument("--closed-world", action="store_true", help="Unmentioned sensed atoms are false")

    obl = subparsers.add_parser("obligations", parents=[common, rules, engine], help="Derive obligations")
    obl.add_argument("--closed-world", action="store_true", help="Unmentioned sensed atoms are false")

    exp = subparsers.add_parser("export", parents=[common, rules], help="Export to another format")
    exp.add_argument("--format", required=True, choices=FORMATS)
    exp.add_argument("--messages", action="store_true", help="Prolog: add write goals to rule bodies")
    exp.add_argument("--compat-scaffold", action="store_true",
                     help="Define body predicates that no rule or fact defines")
    exp.add_argument("-w", "--write", help="Output file")

    enc = subparsers.add_parser("encode-3cnf", parents=[common], help="Encode a DIMACS 3CNF as a rule set")
    enc.add_argument("-i", "--input", required=True, help="DIMACS file, '-' for stdin")
    enc.add_argument("--strict", action="store_true", help="Declare outcome variables as obligations")
    enc.add_argument("-w", "--write", help="Output file")

    subparsers.add_parser("validate", parents=[common, rules], help="Lint a rule set")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    settings = Config()
    return RunConfig(
        command=args.command,
        rules=getattr(args, "rules", None),
        facts=getattr(args, "facts", None),
        query=getattr(args, "query", None),
        engine=getattr(args, "engine", None) or settings.engine,
        format=getattr(args, "format", None),
        output=args.output or settings.output,
        emit=getattr(args, "emit", "formula"),
        input=getattr(args, "input", None),
        write=getattr(args, "write", None),
        stats=args.stats,
        closed_world=getattr(args, "closed_world", False),
        messages=getattr(args, "messages", False),
        compat_scaffold=getattr(args, "compat_scaffold", False),
        strict=getattr(args, "strict", False),
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return ExitCodes.SUCCESS

    try:
        if args.config:
            if not Path(args.config).is_file():
                raise ConfigError(f"config file not found: {args.config}")
            Config(args.config)
        level = logging.DEBUG if args.verbose else getattr(logging, Config().log_level, logging.WARNING)
        logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
        cfg = config_from_args(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCodes.ERROR
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
