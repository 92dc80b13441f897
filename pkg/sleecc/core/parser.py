r"""Parser for formulas, ``.sleec`` rule sets and ``.facts`` files.

Rule-set syntax::

    sense a d h
    obligation o n(curtains) "I have the obligation not to open curtains" s
    rule r1: IF a THEN o
      UNLESS not d IN WHICH CASE n and s
      UNLESS h IN WHICH CASE o.
    fact a not d

Keywords are case-insensitive, atoms are case-sensitive, ``#`` starts a
comment. Formula precedence: ``not`` > ``and`` > ``or`` > ``->``; all binary
connectives associate to the right. Descriptions are double-quoted; ``\"`` and
``\\`` escape a quote and a backslash.
"""

import re
from typing import Dict, List, NamedTuple, Optional, Tuple

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
)
from sleecc.core.ruleset import Literal, RuleSet, SleecRule
from sleecc.errors import (
    ContradictoryFacts,
    DuplicateDeclaration,
    NotSensed,
    SleecSyntaxError,
    UndeclaredAtom,
)

KEYWORDS = {
    "not", "and", "or", "true", "false",
    "sense", "obligation", "rule", "fact",
    "if", "then", "unless", "in", "which", "case",
}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),:.])
    """,
    re.VERBOSE,
)

_ATOM_NAME = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
_ESCAPE = re.compile(r"\\(.)")


class Token(NamedTuple):
    kind: str   # "kw", "ident", "string", "->", "(", ")", ",", ":", ".", "eof"
    text: str
    line: int
    col: int

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else self.text


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise SleecSyntaxError(line, col, "a token", text[pos])
        kind = m.lastgroup
        value = m.group()
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "ident":
            if value.lower() in KEYWORDS:
                tokens.append(Token("kw", value.lower(), line, col))
            else:
                tokens.append(Token("ident", value, line, col))
        elif kind == "string":
            tokens.append(Token("string", _ESCAPE.sub(r"\1", value[1:-1]), line, col))
        elif kind == "arrow":
            tokens.append(Token("->", value, line, col))
        elif kind == "punct":
            tokens.append(Token(value, value, line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_PRECEDENCE = {"(": 0, "->": 1, "or": 2, "and": 3, "not": 4}
_BINARY = {"->": implies, "or": Or, "and": conjoin}


def _reduce(operands: List[Formula], ops: List[str]):
    op = ops.pop()
    if op == "not":
        operands[-1] = Not(operands[-1])
        return
    right = operands.pop()
    operands[-1] = _BINARY[op](operands[-1], right)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        # first source position of each atom, for UndeclaredAtom reporting
        self.uses: Dict[Atom, Tuple[int, int]] = {}

    # ── token helpers ────────────────────────────────────────────────

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at_kw(self, *words: str) -> bool:
        return self.peek.kind == "kw" and self.peek.text in words

    def expect(self, kind: str, expected: Optional[str] = None) -> Token:
        tok = self.peek
        if tok.kind != kind:
            raise SleecSyntaxError(tok.line, tok.col, expected or kind, tok.describe())
        return self.advance()

    def expect_kw(self, word: str) -> Token:
        tok = self.peek
        if not (tok.kind == "kw" and tok.text == word):
            raise SleecSyntaxError(tok.line, tok.col, word.upper(), tok.describe())
        return self.advance()

    def error(self, expected: str):
        tok = self.peek
        raise SleecSyntaxError(tok.line, tok.col, expected, tok.describe())

    # ── atoms and formulas ───────────────────────────────────────────

    def atom(self) -> Atom:
        tok = self.expect("ident", "atom")
        if not _ATOM_NAME.match(tok.text):
            raise SleecSyntaxError(tok.line, tok.col, "atom starting with a lowercase letter", tok.text)
        args: List[str] = []
        if self.peek.kind == "(":
            self.advance()
            while True:
                arg = self.expect("ident", "constant")
                if not _ATOM_NAME.match(arg.text):
                    raise SleecSyntaxError(arg.line, arg.col, "constant starting with a lowercase letter", arg.text)
                args.append(arg.text)
                if self.peek.kind == ",":
                    self.advance()
                    continue
                self.expect(")", "',' or ')'")
                break
        atom = Atom(tok.text, tuple(args))
        self.uses.setdefault(atom, (tok.line, tok.col))
        return atom

    def formula(self) -> Formula:
        """Operator-precedence parse with explicit stacks.

        Parenthesis depth is bounded by memory, not by the interpreter stack.
        """
        operands: List[Formula] = []
        ops: List[str] = []
        depth = 0
        while True:
            while True:
                if self.at_kw("not"):
                    ops.append("not")
                elif self.peek.kind == "(":
                    ops.append("(")
                    depth += 1
                else:
                    break
                self.advance()

            if self.at_kw("true"):
                self.advance()
                operands.append(TRUE)
            elif self.at_kw("false"):
                self.advance()
                operands.append(FALSE)
            elif self.peek.kind == "ident":
                operands.append(Var(self.atom()))
            else:
                self.error("formula")

            while depth > 0 and self.peek.kind == ")":
                self.advance()
                while ops[-1] != "(":
                    _reduce(operands, ops)
                ops.pop()
                depth -= 1

            op = self.binary_operator()
            if op is None:
                if depth > 0:
                    self.error("')'")
                break
            self.advance()
            while ops and _PRECEDENCE[ops[-1]] > _PRECEDENCE[op]:
                _reduce(operands, ops)
            ops.append(op)

        while ops:
            _reduce(operands, ops)
        return operands[0]

    def binary_operator(self) -> Optional[str]:
        if self.peek.kind == "->":
            return "->"
        if self.at_kw("or", "and"):
            return self.peek.text
        return None

    # ── rule sets ────────────────────────────────────────────────────

    def declarations(self, descriptions: Dict[Atom, str]) -> List[Atom]:
        decls: List[Atom] = []
        while self.peek.kind == "ident":
            atom = self.atom()
            decls.append(atom)
            if self.peek.kind == "string":
                descriptions[atom] = self.advance().text
        if not decls:
            self.error("atom")
        return decls

    def rule(self) -> SleecRule:
        name = None
        if self.peek.kind == "ident":
            name = self.advance().text
        self.expect(":", "':'")
        self.expect_kw("if")
        conditions = [self.formula()]
        self.expect_kw("then")
        outcomes = [self.formula()]
        while self.at_kw("unless"):
            self.advance()
            conditions.append(self.formula())
            self.expect_kw("in")
            self.expect_kw("which")
            self.expect_kw("case")
            outcomes.append(self.formula())
        if self.peek.kind != ".":
            self.error("UNLESS or '.'")
        self.advance()
        return SleecRule(tuple(conditions), tuple(outcomes), name)

    def literals(self) -> List[Literal]:
        lits = []
        while self.peek.kind == "ident" or self.at_kw("not"):
            positive = True
            if self.at_kw("not"):
                self.advance()
                positive = False
            lits.append(Literal(self.atom(), positive))
        return lits

    def ruleset(self) -> RuleSet:
        sensed: List[Atom] = []
        obligations: List[Atom] = []
        descriptions: Dict[Atom, str] = {}
        rules: List[SleecRule] = []
        facts: List[Literal] = []
        while self.peek.kind != "eof":
            if self.at_kw("sense"):
                self.advance()
                sensed.extend(self.declarations(descriptions))
            elif self.at_kw("obligation"):
                self.advance()
                obligations.extend(self.declarations(descriptions))
            elif self.at_kw("rule"):
                self.advance()
                rules.append(self.rule())
            elif self.at_kw("fact"):
                self.advance()
                lits = self.literals()
                if not lits:
                    self.error("literal")
                facts.extend(lits)
            else:
                self.error("SENSE, OBLIGATION, RULE or FACT")

        seen = set()
        for atom in sensed + obligations:
            if atom in seen:
                raise DuplicateDeclaration(str(atom))
            seen.add(atom)
        for atom, (line, col) in self.uses.items():
            if atom not in seen:
                raise UndeclaredAtom(str(atom), line, col)
        deduped: List[Literal] = []
        for lit in facts:
            if lit not in deduped:
                deduped.append(lit)
        return RuleSet(tuple(sensed), tuple(obligations), tuple(rules), tuple(deduped), descriptions)


def decode_source(data: bytes) -> str:
    """UTF-8 text of ``data``; an undecodable byte is a syntax error at its position."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        col = e.start - data.rfind(b"\n", 0, e.start)
        raise SleecSyntaxError(line, col, "UTF-8 text", f"byte 0x{data[e.start]:02x}") from None


def parse_formula(text: str) -> Formula:
    """Parse a formula in the canonical text syntax."""
    parser = _Parser(text)
    result = parser.formula()
    parser.expect("eof", "end of formula")
    return result


def parse_ruleset(text: str) -> RuleSet:
    """Parse ``.sleec`` text; rule and UNLESS-clause order is preserved."""
    return _Parser(text).ruleset()


def parse_facts(text: str, rs: RuleSet) -> Tuple[Literal, ...]:
    """Parse a ``.facts`` file: whitespace-separated ``atom`` / ``not atom`` literals.

    Facts must name sensed atoms of ``rs``. Repeated literals are collapsed;
    first-occurrence order is kept.
    """
    parser = _Parser(text)
    lits = parser.literals()
    parser.expect("eof", "literal")
    declared = set(rs.atoms)
    signs: Dict[Atom, bool] = {}
    out: List[Literal] = []
    for lit in lits:
        if lit.atom not in declared:
            raise UndeclaredAtom(str(lit.atom))
        if not rs.is_sensed(lit.atom):
            raise NotSensed(str(lit.atom))
        if signs.setdefault(lit.atom, lit.positive) != lit.positive:
            raise ContradictoryFacts(str(lit.atom))
        if lit not in out:
            out.append(lit)
    return tuple(out)
