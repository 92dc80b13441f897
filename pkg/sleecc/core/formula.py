"""Propositional formula AST over the primitive connectives not/or.

Conjunction, implication and the constants are desugared at construction:

    a and b  =  not (not a or not b)
    a -> b   =  not a or b
    true     =  q or not q          (q is the reserved atom ``__true``)
    false    =  not true

Formula equality is structural. Double negations are kept as written.
"""

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

_IDENT = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

RESERVED_NAME = "__true"

T = TypeVar("T")


@dataclass(frozen=True)
class Atom:
    """Ground atom: a name with an ordered list of constant arguments.

    Arguments are opaque identifiers; ``a(user,curtains)`` is a single
    propositional variable.
    """

    name: str
    args: Tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))
        if self.name == RESERVED_NAME and not self.args:
            return
        if not _IDENT.match(self.name):
            raise ValueError(f"Invalid atom name: {self.name!r}")
        for arg in self.args:
            if not _IDENT.match(arg):
                raise ValueError(f"Invalid atom argument: {arg!r}")

    @property
    def reserved(self) -> bool:
        return self.name == RESERVED_NAME

    @property
    def arity(self) -> int:
        return len(self.args)

    @classmethod
    def parse(cls, text: str) -> "Atom":
        """Build an atom from ``name`` or ``name(c1,c2)`` text."""
        text = text.strip()
        if "(" not in text:
            return cls(text)
        if not text.endswith(")"):
            raise ValueError(f"Invalid atom: {text!r}")
        name, rest = text[:-1].split("(", 1)
        args = tuple(a.strip() for a in rest.split(","))
        return cls(name.strip(), args)

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({','.join(self.args)})"


TRUE_ATOM = Atom(RESERVED_NAME)


class Formula:
    """Base class of the formula tree (Var, Not, Or)."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Var(Formula):
    atom: Atom


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        # children are hashed when built, so this stays O(1) on deep trees
        object.__setattr__(self, "_hash", hash((Not, self.operand)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((Or, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash


TRUE: Formula = Or(Var(TRUE_ATOM), Not(Var(TRUE_ATOM)))
FALSE: Formula = Not(TRUE)


def var(name: str, *args: str) -> Var:
    return Var(Atom(name, tuple(args)))


def conjoin(left: Formula, right: Formula) -> Formula:
    return Not(Or(Not(left), Not(right)))


def disjoin(left: Formula, right: Formula) -> Formula:
    return Or(left, right)


def implies(antecedent: Formula, consequent: Formula) -> Formula:
    return Or(Not(antecedent), consequent)


def conjoin_all(operands: Sequence[Formula]) -> Formula:
    """Right-associated conjunction; the empty conjunction is ``TRUE``."""
    if not operands:
        return TRUE
    result = operands[-1]
    for f in reversed(operands[:-1]):
        result = conjoin(f, result)
    return result


def disjoin_all(operands: Sequence[Formula]) -> Formula:
    """Right-associated disjunction; the empty disjunction is ``FALSE``."""
    if not operands:
        return FALSE
    result = operands[-1]
    for f in reversed(operands[:-1]):
        result = Or(f, result)
    return result


def unless(phi: Formula, psi: Formula) -> Formula:
    """``phi UNLESS psi``, read as ``not psi -> phi``."""
    return implies(Not(psi), phi)


def unless_iwc(phi: Formula, psi: Formula, chi: Formula) -> Formula:
    """``phi UNLESS psi IN WHICH CASE chi``: ``(not psi -> phi) and (psi -> chi)``."""
    return conjoin(unless(phi, psi), implies(psi, chi))


# ── Desugared-pattern recognisers ────────────────────────────────────────

def is_true(f: Formula) -> bool:
    return f == TRUE


def is_false(f: Formula) -> bool:
    return f == FALSE


def as_conjunction(f: Formula) -> Optional[Tuple[Formula, Formula]]:
    """Return ``(a, b)`` when ``f`` is the desugared form of ``a and b``."""
    if (
        isinstance(f, Not)
        and isinstance(f.operand, Or)
        and isinstance(f.operand.left, Not)
        and isinstance(f.operand.right, Not)
    ):
        return f.operand.left.operand, f.operand.right.operand
    return None


def as_implication(f: Formula) -> Optional[Tuple[Formula, Formula]]:
    """Return ``(a, b)`` when ``f`` is the desugared form of ``a -> b``."""
    if isinstance(f, Or) and isinstance(f.left, Not) and not is_true(f):
        return f.left.operand, f.right
    return None


def conjuncts(f: Formula) -> List[Formula]:
    """Flatten a (nested) conjunction into its operands, left to right."""
    out: List[Formula] = []
    stack = [f]
    while stack:
        node = stack.pop()
        pair = None if is_false(node) else as_conjunction(node)
        if pair is None:
            out.append(node)
        else:
            stack.append(pair[1])
            stack.append(pair[0])
    return out


def literal_of(f: Formula) -> Optional[Tuple[Atom, bool]]:
    """``(atom, polarity)`` when ``f`` is an atom under any number of negations."""
    positive = True
    while isinstance(f, Not):
        positive = not positive
        f = f.operand
    if isinstance(f, Var) and not f.atom.reserved:
        return f.atom, positive
    return None


# ── Traversals ───────────────────────────────────────────────────────────

def _children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, Not):
        return (f.operand,)
    if isinstance(f, Or):
        return (f.left, f.right)
    return ()


def size(f: Formula) -> int:
    """Number of constructor nodes."""
    count = 0
    stack = [f]
    while stack:
        node = stack.pop()
        count += 1
        stack.extend(_children(node))
    return count


def atoms(f: Formula) -> Tuple[Atom, ...]:
    """Atoms of ``f`` in first-occurrence order, reserved atom excluded."""
    seen = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            if not node.atom.reserved:
                seen.setdefault(node.atom, None)
        else:
            stack.extend(reversed(_children(node)))
    return tuple(seen)


def atoms_of_all(formulas: Iterable[Formula]) -> Tuple[Atom, ...]:
    seen = {}
    for f in formulas:
        for a in atoms(f):
            seen.setdefault(a, None)
    return tuple(seen)


def fold(
    f: Formula,
    on_var: Callable[[Var], T],
    on_not: Callable[[T], T],
    on_or: Callable[[T, T], T],
) -> T:
    """Bottom-up fold over ``f`` without recursion.

    Shared subtrees are visited once. Raises ``TypeError`` on a node that is
    not a formula constructor.
    """
    memo: Dict[int, T] = {}
    stack = [f]
    while stack:
        node = stack[-1]
        if id(node) in memo:
            stack.pop()
            continue
        pending = [c for c in _children(node) if id(c) not in memo]
        if pending:
            stack.extend(reversed(pending))
            continue
        stack.pop()
        if isinstance(node, Var):
            memo[id(node)] = on_var(node)
        elif isinstance(node, Not):
            memo[id(node)] = on_not(memo[id(node.operand)])
        elif isinstance(node, Or):
            memo[id(node)] = on_or(memo[id(node.left)], memo[id(node.right)])
        else:
            raise TypeError(f"not a formula: {node!r}")
    return memo[id(f)]


def simplify(f: Formula) -> Formula:
    """Remove double negations. Not applied anywhere by default."""
    return fold(
        f,
        lambda v: v,
        lambda g: g.operand if isinstance(g, Not) else Not(g),
        Or,
    )


# ── Canonical text ───────────────────────────────────────────────────────

_IMP, _OR, _AND, _NOT, _ATOM = 1, 2, 3, 4, 5


def _is_plain_or(f: Formula) -> bool:
    return isinstance(f, Or) and not is_true(f) and as_implication(f) is None


def _layout(f: Formula) -> Tuple[int, Tuple[Formula, ...]]:
    """Level of ``f`` and the operands its text is built from.

    Right-nested ``and``/``or`` chains are flattened into one operand list.
    """
    if is_true(f) or is_false(f) or isinstance(f, Var):
        return _ATOM, ()

    if as_conjunction(f) is not None:
        parts = []
        node = f
        pair = as_conjunction(node)
        while pair is not None:
            parts.append(pair[0])
            node = pair[1]
            pair = None if is_false(node) else as_conjunction(node)
        parts.append(node)
        return _AND, tuple(parts)
    if isinstance(f, Not):
        return _NOT, (f.operand,)

    pair = as_implication(f)
    if pair is not None:
        return _IMP, pair
    parts = []
    node = f
    while _is_plain_or(node):
        parts.append(node.left)
        node = node.right
    parts.append(node)
    return _OR, tuple(parts)


def _leaf_text(f: Formula) -> str:
    if is_true(f):
        return "true"
    if is_false(f):
        return "false"
    return str(f.atom)


def _wrap(rendered: Tuple[str, int], required: int) -> str:
    text, level = rendered
    return f"({text})" if level < required else text


def to_text(f: Formula) -> str:
    """Canonical text: ``not`` > ``and`` > ``or`` > ``->``, all right-associative.

    Implication consequents built from a binary connective are always
    parenthesised.
    """
    memo: Dict[int, Tuple[str, int]] = {}
    stack = [f]
    while stack:
        node = stack[-1]
        if id(node) in memo:
            stack.pop()
            continue
        level, parts = _layout(node)
        pending = [p for p in parts if id(p) not in memo]
        if pending:
            stack.extend(reversed(pending))
            continue
        stack.pop()

        done = [memo[id(p)] for p in parts]
        if level == _ATOM:
            text = _leaf_text(node)
        elif level == _NOT:
            text = "not " + _wrap(done[0], _NOT)
        elif level == _IMP:
            text = f"{_wrap(done[0], _OR)} -> {_wrap(done[1], _NOT)}"
        else:
            joiner = " and " if level == _AND else " or "
            head = [_wrap(d, level + 1) for d in done[:-1]]
            text = joiner.join(head + [_wrap(done[-1], level)])
        memo[id(node)] = (text, level)
    return memo[id(f)][0]
