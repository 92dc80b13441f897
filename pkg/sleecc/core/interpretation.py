"""Interpretations, evaluation and brute-force truth tables."""

import itertools
import operator
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from sleecc.core.formula import (
    Atom,
    Formula,
    Var,
    atoms,
    atoms_of_all,
    fold,
)
from sleecc.config import Config
from sleecc.errors import TooManyAtoms, UnknownAtom


class Interpretation:
    """Total truth assignment over a finite set of atoms.

    Immutable. The reserved atom behind ``true``/``false`` is never part of
    the domain; evaluation handles it directly.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Atom, bool]):
        self._values: Dict[Atom, bool] = {
            a: bool(v) for a, v in values.items() if not a.reserved
        }

    @classmethod
    def from_names(cls, **values: bool) -> "Interpretation":
        """Shorthand for zero-arity atoms: ``Interpretation.from_names(a=True)``."""
        return cls({Atom(name): v for name, v in values.items()})

    @property
    def domain(self) -> Tuple[Atom, ...]:
        return tuple(self._values)

    def __getitem__(self, atom: Atom) -> bool:
        try:
            return self._values[atom]
        except KeyError:
            raise UnknownAtom(str(atom)) from None

    def __contains__(self, atom: Atom) -> bool:
        return atom in self._values

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Interpretation) and self._values == other._values

    def __hash__(self) -> int:
        return hash(frozenset(self._values.items()))

    def items(self):
        return self._values.items()

    def restrict(self, domain: Sequence[Atom]) -> "Interpretation":
        return Interpretation({a: self[a] for a in domain})

    def to_dict(self) -> Dict[str, bool]:
        return {str(a): v for a, v in self._values.items()}

    def __repr__(self) -> str:
        body = ", ".join(f"{a}={'T' if v else 'F'}" for a, v in self._values.items())
        return f"Interpretation({body})"


def evaluate(f: Formula, v: Interpretation) -> bool:
    """Classical truth value of ``f`` under ``v``.

    Raises UnknownAtom when ``f`` mentions an atom outside ``v``'s domain.
    """
    def leaf(node: Var) -> bool:
        return True if node.atom.reserved else v[node.atom]

    return fold(f, leaf, operator.not_, operator.or_)


def _check_bound(count: int, max_atoms: Optional[int]):
    limit = Config().bruteforce_max_atoms if max_atoms is None else max_atoms
    if count > limit:
        raise TooManyAtoms(count, limit)


def columns(domain: Sequence[Atom]) -> Dict[Atom, np.ndarray]:
    """One boolean column per atom over all 2^n rows; first atom most significant."""
    n = len(domain)
    rows = np.arange(2 ** n, dtype=np.int64)
    return {
        a: ((rows >> (n - 1 - i)) & 1).astype(bool) for i, a in enumerate(domain)
    }


def table_of(f: Formula, cols: Mapping[Atom, np.ndarray], nrows: int) -> np.ndarray:
    """Vectorised evaluation of ``f`` given precomputed atom columns."""
    def leaf(node: Var) -> np.ndarray:
        if node.atom.reserved:
            return np.ones(nrows, dtype=bool)
        try:
            return cols[node.atom]
        except KeyError:
            raise UnknownAtom(str(node.atom)) from None

    return fold(f, leaf, np.logical_not, np.logical_or)


def truth_table(
    f: Formula,
    domain: Optional[Sequence[Atom]] = None,
    max_atoms: Optional[int] = None,
) -> np.ndarray:
    """Truth values of ``f`` on every interpretation over ``domain``."""
    domain = tuple(domain) if domain is not None else atoms(f)
    _check_bound(len(domain), max_atoms)
    return table_of(f, columns(domain), 2 ** len(domain))


def interpretation_at(domain: Sequence[Atom], row: int) -> Interpretation:
    """The interpretation of truth-table row ``row`` (see ``columns``)."""
    n = len(domain)
    return Interpretation(
        {a: bool((row >> (n - 1 - i)) & 1) for i, a in enumerate(domain)}
    )


def all_interpretations(domain: Sequence[Atom]) -> Iterator[Interpretation]:
    """All 2^n interpretations in truth-table row order."""
    for bits in itertools.product((False, True), repeat=len(domain)):
        yield Interpretation(dict(zip(domain, bits)))


def equiv_bruteforce(f: Formula, g: Formula, max_atoms: Optional[int] = None) -> bool:
    """True iff ``f`` and ``g`` agree on every interpretation of their atoms."""
    domain = atoms_of_all((f, g))
    _check_bound(len(domain), max_atoms)
    cols = columns(domain)
    nrows = 2 ** len(domain)
    return bool(np.array_equal(table_of(f, cols, nrows), table_of(g, cols, nrows)))


def models_bruteforce(
    f: Formula,
    domain: Optional[Sequence[Atom]] = None,
    max_atoms: Optional[int] = None,
) -> Iterator[Interpretation]:
    domain = tuple(domain) if domain is not None else atoms(f)
    table = truth_table(f, domain, max_atoms)
    for row in np.flatnonzero(table):
        yield interpretation_at(domain, int(row))


def satisfiable_bruteforce(
    f: Formula,
    domain: Optional[Sequence[Atom]] = None,
    max_atoms: Optional[int] = None,
) -> Optional[Interpretation]:
    """First model of ``f`` in row order, or None."""
    return next(models_bruteforce(f, domain, max_atoms), None)
