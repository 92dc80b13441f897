import random
from pathlib import Path

import pytest

from sleecc.config import Config
from sleecc.core.formula import (
    FALSE,
    TRUE,
    Atom,
    Not,
    Or,
    Var,
    conjoin,
    implies,
    unless,
    unless_iwc,
)
from sleecc.core.parser import parse_facts, parse_ruleset
from sleecc.core.ruleset import Literal, RuleSet, SleecRule

ROOT = Path(__file__).parent.parent
SAMPLES = ROOT / "samples"
DATA = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def shipped_config(monkeypatch):
    """Every test starts from the repository's config.yaml."""
    monkeypatch.delenv("SLEECC_NO_COLOR", raising=False)
    Config(str(ROOT / "config.yaml"))
    yield


@pytest.fixture
def samples_dir() -> Path:
    return SAMPLES


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def curtains() -> RuleSet:
    return parse_ruleset((SAMPLES / "curtains.sleec").read_text(encoding="utf-8"))


@pytest.fixture
def curtains_ground() -> RuleSet:
    return parse_ruleset((SAMPLES / "curtains_ground.sleec").read_text(encoding="utf-8"))


@pytest.fixture
def with_facts():
    """``with_facts(rs, "a not d")`` returns rs plus the parsed fact literals."""

    def apply(rs: RuleSet, text: str) -> RuleSet:
        return rs.with_facts(parse_facts(text, rs))

    return apply


# ── seeded generators ────────────────────────────────────────────────────

def atoms_named(prefix: str, n: int):
    return [Atom(f"{prefix}{i}") for i in range(n)]


def random_formula(rng: random.Random, pool, depth: int = 3):
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.04:
            return TRUE
        if roll < 0.08:
            return FALSE
        return Var(rng.choice(pool))
    op = rng.randrange(6)
    a = random_formula(rng, pool, depth - 1)
    if op == 0:
        return Not(a)
    b = random_formula(rng, pool, depth - 1)
    if op == 1:
        return Or(a, b)
    if op == 2:
        return conjoin(a, b)
    if op == 3:
        return implies(a, b)
    if op == 4:
        return unless(a, b)
    return unless_iwc(a, b, random_formula(rng, pool, depth - 1))


def random_rule(rng: random.Random, pool, max_unless: int = 4, depth: int = 2) -> SleecRule:
    n = rng.randint(0, max_unless)
    conds = tuple(random_formula(rng, pool, depth) for _ in range(n + 1))
    outs = tuple(random_formula(rng, pool, depth) for _ in range(n + 1))
    return SleecRule(conds, outs)


def random_horn_ruleset(rng: random.Random, max_atoms: int = 30, max_rules: int = 5, max_unless: int = 3) -> RuleSet:
    """Rules with negated sensed conditions and obligation outcomes, plus random facts."""
    n_sensed = rng.randint(1, max_atoms // 2)
    n_obl = rng.randint(1, max_atoms - n_sensed)
    sensed = atoms_named("p", n_sensed)
    obligations = atoms_named("q", n_obl)
    rules = []
    for r in range(rng.randint(0, max_rules)):
        n = rng.randint(0, max_unless)
        conds = tuple(Not(Var(rng.choice(sensed))) for _ in range(n + 1))
        outs = tuple(Var(rng.choice(obligations)) for _ in range(n + 1))
        rules.append(SleecRule(conds, outs, f"r{r}"))
    facts = [Literal(a, rng.random() < 0.5) for a in rng.sample(sensed, rng.randint(0, n_sensed))]
    return RuleSet(tuple(sensed), tuple(obligations), tuple(rules), tuple(facts))


def random_3cnf(rng: random.Random, max_vars: int = 14, max_clauses: int = 60):
    n_vars = rng.randint(1, max_vars)
    n_clauses = rng.randint(1, max_clauses)
    return [
        [rng.randint(1, n_vars) * rng.choice((1, -1)) for _ in range(3)]
        for _ in range(n_clauses)
    ]


@pytest.fixture
def gen():
    """Namespace of the seeded random generators above."""

    class Generators:
        formula = staticmethod(random_formula)
        rule = staticmethod(random_rule)
        horn_ruleset = staticmethod(random_horn_ruleset)
        cnf3 = staticmethod(random_3cnf)
        atoms = staticmethod(atoms_named)

    return Generators
