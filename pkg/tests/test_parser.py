import pytest

from sleecc.core.formula import Atom, Not, Or, Var, conjoin, implies, var
from sleecc.core.parser import decode_source, parse_facts, parse_formula, parse_ruleset, tokenize
from sleecc.core.ruleset import Literal, format_ruleset
from sleecc.errors import (
    ContradictoryFacts,
    DuplicateDeclaration,
    NotSensed,
    SleecSyntaxError,
    UndeclaredAtom,
)


def test_formula_precedence():
    assert parse_formula("not a and b or c -> d") == implies(
        Or(conjoin(Not(var("a")), var("b")), var("c")), var("d")
    )
    assert parse_formula("a -> b -> c") == implies(var("a"), implies(var("b"), var("c")))
    assert parse_formula("a and b and c") == conjoin(var("a"), conjoin(var("b"), var("c")))


def test_keywords_case_insensitive_atoms_not():
    assert parse_formula("NOT a AND b") == conjoin(Not(var("a")), var("b"))
    with pytest.raises(SleecSyntaxError):
        parse_formula("A")


def test_ground_atoms():
    f = parse_formula("a(user,curtains) and not d(user)")
    assert f == conjoin(Var(Atom("a", ("user", "curtains"))), Not(Var(Atom("d", ("user",)))))


def test_curtains_ruleset(curtains):
    assert [str(a) for a in curtains.sensed] == ["a", "d", "h"]
    assert [str(a) for a in curtains.obligations] == ["o", "n", "s"]
    rule = curtains.rules[0]
    assert rule.name == "r1"
    assert rule.n == 2
    assert rule.conditions == (var("a"), Not(var("d")), var("h"))
    assert rule.outcomes == (var("o"), conjoin(var("n"), var("s")), var("o"))


def test_descriptions(curtains_ground):
    n = Atom("n", ("curtains",))
    assert curtains_ground.descriptions[n] == "I have the obligation not to open curtains"


def test_canonical_print_roundtrip(curtains, curtains_ground, with_facts):
    for rs in (curtains, with_facts(curtains_ground, "a(user,curtains) not d(user)")):
        text = format_ruleset(rs)
        again = parse_ruleset(text)
        assert again == rs
        assert again.descriptions == rs.descriptions
        assert format_ruleset(again) == text


def test_syntax_error_location():
    with pytest.raises(SleecSyntaxError) as exc:
        parse_ruleset("sense a\nobligation o\nrule r: IF a THEN o UNLESS\n")
    assert (exc.value.line, exc.value.expected) == (4, "formula")
    with pytest.raises(SleecSyntaxError) as exc:
        parse_ruleset("sense a\nobligation o\nrule r: IF a o.\n")
    assert (exc.value.line, exc.value.col) == (3, 14)
    assert exc.value.expected == "THEN"


def test_missing_period():
    with pytest.raises(SleecSyntaxError) as exc:
        parse_ruleset("sense a\nobligation o\nrule: IF a THEN o\n")
    assert exc.value.expected == "UNLESS or '.'"


def test_undeclared_atom_position():
    with pytest.raises(UndeclaredAtom) as exc:
        parse_ruleset("sense a\nobligation o\nrule: IF a THEN p.\n")
    assert (exc.value.name, exc.value.line, exc.value.col) == ("p", 3, 17)


def test_duplicate_declaration():
    with pytest.raises(DuplicateDeclaration):
        parse_ruleset("sense a\nobligation a\n")


def test_facts(curtains):
    facts = parse_facts("a not d a", curtains)
    assert facts == (Literal(Atom("a")), Literal(Atom("d"), False))
    with pytest.raises(NotSensed):
        parse_facts("o", curtains)
    with pytest.raises(ContradictoryFacts):
        parse_facts("d not d", curtains)
    with pytest.raises(UndeclaredAtom):
        parse_facts("zz", curtains)


def test_comments_and_strings_tokenize():
    kinds = [t.kind for t in tokenize('sense a "desc" # comment\n')]
    assert kinds == ["kw", "ident", "string", "eof"]


def test_unbalanced_parentheses():
    with pytest.raises(SleecSyntaxError) as exc:
        parse_formula("(a and (b or c)")
    assert exc.value.expected == "')'"
    with pytest.raises(SleecSyntaxError) as exc:
        parse_formula("a)")
    assert exc.value.expected == "end of formula"
    with pytest.raises(SleecSyntaxError) as exc:
        parse_formula("not (a ->)")
    assert (exc.value.col, exc.value.expected) == (10, "formula")


def test_parentheses_override_precedence():
    assert parse_formula("not (a or b) and c") == conjoin(Not(Or(var("a"), var("b"))), var("c"))
    assert parse_formula("(a -> b) -> c") == implies(implies(var("a"), var("b")), var("c"))
    assert parse_formula("a and (b or c)") == conjoin(var("a"), Or(var("b"), var("c")))


def test_description_with_quotes_roundtrip():
    text = 'sense a "say \\"stop\\" at C:\\\\door"\nobligation o\nrule r: IF a THEN o.\n'
    rs = parse_ruleset(text)
    assert rs.descriptions[Atom("a")] == 'say "stop" at C:\\door'
    again = parse_ruleset(format_ruleset(rs))
    assert again.descriptions == rs.descriptions
    assert format_ruleset(again) == format_ruleset(rs)


def test_undecodable_byte_position():
    with pytest.raises(SleecSyntaxError) as exc:
        decode_source(b"sense a\nobligation \xff\n")
    assert (exc.value.line, exc.value.col) == (2, 12)
    assert exc.value.found == "byte 0xff"
    assert decode_source("sense caf\u00e9".encode("utf-8")) == "sense caf\u00e9"
