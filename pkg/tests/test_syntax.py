import pytest
from hypothesis import given, strategies as st

from condhol.syntax import (Atom, Neg, Or, And, Implies, Iff, Cond, FormulaSyntaxError,
                            atoms, depth, desugar, format_formula, parse_formula,
                            parse_formula_lines, subformulas)
from condhol.semantics import satisfies
from strategies import formulas, models

p, q, r = Atom("p"), Atom("q"), Atom("r")


def test_smallest_conditional():
    assert parse_formula("p => p") == Cond(p, p)


def test_nitpick_formula_shape():
    f = parse_formula("((p => q) <-> (p -> q)) -> (p => p)")
    assert f == Implies(Iff(Cond(p, q), Implies(p, q)), Cond(p, p))


def test_precedence():
    assert parse_formula("~p | q & r") == Or(Neg(p), And(q, r))
    assert parse_formula("p -> q => r") == Cond(Implies(p, q), r)
    assert parse_formula("p => q <-> r") == Iff(Cond(p, q), r)


def test_associativity():
    assert parse_formula("p => q => r") == Cond(p, Cond(q, r))
    assert parse_formula("p -> q -> r") == Implies(p, Implies(q, r))
    assert parse_formula("p | q | r") == Or(Or(p, q), r)
    assert parse_formula("p & q & r") == And(And(p, q), r)


def test_iff_chain_needs_parentheses():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("p <-> q <-> r")
    assert parse_formula("(p <-> q) <-> r") == Iff(Iff(p, q), r)


@pytest.mark.parametrize("text", ["", "p &", "(p", "p q", "p => => q", "1p", "p_ | $"])
def test_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_error_position_and_hint():
    with pytest.raises(FormulaSyntaxError) as e:
        parse_formula("p &\n  (q | )")
    assert e.value.line == 2
    assert e.value.column == 8
    assert e.value.expected


def test_illegal_atom_name():
    with pytest.raises(FormulaSyntaxError, match="illegal atom name"):
        parse_formula("_p")


def test_format_minimal_parentheses():
    assert format_formula(Cond(p, p)) == "p => p"
    assert format_formula(Or(Neg(p), q)) == "~p | q"
    assert format_formula(Cond(Cond(p, q), r)) == "(p => q) => r"
    assert format_formula(Neg(And(p, q))) == "~(p & q)"


def test_desugar_examples():
    assert desugar(And(p, q)) == Neg(Or(Neg(p), Neg(q)))
    assert desugar(Implies(p, q)) == Or(Neg(p), q)
    assert desugar(p) == p


def test_atoms_examples():
    assert atoms(parse_formula("p => (q | p)")) == ["p", "q"]
    assert atoms(p) == ["p"]


def test_batch_lines():
    text = "# header\np => p\n\n~q   # trailing comment\n"
    assert parse_formula_lines(text) == [Cond(p, p), Neg(q)]


def test_depth():
    assert depth(p) == 0
    assert depth(parse_formula("~(p => q)")) == 2


@given(formulas())
def test_round_trip(f):
    assert parse_formula(format_formula(f)) == f


@given(formulas())
def test_desugar_only_primitives(f):
    for g in subformulas(desugar(f)):
        assert isinstance(g, (Atom, Neg, Or, Cond))


@given(formulas())
def test_desugar_keeps_atoms(f):
    assert atoms(desugar(f)) == atoms(f)


def _walk(f, out):
    if isinstance(f, Atom):
        if f.name not in out:
            out.append(f.name)
        return out
    for g in (vars(f).values()):
        _walk(g, out)
    return out


@given(formulas(max_leaves=20))
def test_atoms_match_tree_walk(f):
    assert atoms(f) == _walk(f, [])


@given(models(), formulas(), st.data())
def test_desugar_preserves_satisfaction(m, f, data):
    s = data.draw(st.integers(0, m.size - 1))
    assert satisfies(m, {}, s, f) == satisfies(m, {}, s, desugar(f))
