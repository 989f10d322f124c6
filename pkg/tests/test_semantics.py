import pytest
from hypothesis import given, strategies as st

from condhol.semantics import (SelectionModel, UnboundAtomError, constant_selection,
                               failing_states, proof_set, satisfies, valid_in_model)
from condhol.syntax import Atom, Cond, Neg, And, parse_formula, desugar
from strategies import formulas, models

# f(i1, {}) = {i1}, f(i1, {i1}) = {}
M1 = SelectionModel(("i1",), ((1, 0),), {"p": 0, "q": 1})
BIG = parse_formula("((p => q) <-> (p -> q)) -> (p => p)")


def test_m1_refutes_the_big_formula():
    assert not satisfies(M1, {}, "i1", BIG)
    assert not valid_in_model(M1, {}, BIG)


def test_m1_satisfies_p_cond_q():
    assert satisfies(M1, {}, 0, parse_formula("p => q"))
    assert proof_set(M1, {}, parse_formula("p => q")) == 1


def test_m1_proof_sets():
    assert proof_set(M1, {}, Atom("p")) == 0
    assert proof_set(M1, {}, parse_formula("p | ~p")) == 1


def test_p_cond_p_fails_on_one_state():
    m = SelectionModel(("s",), ((1, 0),), {"p": 0})
    assert not valid_in_model(m, {}, parse_formula("p => p"))
    assert failing_states(m, {}, parse_formula("p => p")) == [0]


def test_vacuous_conditional():
    m = constant_selection(("i1", "i2"), 0).with_valuation({"p": 1, "q": 0})
    for s in range(2):
        assert satisfies(m, {}, s, parse_formula("p => q"))
        assert satisfies(m, {}, s, parse_formula("~q => q"))


def test_material_implication_valid():
    assert valid_in_model(M1, {}, parse_formula("p -> p"))


def test_environment_overrides_valuation():
    assert satisfies(M1, {"p": 1}, 0, Atom("p"))
    assert not satisfies(M1, {}, 0, Atom("p"))


def test_unbound_atom():
    with pytest.raises(UnboundAtomError):
        satisfies(M1, {}, 0, Atom("zz"))


def test_state_out_of_range():
    with pytest.raises(ValueError):
        satisfies(M1, {}, 3, Atom("p"))
    with pytest.raises(ValueError):
        satisfies(M1, {}, "i9", Atom("p"))


@pytest.mark.parametrize("kwargs", [
    dict(states=(), selection=()),
    dict(states=("a", "a"), selection=((0,) * 4,) * 2),
    dict(states=("a",), selection=((0, 0, 0),)),
    dict(states=("a",), selection=((0, 2),)),
    dict(states=("a",), selection=((0, 0),), valuation={"p": 2}),
])
def test_model_validation(kwargs):
    with pytest.raises(ValueError):
        SelectionModel(**kwargs)


@given(models(), formulas())
def test_proof_set_matches_state_loop(m, f):
    expected = sum(1 << s for s in range(m.size) if satisfies(m, {}, s, f))
    assert proof_set(m, {}, f) == expected


@given(models(), formulas(), formulas())
def test_conjunction_and_negation(m, f, g):
    assert proof_set(m, {}, And(f, g)) == proof_set(m, {}, f) & proof_set(m, {}, g)
    assert proof_set(m, {}, Neg(f)) == m.full ^ proof_set(m, {}, f)


def _equivalent_variants(f):
    return [desugar(f), Neg(Neg(f)), And(f, f), And(f, parse_formula("q | ~q"))]


@given(models(), formulas(), formulas(), st.data())
def test_normality(m, f, g, data):
    """Antecedents with equal proof sets select the same states."""
    s = data.draw(st.integers(0, m.size - 1))
    for f2 in _equivalent_variants(f):
        assert proof_set(m, {}, f2) == proof_set(m, {}, f)
        assert satisfies(m, {}, s, Cond(f, g)) == satisfies(m, {}, s, Cond(f2, g))
    # unrelated formula that happens to share the proof set
    h = data.draw(formulas())
    if proof_set(m, {}, h) == proof_set(m, {}, f):
        assert satisfies(m, {}, s, Cond(f, g)) == satisfies(m, {}, s, Cond(h, g))
