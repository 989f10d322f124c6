import pytest
from hypothesis import given, strategies as st

from condhol import hol
from condhol.bridge import (check_by_denotation, check_formulas, check_random,
                            count_formulas, formulas_up_to_depth, hol_satisfies)
from condhol.embedding import (COND, PRED, SEL, embed, model_to_interpretation,
                               selection_denotation, vld_wrap)
from condhol.hol import Const, App, Var, I, O, Lam, Not, evaluate, format_term, normalize
from condhol.search import enumerate_models, all_tables
from condhol.semantics import SelectionModel, satisfies
from condhol.syntax import Atom, Cond, Neg, parse_formula
from strategies import formulas, models

M1 = SelectionModel(("i1",), ((1, 0),), {"p": 0, "q": 1})


def test_atom_embeds_as_constant():
    assert embed(Atom("p")) == Const("p", PRED)


def test_schema_atom_embeds_as_variable():
    assert embed(Atom("A")) == Var("A", PRED)


def test_reserved_name():
    with pytest.raises(ValueError):
        embed(Atom("f"))


def test_conditional_clause():
    p = Const("p", PRED)
    assert embed(Cond(Atom("p"), Atom("p"))) == App(App(COND, p), p)


def test_negation_normalizes_by_one_beta_step():
    n = normalize(embed(Neg(Atom("p"))))
    assert hol.alpha_equal(n, Lam("X", I, Not(App(Const("p", PRED), Var("X", I)))))


def test_validity_of_p_cond_p():
    n = normalize(vld_wrap(embed(parse_formula("p => p"))))
    assert format_term(n) == "(forall X1:i. (forall X2:i. ((f X1 p X2) -> (p X2))))"


def test_validity_of_atom():
    assert format_term(normalize(vld_wrap(embed(Atom("p"))))) == "(forall X1:i. (p X1))"


def test_vld_rejects_non_predicates():
    with pytest.raises(hol.HolTypeError):
        vld_wrap(Const("c", I))


def test_tautology_lifts():
    t = vld_wrap(embed(parse_formula("p | ~p")))
    for m in enumerate_models(1, 1):
        assert evaluate(model_to_interpretation(m), {}, t) is True


def test_interpretation_of_atoms_and_f():
    m = SelectionModel(("i1",), ((1, 0),), {"p": 1})
    h = model_to_interpretation(m)
    assert tuple(h.const_denotations["p"].outputs) == (True,)
    empty = h.predicate(0)
    assert h.const_denotations["f"].apply(0).apply(empty).apply(0) is True


def test_worked_countermodel_in_hol():
    m = SelectionModel(("s",), ((1, 0),), {"p": 0})
    t = vld_wrap(embed(parse_formula("p => p")))
    assert evaluate(model_to_interpretation(m), {}, t) is False
    assert evaluate(model_to_interpretation(m), {}, normalize(t)) is False


def test_big_formula_bridge_on_m1():
    f = parse_formula("((p => q) <-> (p -> q)) -> (p => p)")
    assert hol_satisfies(M1, {}, 0, f) is False
    assert hol_satisfies(M1, {}, 0, parse_formula("p => q")) is True


@given(formulas())
def test_embedding_type_soundness(f):
    assert hol.type_of(embed(f)) == PRED
    closed = set(a for a in hol.free_vars(embed(f)))
    ctx = {a: PRED for a in closed}
    assert hol.typecheck(embed(f), ctx) == PRED
    assert hol.typecheck(vld_wrap(embed(f)), ctx) == O


@given(models(max_states=3), formulas(), st.data())
def test_bridge_bridge_property(m, f, data):
    s = data.draw(st.integers(0, m.size - 1))
    env = {a: m.valuation[a] for a in ("A", "B")}
    assert hol_satisfies(m, env, s, f) == satisfies(m, env, s, f)


def test_bridge_random_three_state():
    rep = check_random(1000, 3, depth=4, seed=7)
    assert rep.checks == 1000 and rep.disagreements == 0


def test_bridge_depth_two_on_one_state_models():
    fs = list(formulas_up_to_depth(2, ["p", "q"]))
    assert len(fs) == count_formulas(2, 2) == 2906
    assert len(set(fs)) == len(fs)
    rep = check_formulas(fs, enumerate_models(1, 2))
    assert rep.disagreements == 0 and rep.checks == 2906 * 16


def test_bridge_by_denotation_one_state():
    rep = check_by_denotation(1)
    assert rep.disagreements == 0


def test_bridge_by_denotation_sampled_two_state():
    tables = all_tables(2)[::97]
    rep = check_by_denotation(2, tables)
    assert rep.disagreements == 0


def test_formula_counts():
    assert count_formulas(0, 2) == 2
    assert count_formulas(1, 2) == 24
    assert sum(1 for _ in formulas_up_to_depth(1, ["p"])) == count_formulas(1, 1)
