import pytest
from hypothesis import given

from condhol.cli import fixture_path, packaged_fixtures
from condhol.modelfile import (Fixture, ModelFormatError, format_fixture, format_model,
                               load_fixture, parse_fixture, parse_model)
from condhol.syntax import parse_formula
from strategies import models

REFUTE_TEXT = """\
# one state, nothing selected
states: i1
selection:
  (i1, {}) -> {}
  (i1, {i1}) -> ∅
claim: primed-fwd:MP
environment:
  A = {i1}
  B = {i1}
state: i1
"""


def test_parse_fixture():
    fx = parse_fixture(REFUTE_TEXT)
    assert fx.model.selection == ((0, 0),)
    assert fx.env == {"A": 1, "B": 1}
    assert fx.state == "i1" and fx.claim == "primed-fwd:MP"
    assert fx.comment == "one state, nothing selected"


def test_packaged_fixtures_parse():
    names = sorted(p.name for p in packaged_fixtures())
    assert names == ["nitpick_5a_ax.model", "nitpick_rt_primed.model", "refute_mp_primed.model"]
    for p in packaged_fixtures():
        load_fixture(p)


def test_printed_rt_table():
    m = load_fixture(fixture_path("nitpick_rt_primed")).model
    # i1: {} -> {}, {i1} -> {}, {i2} -> {i2}, {i1,i2} -> {}
    # i2: {} -> {i2}, {i1} -> {}, {i2} -> {i1}, {i1,i2} -> {}
    assert m.selection == ((0, 0, 2, 0), (2, 0, 1, 0))


def test_printed_5a_table():
    m = load_fixture(fixture_path("nitpick_5a_ax")).model
    assert m.selection == ((0, 1, 0, 0), (3, 0, 2, 2))


@given(models())
def test_model_round_trip(m):
    assert parse_model(format_model(m)) == m


def test_fixture_round_trip():
    fx = parse_fixture(REFUTE_TEXT)
    assert parse_fixture(format_fixture(fx)) == fx
    fx2 = Fixture(fx.model, {}, None, None, parse_formula("p => p"))
    fx2.model = fx.model.with_valuation({"p": 0})
    assert parse_fixture(format_fixture(fx2)).formula == fx2.formula


@pytest.mark.parametrize("text, match", [
    ("selection:\n  (i1, {}) -> {}\n", "missing 'states'"),
    ("states: i1\n", "missing 'selection'"),
    ("states: i1\nselection:\n  (i1, {}) -> {}\n", "not total"),
    ("states: i1\nselection:\n  (i1, {}) -> {}\n  (i1, {}) -> {}\n", "twice"),
    ("states: i1\nselection:\n  (i2, {}) -> {}\n", "unknown state"),
    ("states: i1 i1\nselection:\n", "duplicate state"),
    ("states: i1\nbogus: 3\n", "expected one of"),
    ("states: i1\nselection:\n  i1 {} {}\n", "expected"),
])
def test_malformed(text, match):
    with pytest.raises(ModelFormatError, match=match):
        parse_model(text)


def test_fixture_needs_exactly_one_target():
    base = "states: i1\nselection:\n  (i1, {}) -> {}\n  (i1, {i1}) -> {}\n"
    with pytest.raises(ModelFormatError):
        parse_fixture(base)
    with pytest.raises(ModelFormatError):
        parse_fixture(base + "claim: corr-fwd:ID\nformula: p\n")


def test_error_line_number():
    with pytest.raises(ModelFormatError) as e:
        parse_model("states: i1\nselection:\n  (i1, {zz}) -> {}\n")
    assert e.value.line == 3
