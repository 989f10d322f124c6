import json

import pytest

from condhol.cli import FAILS, OK, USAGE, main

MODEL = """states: i1, i2
selection:
  (i1, {}) -> {}
  (i1, {i1}) -> {i1}
  (i1, {i2}) -> {i2}
  (i1, {i1, i2}) -> {i1}
  (i2, {}) -> {}
  (i2, {i1}) -> {i1}
  (i2, {i2}) -> {i2}
  (i2, {i1, i2}) -> {i2}
valuation:
  p = {i1}
  q = {i1, i2}
"""


@pytest.fixture
def model(tmp_path):
    path = tmp_path / "m.model"
    path.write_text(MODEL)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_parse(capsys):
    code, out = run(capsys, "parse", "p <-> q")
    assert code == OK and "desugared" in out


def test_eval(capsys, model):
    code, out = run(capsys, "eval", "p -> q", "--model", model)
    assert code == OK and "holds in the model" in out
    code, out = run(capsys, "eval", "p", "--model", model, "--state", "i2")
    assert code == FAILS
    code, out = run(capsys, "eval", "A -> p", "--model", model, "--env", "A={i1}")
    assert code == OK


def test_eval_unbound_atom(capsys, model):
    assert main(["eval", "r", "--model", model]) == USAGE


def test_translate(capsys):
    code, out = run(capsys, "translate", "p => p")
    assert code == OK
    assert "(! [X1: $i] : (! [X2: $i] : ((f @ X1 @ p @ X2) => (p @ X2))))" in out
    code, out = run(capsys, "translate", "--hol", "p")
    assert code == OK and "X1" in out


def test_check(capsys, model):
    code, out = run(capsys, "check", "--claim", "corr-fwd:ID", "--model", model)
    assert code == OK and "holds" in out
    code, out = run(capsys, "check", "--claim", "primed-fwd:CS", "--model", model, "--json")
    data = json.loads(out)
    assert (code == OK) == data["holds"]


@pytest.mark.parametrize("argv", [
    ["check", "--claim", "corr-fwd:XX", "--model", "m"],
    ["search"],
    ["search", "--claim", "corr-fwd:ID", "--formula", "p"],
    ["search", "--formula", "p &"],
    ["search", "--formula", "p", "--max-states", "0"],
    ["verify-fixture", "no_such_fixture"],
    ["frobnicate"],
    ["eval", "p", "--model", "/no/such/file"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == USAGE


def test_search_json_matches_text(capsys):
    code_t, text = run(capsys, "search", "--formula", "p -> (q -> p)")
    code_j, js = run(capsys, "--json", "search", "--formula", "p -> (q -> p)")
    assert code_t == code_j == OK
    assert not json.loads(js)["found"] and "not a proof" in text
    code_t, text = run(capsys, "search", "--claim", "primed-fwd:MP")
    code_j, js = run(capsys, "search", "--claim", "primed-fwd:MP", "--json")
    assert code_t == code_j == FAILS
    data = json.loads(js)
    assert data["found"] and f"W = {data['state']}" in text


def test_search_seeded(capsys):
    args = ["search", "--formula", "(p | ~p => ~(p & q)) | (p | ~p => ~(p & ~q)) | (p | ~p => p)",
            "--max-states", "3", "--exhaustive-up-to", "2", "--samples", "3000", "--json"]
    first = run(capsys, *args, "--seed", "5")
    assert first == run(capsys, *args, "--seed", "5")
    assert first[0] == FAILS and json.loads(first[1])["states"] == ["i1", "i2", "i3"]


def test_verify_fixture(capsys):
    code, out = run(capsys, "verify-fixture", "refute_mp_primed", "nitpick_rt_primed")
    assert code == OK and out.count("OK") == 2
    code, out = run(capsys, "verify-fixture", "--json")
    results = {r["fixture"].rsplit("/", 1)[-1]: r["genuine"] for r in json.loads(out)["results"]}
    assert results["refute_mp_primed.model"] and results["nitpick_rt_primed.model"]
    # the packaged 5(a) report is not a countermodel under the quantified reading
    assert results["nitpick_5a_ax.model"] is False and code == FAILS


def test_gen_suite(capsys, tmp_path):
    code, out = run(capsys, "gen-suite", "--out", str(tmp_path / "s"))
    assert code == OK and "42 problems" in out
    assert len(list((tmp_path / "s").glob("*.p"))) == 42
