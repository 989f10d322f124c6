import json

import numpy as np
import pytest

from condhol import correspondence as corr
from condhol.search import SearchBudget, enumerate_models, find_countermodel, random_tables, table_models
from condhol.suite import (SUITE, build_problem, gen_problem_suite, load_manifest,
                           problem_holds_in)
from condhol.thf import parse_thf, roundtrip_typecheck

TABLE_1 = {
    "P1": "SAT", "P2_RCEA": "THM", "P2_RCK": "THM", "P2_RCEC": "THM",
    **{f"P3_{a}_{d}": "THM" for a in corr.AxiomId for d in ("bwd", "fwd")},
    "P4_IDprime_bwd": "THM", "P4_IDprime_fwd": "THM",
    "P4_MPprime_bwd": "THM", "P4_MPprime_fwd": "CSA",
    "P4_CSprime_bwd": "THM", "P4_CSprime_fwd": "CSA",
    "P4_CEMprime_bwd": "THM", "P4_CEMprime_fwd": "CSA",
    "P4_ACprime_bwd": "Unknown", "P4_ACprime_fwd": "CSA",
    "P4_RTprime_bwd": "THM", "P4_RTprime_fwd": "CSA",
    "P4_CVprime_bwd": "THM", "P4_CVprime_fwd": "THM",
    "P4_CAprime_bwd": "CSA", "P4_CAprime_fwd": "Unknown",
    "P5a_ax": "CSA", "P5a_sem": "CSA", "P5b_ax": "THM", "P5b_sem": "THM",
    "P5c_ax": "THM", "P5c_sem": "THM",
}


@pytest.fixture(scope="module")
def suite_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("suite")
    gen_problem_suite(d)
    return d


def test_row_set_matches_table(suite_dir):
    manifest = load_manifest(suite_dir)
    assert {e["name"]: e["expected"] for e in manifest} == TABLE_1
    assert len(manifest) == 42
    assert manifest[0]["name"] == "P1"


def test_manifest_examples(suite_dir):
    by_name = {e["name"]: e for e in load_manifest(suite_dir)}
    assert by_name["P4_MPprime_fwd"]["expected"] == "CSA"
    assert by_name["P2_RCEA"]["expected"] == "THM"
    assert by_name["P4_MPprime_fwd"]["claim"] == "primed-fwd:MP"


def test_every_file_round_trips(suite_dir):
    for e in load_manifest(suite_dir):
        p = roundtrip_typecheck(open(e["path"], encoding="utf-8").read())
        assert p.name == e["name"]
        assert (p.conjecture is None) == (e["name"] == "P1")


def test_byte_identical(suite_dir, tmp_path):
    gen_problem_suite(tmp_path)
    for f in sorted(suite_dir.iterdir()):
        assert (tmp_path / f.name).read_bytes() == f.read_bytes()


def test_inclusion_premises_are_axioms(suite_dir):
    p = parse_thf((suite_dir / "P5a_ax.p").read_text())
    assert [label for label, _ in p.axioms] == ["premise_1", "premise_2"]


def test_consistency_problem_has_models():
    p = build_problem(SUITE[0])
    assert all(problem_holds_in(p, m) for m in enumerate_models(1, 0))
    rng = np.random.default_rng(0)
    assert all(problem_holds_in(p, m) for m in table_models(random_tables(2, 5, rng)))


@pytest.mark.parametrize("entry", SUITE[1:], ids=lambda e: e.name)
def test_finite_evidence(entry):
    """HOL evaluation of each emitted problem agrees with the in-process checkers."""
    p = build_problem(entry)
    c = corr.parse_claim(entry.claim)
    r = find_countermodel(c, SearchBudget(2, 2, 0))
    if entry.expected == "CSA":
        assert r.found and not problem_holds_in(p, r.model)
    if entry.expected == "THM":
        assert not r.found
    for m in enumerate_models(1, 0):
        assert problem_holds_in(p, m) == corr.check_claim(c, m).holds
    rng = np.random.default_rng(len(entry.name))
    for m in table_models(random_tables(2, 4, rng)):
        assert problem_holds_in(p, m) == corr.check_claim(c, m).holds
