"""The benchmark suite: one THF problem per claim of the correspondence study.

Every problem is built from the same ingredients the in-process checkers
use (axiom schemas, conditions, rule schemas), rendered as HOL with the
schema variables quantified at type ``i -> o``.  Set notation in the
conditions is encoded directly: ``a ⊆ b`` as ``∀X. a X → b X``, ``∅`` as
``λX. $false``, ``∩``/``∪`` pointwise, ``{w}`` as ``λX. X = w`` with
Leibniz equality, and equality of predicates extensionally.

Problems can also be evaluated in the finite standard model induced by a
selection-function model, which links the emitted files back to
:mod:`condhol.search` countermodels.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import correspondence as corr
from . import hol
from .correspondence import AxiomId, Claim
from .embedding import PRED, SEL, SEL_TYPE, NEG, OR, COND, VLD, embed, vld_wrap
from .hol import (I, O, Arrow, Var, Const, App, HolTerm, lam, forall, exists, implies,
                  conj, iff, FALSE, leibniz_eq, normalize, arrow)
from .semantics import SelectionModel
from .syntax import Formula, atoms
from .thf import ThfProblem, emit_thf, roundtrip_typecheck

__all__ = ["SuiteEntry", "SUITE", "hol_condition", "claim_problem", "validity_problem",
           "consistency_problem", "build_problem", "gen_problem_suite", "load_manifest",
           "problem_holds_in", "problem_interpretation"]

_W = Var("W", I)
_X = Var("X", I)


def _p(name: str) -> Var:
    return Var(name, PRED)


def _sel(w, a):
    return hol.app(SEL, w, a)


def _subset(a, b):
    return forall([("X", I)], implies(App(a, _X), App(b, _X)))


def _inter(a, b):
    return lam([("X", I)], conj(App(a, _X), App(b, _X)))


def _union(a, b):
    return lam([("X", I)], hol.disj(App(a, _X), App(b, _X)))


_EMPTY = lam([("X", I)], FALSE)


def _pred_eq(a, b):
    return forall([("X", I)], iff(App(a, _X), App(b, _X)))


def _singleton(w):
    return lam([("X", I)], leibniz_eq(_X, w, I))


def hol_condition(a: AxiomId, w: HolTerm = _W) -> HolTerm:
    """The condition of ``a`` at ``w`` with free predicate variables A, B, C."""
    A, B, C = _p("A"), _p("B"), _p("C")
    fa = _sel(w, A)
    if a is AxiomId.ID:
        return _subset(fa, A)
    if a is AxiomId.MP:
        return implies(App(A, w), App(fa, w))
    if a is AxiomId.CS:
        return implies(App(A, w), _subset(fa, _singleton(w)))
    if a is AxiomId.CEM:
        one = exists([("V", I)], _pred_eq(fa, _singleton(Var("V", I))))
        return hol.disj(_pred_eq(fa, _EMPTY), one)
    if a is AxiomId.AC:
        return implies(_subset(fa, B), _subset(_sel(w, _inter(A, B)), fa))
    if a is AxiomId.RT:
        return implies(_subset(fa, B), _subset(fa, _sel(w, _inter(A, B))))
    if a is AxiomId.CV:
        meets = exists([("X", I)], conj(App(fa, _X), App(C, _X)))
        return implies(conj(_subset(fa, B), meets), _subset(_sel(w, _inter(A, C)), B))
    if a is AxiomId.CA:
        return _subset(_sel(w, _union(A, B)), _union(fa, _sel(w, B)))
    raise ValueError(a)


def _vld(f: Formula) -> HolTerm:
    return vld_wrap(embed(f))


def _forall_preds(names, body):
    return forall([(n, PRED) for n in names], body)


def _all_axiom(item) -> HolTerm:
    f = corr.axiom_schema(item) if isinstance(item, AxiomId) else item
    return _forall_preds(sorted(atoms(f)), _vld(f))


def _all_condition(a: AxiomId) -> HolTerm:
    return _forall_preds(corr.condition_vars(a), forall([("W", I)], hol_condition(a)))


def _item(item, semantic: bool) -> HolTerm:
    if semantic and isinstance(item, AxiomId):
        return _all_condition(item)
    return _all_axiom(item)


def _rule(r: corr.Rule) -> HolTerm:
    premise, conclusion = corr.rule_schema(r)
    names = sorted(set(atoms(premise)) | set(atoms(conclusion)))
    return _forall_preds(names, implies(_vld(premise), _vld(conclusion)))


def claim_statement(c: Claim) -> tuple[list[tuple[str, HolTerm]], HolTerm]:
    """(axioms, conjecture) stating ``c`` for every standard model."""
    if isinstance(c, corr.AllOf):
        parts = [claim_statement(p) for p in c.parts]
        if any(ax for ax, _ in parts):
            raise ValueError("conjunctions of claims with axioms are not supported")
        out = parts[0][1]
        for _, t in parts[1:]:
            out = conj(out, t)
        return [], out
    if isinstance(c, corr.RuleClosure):
        return [], _rule(c.rule)
    if isinstance(c, corr.CorrFwd):
        return [], implies(_all_axiom(c.axiom), _all_condition(c.axiom))
    if isinstance(c, corr.CorrBwd):
        return [], implies(_all_condition(c.axiom), _all_axiom(c.axiom))
    if isinstance(c, (corr.PrimedFwd, corr.PrimedBwd)):
        ax = _vld(corr.axiom_schema(c.axiom))
        cd = forall([("W", I)], hol_condition(c.axiom))
        body = implies(ax, cd) if isinstance(c, corr.PrimedFwd) else implies(cd, ax)
        return [], _forall_preds(corr.schema_vars(c.axiom), body)
    if isinstance(c, corr.Inclusion):
        axioms = [(f"premise_{k + 1}", _item(p, c.semantic)) for k, p in enumerate(c.premises)]
        return axioms, _item(c.conclusion, c.semantic)
    raise TypeError(f"not a claim: {c!r}")


def _decls(terms, extra=()):
    seen = dict(extra)
    for t in terms:
        for name, ty in hol.constants(t).items():
            seen.setdefault(name, ty)
    # f first, then the rest alphabetically
    order = sorted(seen, key=lambda n: (n != "f", n))
    return [(n, seen[n]) for n in order]


def claim_problem(name: str, c: Claim, expected: str | None = None) -> ThfProblem:
    axioms, conj_ = claim_statement(c)
    axioms = [(label, normalize(t)) for label, t in axioms]
    conj_ = normalize(conj_)
    return ThfProblem(name, _decls([conj_] + [t for _, t in axioms], [("f", SEL_TYPE)]),
                      axioms, conj_, expected, f"Claim    : {corr.claim_id(c)}")


def validity_problem(f: Formula, name: str = "validity") -> ThfProblem:
    """``vld ⌊f⌋`` with schema variables universally closed."""
    schema = [a for a in atoms(f) if a[:1].isupper()]
    t = normalize(_forall_preds(schema, _vld(f)))
    return ThfProblem(name, _decls([t], [("f", SEL_TYPE)]), [], t)


_DEFINED = {
    "cnot": (NEG, arrow(PRED, PRED)),
    "cor": (OR, arrow(PRED, PRED, PRED)),
    "ccond": (COND, arrow(PRED, PRED, PRED)),
    "cvld": (VLD, arrow(PRED, O)),
}


def consistency_problem(name: str = "P1", expected: str | None = "SAT") -> ThfProblem:
    """The embedding's connectives as defined constants; no conjecture."""
    axioms = []
    for cname, (term, ty) in _DEFINED.items():
        args, t = [], ty
        while isinstance(t, Arrow):
            args.append(t.dom)
            t = t.cod
        names = ["A", "B"][:sum(1 for a in args if a == PRED)]
        if args[-1] == I:
            names.append("X")
        vs = [Var(n, a) for n, a in zip(names, args)]
        lhs = hol.app(Const(cname, ty), *vs)
        rhs = hol.app(term, *vs)
        axioms.append((f"{cname}_def", normalize(forall(list(zip(names, args)), iff(lhs, rhs)))))
    return ThfProblem(name, [("f", SEL_TYPE)] + [(c, ty) for c, (_, ty) in _DEFINED.items()],
                      axioms, None, expected, "Claim    : consistency")


# --------------------------------------------------------------------------
# The suite

@dataclass(frozen=True)
class SuiteEntry:
    name: str
    claim: str
    expected: str


def _suite() -> tuple[SuiteEntry, ...]:
    out = [SuiteEntry("P1", "consistency", "SAT")]
    out += [SuiteEntry(f"P2_{r}", f"rule:{r}", "THM") for r in ("RCEA", "RCK", "RCEC")]
    for a in AxiomId:
        for d, kind in (("bwd", "corr-bwd"), ("fwd", "corr-fwd")):
            out.append(SuiteEntry(f"P3_{a}_{d}", f"{kind}:{a}", "THM"))
    csa = {("MP", "fwd"), ("CS", "fwd"), ("CEM", "fwd"), ("AC", "fwd"), ("RT", "fwd"),
           ("CA", "bwd")}
    unknown = {("AC", "bwd"), ("CA", "fwd")}
    for a in AxiomId:
        for d, kind in (("bwd", "primed-bwd"), ("fwd", "primed-fwd")):
            key = (a.value, d)
            status = "CSA" if key in csa else "Unknown" if key in unknown else "THM"
            out.append(SuiteEntry(f"P4_{a}prime_{d}", f"{kind}:{a}", status))
    for k, status in (("5a", "CSA"), ("5b", "THM"), ("5c", "THM")):
        for mode in ("ax", "sem"):
            out.append(SuiteEntry(f"P{k}_{mode}", f"incl:{k}-{mode}", status))
    return tuple(out)


SUITE = _suite()


def build_problem(e: SuiteEntry) -> ThfProblem:
    if e.claim == "consistency":
        return consistency_problem(e.name, e.expected)
    return claim_problem(e.name, corr.parse_claim(e.claim), e.expected)


def gen_problem_suite(outdir) -> list[dict]:
    """Write ``<name>.p`` for every entry plus ``manifest.json``; return the manifest."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for e in SUITE:
        text = emit_thf(build_problem(e))
        roundtrip_typecheck(text)
        (outdir / f"{e.name}.p").write_text(text, encoding="utf-8")
        manifest.append({"name": e.name, "file": f"{e.name}.p", "expected": e.expected,
                         "claim": e.claim})
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return manifest


def load_manifest(path) -> list[dict]:
    path = Path(path)
    if path.is_dir():
        path = path / "manifest.json"
    entries = json.loads(path.read_text(encoding="utf-8"))
    for e in entries:
        e["path"] = str(path.parent / e["file"])
    return entries


# --------------------------------------------------------------------------
# Finite evaluation

def problem_interpretation(p: ThfProblem, m: SelectionModel, cap: int = hol.DEFAULT_CAP):
    """Standard model induced by ``m``; defined connectives get their definitions."""
    from .embedding import model_to_interpretation
    h = model_to_interpretation(m, cap=cap)
    for name, _ in p.role_decls:
        if name in _DEFINED:
            h.const_denotations[name] = hol.evaluate(h, {}, _DEFINED[name][0])
    return h


def problem_holds_in(p: ThfProblem, m: SelectionModel) -> bool:
    """False iff ``m`` is a countermodel: all axioms true and the conjecture false.

    Without a conjecture, true iff all axioms are true (a model).
    """
    h = problem_interpretation(p, m)
    ok = all(hol.evaluate(h, {}, t) for _, t in p.axioms)
    if p.conjecture is None:
        return ok
    return not ok or bool(hol.evaluate(h, {}, p.conjecture))
