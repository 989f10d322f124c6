"""Translation of conditional formulas into HOL predicates over states.

A formula becomes a term of type ``i -> o``.  Propositional letters become
constants ``p : i -> o``; schema variables (uppercase atoms) become HOL
variables of the same type so that they can be quantified.  The selection
function is the constant ``f : i -> (i -> o) -> i -> o``.
"""
from __future__ import annotations

from . import hol
from .hol import (I, O, Arrow, Const, Var, Lam, App, Not, Or, Pi, HolTerm,
                  HolInterpretation, arrow, implies, forall)
from .semantics import SelectionModel, Environment
from . import syntax as cl

__all__ = [
    "PRED", "SEL_TYPE", "SEL", "NEG", "OR", "COND", "VLD", "embed", "embed_atom",
    "vld_wrap", "model_to_interpretation", "selection_denotation", "RESERVED",
]

PRED = Arrow(I, O)
SEL_TYPE = arrow(I, PRED, I, O)
SEL = Const("f", SEL_TYPE)
RESERVED = frozenset({"f"})

_A, _B = Var("A", PRED), Var("B", PRED)
_X, _W, _S = Var("X", I), Var("W", I), Var("S", I)

NEG = Lam("A", PRED, Lam("X", I, Not(App(_A, _X))))
OR = Lam("A", PRED, Lam("B", PRED, Lam("X", I, Or(App(_A, _X), App(_B, _X)))))
COND = Lam("A", PRED, Lam("B", PRED, Lam("X", I,
           forall([("W", I)], implies(hol.app(SEL, _X, _A, _W), App(_B, _W))))))
VLD = Lam("A", PRED, forall([("S", I)], App(_A, _S)))


def embed_atom(a: cl.Atom) -> HolTerm:
    if a.schema:
        return Var(a.name, PRED)
    if a.name in RESERVED:
        raise ValueError(f"atom name {a.name!r} clashes with the selection constant")
    return Const(a.name, PRED)


def embed(f: cl.Formula) -> HolTerm:
    """The (unnormalized) HOL predicate of a conditional formula."""
    if isinstance(f, cl.Atom):
        return embed_atom(f)
    if isinstance(f, cl.Neg):
        return App(NEG, embed(f.arg))
    if isinstance(f, cl.Or):
        return hol.app(OR, embed(f.left), embed(f.right))
    if isinstance(f, cl.Cond):
        return hol.app(COND, embed(f.antecedent), embed(f.consequent))
    # derived connectives go through their abbreviations, one level at a time
    a, b = f.left, f.right
    if isinstance(f, cl.And):
        return embed(cl.Neg(cl.Or(cl.Neg(a), cl.Neg(b))))
    if isinstance(f, cl.Implies):
        return embed(cl.Or(cl.Neg(a), b))
    if isinstance(f, cl.Iff):
        return embed(cl.And(cl.Implies(a, b), cl.Implies(b, a)))
    raise TypeError(f"not a formula: {f!r}")


def vld_wrap(t: HolTerm) -> HolTerm:
    """``vld t``, i.e. ``t`` holds at every state."""
    ty = hol.type_of(t)
    if ty != PRED:
        raise hol.HolTypeError(f"vld expects a predicate on states, got {ty}")
    return App(VLD, t)


def selection_denotation(h: HolInterpretation, m: SelectionModel):
    """``I(f)(s)(q)(t) = T`` iff ``t`` is selected at ``s`` for the set ``q``."""
    def rel(s, q, t):
        mask = sum(1 << k for k, b in enumerate(q.outputs) if b)
        return bool(m.selection[s][mask] >> t & 1)
    return h.tabulate(SEL_TYPE, rel)


def model_to_interpretation(m: SelectionModel, env: Environment | None = None,
                            cap: int = hol.DEFAULT_CAP) -> HolInterpretation:
    """The standard model induced by a selection-function model.

    Atoms of the valuation become constants; environment entries become
    default bindings for the schema variables of the same name.
    """
    h = HolInterpretation(m.states, cap=cap)
    h.const_denotations = {name: h.predicate(mask) for name, mask in m.valuation.items()}
    h.const_denotations["f"] = selection_denotation(h, m)
    h.bindings = {name: h.predicate(mask) for name, mask in (env or {}).items()}
    return h
