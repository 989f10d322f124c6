"""Cross-checking satisfaction against HOL evaluation of the embedding.

``satisfies(M, env, s, φ)`` must equal the value of ``⌊φ⌋ S`` with ``S``
assigned to ``s`` in the standard model induced by ``M``.  Two ways of
checking it are provided.

:func:`check_formulas` evaluates given formulas literally, one HOL
evaluation per (formula, state).

:func:`check_by_denotation` is exhaustive for every formula at once on
all models of a given size.  Both evaluators are compositional: the HOL
value of ``⌊op(φ, ψ)⌋`` depends only on the values of ``⌊φ⌋`` and
``⌊ψ⌋``, and the proof set of ``op(φ, ψ)`` only on the proof sets of
``φ`` and ``ψ``.  So if every connective agrees for every pair of
argument predicates on every selection table, agreement holds for all
formulas by induction on their structure.  Argument predicates are fed
in through schema variables ``A`` and ``B``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import hol
from .embedding import embed, model_to_interpretation
from .hol import App, Var, I
from .search import all_tables, table_models, atom_names
from .semantics import SelectionModel, satisfies
from .syntax import Atom, Neg, Or, And, Implies, Iff, Cond, Formula, atoms

__all__ = ["BridgeReport", "hol_satisfies", "check_formulas", "check_by_denotation",
           "formulas_up_to_depth", "count_formulas", "random_formula", "random_model",
           "check_random"]

_BINARY = (Or, And, Implies, Iff, Cond)


@dataclass
class BridgeReport:
    checks: int = 0
    disagreements: int = 0
    first: tuple | None = None

    def add(self, ok: bool, case) -> None:
        self.checks += 1
        if not ok:
            self.disagreements += 1
            if self.first is None:
                self.first = case

    @property
    def agreement(self) -> float:
        return 1.0 if self.checks == 0 else 1 - self.disagreements / self.checks


def _state_var(f: Formula) -> Var:
    name, used = "S", set(atoms(f))
    k = 0
    while name in used:
        k += 1
        name = f"S{k}"
    return Var(name, I)


def hol_satisfies(m: SelectionModel, env, s: int, f: Formula, h=None) -> bool:
    """Value of ``⌊f⌋ S`` with ``S`` assigned to state ``s``."""
    h = h or model_to_interpretation(m, env)
    sv = _state_var(f)
    return bool(hol.evaluate(h, {sv.name: s}, App(embed(f), sv)))


def check_formulas(formulas: Iterable[Formula], models: Iterable[SelectionModel],
                   env=None) -> BridgeReport:
    """Literal agreement for every formula, model and state."""
    rep = BridgeReport()
    formulas = list(formulas)
    compiled = [(f, _state_var(f)) for f in formulas]
    for m in models:
        h = model_to_interpretation(m, env)
        for f, sv in compiled:
            run = hol.compile_term(App(embed(f), sv), h)
            for s in range(m.size):
                rep.add(bool(run({sv.name: s})) == satisfies(m, env or {}, s, f), (m, f, s))
    return rep


def check_by_denotation(n_states: int, tables: np.ndarray | None = None) -> BridgeReport:
    """Every connective, every argument pair, every table, every state."""
    A, B = Atom("A"), Atom("B")
    shapes = [Neg(A)] + [op(A, B) for op in _BINARY]
    sv = Var("S", I)
    full = 1 << n_states
    rep = BridgeReport()
    if tables is None:
        tables = all_tables(n_states)
    # atoms: the induced constant is the characteristic predicate of h(p)
    m0 = next(table_models(tables[:1]))
    for mask in range(full):
        m = m0.with_valuation({"p": mask})
        for s in range(n_states):
            rep.add(hol_satisfies(m, {}, s, Atom("p")) == bool(mask >> s & 1), (m, "p", s))
    # clauses whose embedding does not mention f have the same denotation
    # under every selection table, so one table settles them
    static = [f for f in shapes if "f" not in hol.constants(embed(f))]
    dynamic = [f for f in shapes if f not in static]
    for k, m in enumerate(table_models(tables)):
        h = model_to_interpretation(m)
        todo = dynamic + static if k == 0 else dynamic
        runs = [(f, hol.compile_term(App(embed(f), sv), h)) for f in todo]
        preds = [h.predicate(x) for x in range(full)]
        for a, b in itertools.product(range(full), repeat=2):
            env = {"A": a, "B": b}
            assign = {"A": preds[a], "B": preds[b]}
            for f, run in runs:
                for s in range(n_states):
                    ok = bool(run({**assign, "S": s})) == satisfies(m, env, s, f)
                    rep.add(ok, (m, f, env, s))
    return rep


# --------------------------------------------------------------------------
# Formula enumeration

def formulas_up_to_depth(depth: int, names: list[str]) -> Iterator[Formula]:
    """All formulas of depth <= ``depth`` over ``names``, shallowest first."""
    levels = [[Atom(a) for a in names]]
    for f in levels[0]:
        yield f
    seen = list(levels[0])
    for d in range(1, depth + 1):
        prev = levels[-1]
        fresh = set(prev)
        new = [Neg(f) for f in prev]
        for op in _BINARY:
            for l, r in itertools.product(seen, repeat=2):
                if l in fresh or r in fresh:
                    new.append(op(l, r))
        for f in new:
            yield f
        seen += new
        levels.append(new)


def count_formulas(depth: int, n_atoms: int) -> int:
    total = n_atoms
    for _ in range(depth):
        total = n_atoms + total + len(_BINARY) * total * total
    return total


def random_formula(rng: np.random.Generator, depth: int, names: list[str]) -> Formula:
    if depth == 0 or rng.random() < 0.2:
        return Atom(names[int(rng.integers(len(names)))])
    k = int(rng.integers(len(_BINARY) + 1))
    if k == len(_BINARY):
        return Neg(random_formula(rng, depth - 1, names))
    return _BINARY[k](random_formula(rng, depth - 1, names),
                      random_formula(rng, depth - 1, names))


def random_model(rng: np.random.Generator, n: int, names: list[str]) -> SelectionModel:
    s = 1 << n
    sel = rng.integers(0, s, size=(n, s))
    val = {a: int(rng.integers(s)) for a in names}
    return SelectionModel(tuple(f"i{k + 1}" for k in range(n)),
                          tuple(tuple(int(x) for x in row) for row in sel), val)


def check_random(count: int, n_states: int, depth: int = 4, n_atoms: int = 2,
                 seed: int = 0) -> BridgeReport:
    """``count`` seeded random (model, formula, state) triples."""
    rng = np.random.default_rng(seed)
    names = atom_names(n_atoms)
    rep = BridgeReport()
    for _ in range(count):
        m = random_model(rng, n_states, names)
        f = random_formula(rng, depth, names)
        s = int(rng.integers(n_states))
        rep.add(hol_satisfies(m, {}, s, f) == satisfies(m, {}, s, f), (m, f, s))
    return rep
