"""Exhaustive and sampled countermodel search over selection-function models.

All selection tables over ``n`` states are evaluated at once: a batch is a
``uint8`` array of shape ``(M, n, 2**n)`` whose entries are bitmasks.  Proof
sets and conditions are computed with vectorized bit operations, one
schema environment at a time.  At two states there are only ``4**8 =
65536`` tables, so two-state claims are settled by full enumeration.

Any counterexample found by the batch kernels is re-derived and
re-verified with the scalar evaluators in :mod:`condhol.semantics` and
:mod:`condhol.correspondence` before it is returned.

Random sampling uses ``numpy.random.default_rng(seed)`` (PCG64); each
selection entry is drawn uniformly from the subsets of the states.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator, Union

import numpy as np

from . import correspondence as corr
from .correspondence import AxiomId, Claim, environments, recheck_witness
from .semantics import SelectionModel, satisfies, members
from .syntax import Atom, Neg, Or, And, Implies, Iff, Cond, Formula, atoms
from .modelfile import Fixture, format_set

__all__ = [
    "SearchBudget", "NoCounterexampleFound", "Counterexample", "SearchOutcome",
    "enumerate_models", "all_tables", "random_tables", "table_models", "count_models",
    "batch_proof_set", "batch_condition", "batch_claim", "batch_formula_fails",
    "find_countermodel", "verify_reported_model", "render_countermodel",
    "ENUMERATION_GUARD", "atom_names",
]

ENUMERATION_GUARD = 10_000_000
_POPCOUNT = np.array([bin(k).count("1") for k in range(256)], dtype=np.uint8)


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = 3
    exhaustive_up_to: int = 2
    random_samples: int = 64
    seed: int = 0

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be at least 1")
        if self.exhaustive_up_to > self.max_states:
            raise ValueError("exhaustive_up_to cannot exceed max_states")
        if self.random_samples < 0:
            raise ValueError("random_samples must be non-negative")


@dataclass(frozen=True)
class NoCounterexampleFound:
    """Budget exhausted.  Evidence, not a proof of validity."""
    models_checked: int
    exhaustive_up_to: int
    random_checked: int = 0
    degraded: bool = False
    elapsed: float = field(default=0.0, compare=False)

    found = False


@dataclass(frozen=True)
class Counterexample:
    model: SelectionModel
    env: dict
    state: int | None
    models_checked: int
    elapsed: float = field(default=0.0, compare=False)

    found = True


SearchOutcome = Union[NoCounterexampleFound, Counterexample]


# --------------------------------------------------------------------------
# Enumeration

def atom_names(k: int) -> list[str]:
    base = "pqrstuvw"
    return [base[j] if j < len(base) else f"p{j}" for j in range(k)]


def _state_names(n: int) -> tuple[str, ...]:
    return tuple(f"i{k + 1}" for k in range(n))


def count_models(n_states: int, n_atoms: int) -> int:
    s = 1 << n_states
    return s ** (n_states * s) * s ** n_atoms


def all_tables(n: int) -> np.ndarray:
    """Every selection table over ``n`` states, in canonical order.

    Entries ``(w, X)`` are laid out row-major; the first entry is the most
    significant digit, so table 0 selects the empty set everywhere.
    """
    s = 1 << n
    entries = n * s
    total = s ** entries
    if total > ENUMERATION_GUARD:
        raise ValueError(f"{total} selection tables over {n} states exceed the enumeration guard")
    k = np.arange(total, dtype=np.int64)
    digits = np.empty((total, entries), dtype=np.uint8)
    for pos in range(entries - 1, -1, -1):
        digits[:, pos] = k % s
        k //= s
    return digits.reshape(total, n, s)


def random_tables(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    s = 1 << n
    return rng.integers(0, s, size=(count, n, s), dtype=np.uint8)


def table_models(tables: np.ndarray, valuation=None) -> Iterator[SelectionModel]:
    n = tables.shape[1]
    for t in tables:
        yield SelectionModel(_state_names(n), tuple(tuple(int(x) for x in row) for row in t),
                             valuation or {})


def enumerate_models(n_states: int, n_atoms: int = 0,
                     guard: int = ENUMERATION_GUARD) -> Iterator[SelectionModel]:
    """Every model with ``n_states`` states and atoms ``p, q, ...``.

    Ordered by selection table, then by valuation (both ascending).
    """
    if n_states < 1:
        raise ValueError("n_states must be at least 1")
    total = count_models(n_states, n_atoms)
    if total > guard:
        raise ValueError(f"{total} models exceed the enumeration guard of {guard}")
    names = atom_names(n_atoms)
    s = 1 << n_states
    states = _state_names(n_states)
    for flat in itertools.product(range(s), repeat=n_states * s):
        sel = tuple(tuple(flat[w * s:(w + 1) * s]) for w in range(n_states))
        for vals in itertools.product(range(s), repeat=n_atoms):
            yield SelectionModel(states, sel, dict(zip(names, vals)))


# --------------------------------------------------------------------------
# Batch kernels

class _Batch:
    def __init__(self, tables: np.ndarray):
        self.tables = tables
        self.m, self.n, _ = tables.shape
        self.full = (1 << self.n) - 1
        self.rows = np.arange(self.m)

    def f(self, w: int, x):
        if isinstance(x, (int, np.integer)):
            return self.tables[:, w, int(x)]
        return self.tables[self.rows, w, x]

    def subset(self, a, b):
        return (a & (self.full ^ b)) == 0

    def broadcast(self, v):
        return np.broadcast_to(np.asarray(v, dtype=bool), (self.m,))


def batch_proof_set(batch: _Batch, f: Formula, env):
    """Proof set of ``f`` in every model of the batch (int when constant)."""
    if isinstance(f, Atom):
        return env[f.name]
    if isinstance(f, Neg):
        return batch.full ^ batch_proof_set(batch, f.arg, env)
    if isinstance(f, Cond):
        x = batch_proof_set(batch, f.antecedent, env)
        y = batch_proof_set(batch, f.consequent, env)
        out = np.zeros(batch.m, dtype=np.uint8)
        for w in range(batch.n):
            out |= batch.subset(batch.f(w, x), y).astype(np.uint8) << np.uint8(w)
        return out
    a = batch_proof_set(batch, f.left, env)
    b = batch_proof_set(batch, f.right, env)
    if isinstance(f, Or):
        return a | b
    if isinstance(f, And):
        return a & b
    if isinstance(f, Implies):
        return (batch.full ^ a) | b
    if isinstance(f, Iff):
        return batch.full ^ (a ^ b)
    raise TypeError(f"not a formula: {f!r}")


def _valid(batch, f, env):
    return batch.broadcast(batch_proof_set(batch, f, env) == batch.full)


def _in(w, x):
    return ((x >> w) & 1) == 1


_BATCH_CONDITIONS = {
    AxiomId.ID: lambda b, w, A: b.subset(b.f(w, A), A),
    AxiomId.MP: lambda b, w, A: ~b.broadcast(_in(w, A)) | _in(w, b.f(w, A)),
    AxiomId.CS: lambda b, w, A: ~b.broadcast(_in(w, A)) | b.subset(b.f(w, A), 1 << w),
    AxiomId.CEM: lambda b, w, A: _POPCOUNT[b.f(w, A)] <= 1,
    AxiomId.AC: lambda b, w, A, B: ~b.subset(b.f(w, A), B) | b.subset(b.f(w, A & B), b.f(w, A)),
    AxiomId.RT: lambda b, w, A, B: ~b.subset(b.f(w, A), B) | b.subset(b.f(w, A), b.f(w, A & B)),
    AxiomId.CV: lambda b, w, A, B, C: ~(b.subset(b.f(w, A), B) & ((b.f(w, A) & C) != 0))
                                      | b.subset(b.f(w, A & C), B),
    AxiomId.CA: lambda b, w, A, B: b.subset(b.f(w, A | B), b.f(w, A) | b.f(w, B)),
}


def batch_condition(batch: _Batch, a: AxiomId, env) -> np.ndarray:
    """Condition of ``a`` at every state, for one environment."""
    fn = _BATCH_CONDITIONS[a]
    args = [env[v] for v in corr.condition_vars(a)]
    ok = batch.broadcast(True)
    for w in range(batch.n):
        ok = ok & fn(batch, w, *args)
    return ok


def _all_axiom(batch, item, env_names):
    f = corr.axiom_schema(item) if isinstance(item, AxiomId) else item
    ok = batch.broadcast(True)
    for env in environments(env_names, batch.n):
        ok = ok & _valid(batch, f, env)
    return ok


def _all_cond(batch, a):
    ok = batch.broadcast(True)
    for env in environments(corr.condition_vars(a), batch.n):
        ok = ok & batch_condition(batch, a, env)
    return ok


def _item(batch, item, semantic):
    if semantic and isinstance(item, AxiomId):
        return _all_cond(batch, item)
    names = corr.axiom_vars(item) if isinstance(item, AxiomId) else sorted(atoms(item))
    return _all_axiom(batch, item, names)


def batch_claim(tables: np.ndarray, c: Claim) -> np.ndarray:
    """Boolean array: does ``c`` hold on each table?"""
    b = tables if isinstance(tables, _Batch) else _Batch(tables)
    if isinstance(c, corr.AllOf):
        ok = b.broadcast(True)
        for part in c.parts:
            ok = ok & batch_claim(b, part)
        return ok
    if isinstance(c, corr.RuleClosure):
        premise, conclusion = corr.rule_schema(c.rule)
        names = sorted(set(atoms(premise)) | set(atoms(conclusion)))
        ok = b.broadcast(True)
        for env in environments(names, b.n):
            ok = ok & (~_valid(b, premise, env) | _valid(b, conclusion, env))
        return ok
    if isinstance(c, (corr.CorrFwd, corr.CorrBwd)):
        ax = _item(b, c.axiom, False)
        cd = _item(b, c.axiom, True)
        return (~ax | cd) if isinstance(c, corr.CorrFwd) else (~cd | ax)
    if isinstance(c, (corr.PrimedFwd, corr.PrimedBwd)):
        f = corr.axiom_schema(c.axiom)
        ok = b.broadcast(True)
        for env in environments(corr.schema_vars(c.axiom), b.n):
            ax = _valid(b, f, env)
            cd = batch_condition(b, c.axiom, env)
            ok = ok & ((~ax | cd) if isinstance(c, corr.PrimedFwd) else (~cd | ax))
        return ok
    if isinstance(c, corr.Inclusion):
        prem = b.broadcast(True)
        for p in c.premises:
            prem = prem & _item(b, p, c.semantic)
        return ~prem | _item(b, c.conclusion, c.semantic)
    raise TypeError(f"not a claim: {c!r}")


def batch_formula_fails(tables: np.ndarray, f: Formula, valuation) -> np.ndarray:
    """Boolean array: is ``f`` invalid on each table under ``valuation``?"""
    b = _Batch(tables)
    return ~_valid(b, f, valuation)


# --------------------------------------------------------------------------
# Search

def _first_true(mask: np.ndarray):
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


def _formula_witness(f: Formula, m: SelectionModel):
    names = atoms(f)
    for env in environments(names, m.size):
        for s in range(m.size):
            if not satisfies(m, env, s, f):
                return env, s
    return None


def _search_tables(target, tables):
    """Return ``(model, env, state)`` for the first refuted table, or None."""
    n = tables.shape[1]
    if isinstance(target, (Atom, Neg, Or, And, Implies, Iff, Cond)):
        names = atoms(target)
        fails = np.zeros(tables.shape[0], dtype=bool)
        for env in environments(names, n):
            fails |= batch_formula_fails(tables, target, env)
        k = _first_true(fails)
        if k is None:
            return None
        m = next(table_models(tables[k:k + 1]))
        w = _formula_witness(target, m)
        if w is None:
            raise AssertionError("batch and scalar evaluators disagree")
        env, s = w
        # atoms of the valuation live in the model, schema variables in env
        val = {a: v for a, v in env.items() if not a[:1].isupper()}
        sch = {a: v for a, v in env.items() if a[:1].isupper()}
        return m.with_valuation(val), sch, s
    k = _first_true(~batch_claim(tables, target))
    if k is None:
        return None
    m = next(table_models(tables[k:k + 1]))
    v = corr.check_claim(target, m)
    if v.holds or not recheck_witness(target, m, v.env, v.state):
        raise AssertionError("batch and scalar claim checks disagree")
    return m, dict(v.env), v.state


def find_countermodel(target, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    """Smallest countermodel to a claim or formula within the budget.

    Sizes up to ``exhaustive_up_to`` are enumerated completely, in
    ascending size; larger sizes up to ``max_states`` get
    ``random_samples`` seeded random tables each.  Schema variables are
    always quantified over every subset.
    """
    t0 = time.perf_counter()
    checked = 0
    for n in range(1, budget.exhaustive_up_to + 1):
        tables = all_tables(n)
        hit = _search_tables(target, tables)
        if hit is not None:
            k_models = checked + tables.shape[0]
            return Counterexample(*hit, models_checked=k_models, elapsed=time.perf_counter() - t0)
        checked += tables.shape[0]
    rng = np.random.default_rng(budget.seed)
    sampled = 0
    for n in range(budget.exhaustive_up_to + 1, budget.max_states + 1):
        if budget.random_samples == 0:
            break
        tables = random_tables(n, budget.random_samples, rng)
        hit = _search_tables(target, tables)
        sampled += tables.shape[0]
        if hit is not None:
            return Counterexample(*hit, models_checked=checked + sampled,
                                  elapsed=time.perf_counter() - t0)
    return NoCounterexampleFound(checked + sampled, budget.exhaustive_up_to, sampled,
                                 elapsed=time.perf_counter() - t0)


def verify_reported_model(fx: Fixture) -> bool:
    """Is the fixture a genuine counterexample to its claim or formula?

    For claims, the claim must fail on the model and the stated witness
    (environment, and state when given) must itself refute it.
    """
    m = fx.model
    if fx.formula is not None:
        states = [m.index(fx.state)] if fx.state is not None else range(m.size)
        return any(not satisfies(m, fx.env, s, fx.formula) for s in states)
    c = corr.parse_claim(fx.claim)
    if corr.check_claim(c, m).holds:
        return False
    states = [fx.state] if fx.state is not None else list(range(m.size))
    return any(recheck_witness(c, m, fx.env, s) for s in states)


def render_countermodel(m: SelectionModel, env=None, state=None) -> str:
    """Tabular listing in the style ``w -> X -> f(w, X)``."""
    def s(mask):
        return "∅" if mask == 0 else format_set(m.names(mask))

    head = [f"D_i = {format_set(m.states)}"]
    head += [f"{k} = {s(v)}" for k, v in (env or {}).items()]
    head += [f"{k} = {s(v)}" for k, v in m.valuation.items()]
    if state is not None:
        head.append(f"W = {m.states[m.index(state)]}")
    lines = [", ".join(head), "f ="]
    width = max(len(s(x)) for x in range(1 << m.size))
    for w in range(m.size):
        for x in range(1 << m.size):
            lead = f"  {m.states[w]} ->" if x == 0 else " " * (len(m.states[w]) + 5)
            lines.append(f"{lead} {s(x):<{width}} -> {s(m.selection[w][x])}")
    return "\n".join(lines)
