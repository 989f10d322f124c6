"""Finite selection-function models and the satisfaction relation.

Sets of states are bitmasks: bit ``k`` stands for ``model.states[k]``.  The
selection function is a dense table, ``model.selection[w][X]`` being the
mask selected at state ``w`` for the subset with mask ``X``.

This evaluator follows the recursive clauses literally and is used as the
ground truth that the batched search code and the HOL evaluator are
checked against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .syntax import Atom, Neg, Or, And, Implies, Iff, Cond, Formula

__all__ = [
    "SelectionModel", "Environment", "UnboundAtomError",
    "satisfies", "proof_set", "valid_in_model", "failing_states",
    "mask_of", "members", "constant_selection",
]

Environment = Mapping[str, int]
State = Union[int, str]


class UnboundAtomError(KeyError):
    """An atom is bound neither by the environment nor by the valuation."""


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for k in indices:
        m |= 1 << k
    return m


def members(mask: int) -> list[int]:
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


@dataclass(frozen=True)
class SelectionModel:
    """A finite model ``<S, f, h>``.

    ``selection`` has one row per state and ``2**n`` entries per row;
    ``valuation`` maps atom names to masks.
    """

    states: tuple[str, ...]
    selection: tuple[tuple[int, ...], ...]
    valuation: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "selection", tuple(tuple(int(x) for x in row) for row in self.selection))
        object.__setattr__(self, "valuation", dict(self.valuation))
        n = len(self.states)
        if n < 1:
            raise ValueError("a model needs at least one state")
        if len(set(self.states)) != n:
            raise ValueError("duplicate state identifiers")
        full = (1 << n) - 1
        if len(self.selection) != n or any(len(row) != 1 << n for row in self.selection):
            raise ValueError(f"selection table must have {n} rows of {1 << n} entries")
        for row in self.selection:
            for out in row:
                if out & ~full:
                    raise ValueError(f"selected set {out:#b} is not a subset of the states")
        for name, m in self.valuation.items():
            if m & ~full or m < 0:
                raise ValueError(f"valuation of {name!r} is not a subset of the states")

    def __hash__(self):
        return hash((self.states, self.selection, tuple(sorted(self.valuation.items()))))

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def full(self) -> int:
        return (1 << len(self.states)) - 1

    def index(self, s: State) -> int:
        if isinstance(s, str):
            try:
                return self.states.index(s)
            except ValueError:
                raise ValueError(f"unknown state {s!r}") from None
        if not 0 <= s < len(self.states):
            raise ValueError(f"state index {s} out of range")
        return s

    def select(self, w: State, subset: int) -> int:
        return self.selection[self.index(w)][subset]

    def subset(self, names: Iterable[State]) -> int:
        return mask_of(self.index(s) for s in names)

    def names(self, mask: int) -> list[str]:
        return [self.states[k] for k in members(mask)]

    def with_valuation(self, valuation: Mapping[str, int]) -> "SelectionModel":
        return SelectionModel(self.states, self.selection, valuation)


def constant_selection(states: Sequence[str], value: int = 0) -> SelectionModel:
    n = len(states)
    return SelectionModel(tuple(states), tuple((value,) * (1 << n) for _ in range(n)))


def _lookup(m: SelectionModel, env: Environment, name: str) -> int:
    if name in env:
        return env[name]
    if name in m.valuation:
        return m.valuation[name]
    raise UnboundAtomError(name)


def satisfies(m: SelectionModel, env: Environment, s: State, f: Formula) -> bool:
    """``M, s |= f`` with atoms resolved through ``env`` first, then ``h``."""
    s = m.index(s)
    if isinstance(f, Atom):
        return bool(_lookup(m, env, f.name) >> s & 1)
    if isinstance(f, Neg):
        return not satisfies(m, env, s, f.arg)
    if isinstance(f, Or):
        return satisfies(m, env, s, f.left) or satisfies(m, env, s, f.right)
    if isinstance(f, And):
        return satisfies(m, env, s, f.left) and satisfies(m, env, s, f.right)
    if isinstance(f, Implies):
        return not satisfies(m, env, s, f.left) or satisfies(m, env, s, f.right)
    if isinstance(f, Iff):
        return satisfies(m, env, s, f.left) == satisfies(m, env, s, f.right)
    if isinstance(f, Cond):
        selected = m.selection[s][proof_set(m, env, f.antecedent)]
        return all(satisfies(m, env, t, f.consequent) for t in members(selected))
    raise TypeError(f"not a formula: {f!r}")


def proof_set(m: SelectionModel, env: Environment, f: Formula) -> int:
    """The mask of states where ``f`` holds."""
    return mask_of(s for s in range(m.size) if satisfies(m, env, s, f))


def valid_in_model(m: SelectionModel, env: Environment, f: Formula) -> bool:
    return all(satisfies(m, env, s, f) for s in range(m.size))


def failing_states(m: SelectionModel, env: Environment, f: Formula) -> list[int]:
    return [s for s in range(m.size) if not satisfies(m, env, s, f)]
