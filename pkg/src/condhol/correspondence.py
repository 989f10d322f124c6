"""Axiom/condition catalog, rule schemas, and claims checked on one model.

Schema variables ``A, B, C`` range over *all* subsets of a model's states.
Conditions are written with Python sets, literally as in the catalog
table, and deliberately share no code with the bitmask kernels in
:mod:`condhol.search`.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Union

from .semantics import (SelectionModel, Environment, satisfies, valid_in_model, failing_states,
                        mask_of, members)
from .syntax import Formula, parse_formula, atoms, conj, Atom, Iff, Implies, Cond

__all__ = [
    "AxiomId", "axiom_schema", "axiom_vars", "condition_vars", "schema_vars", "condition_holds",
    "Rule", "RCEA", "RCEC", "RCK", "rule_schema",
    "RuleClosure", "CorrFwd", "CorrBwd", "PrimedFwd", "PrimedBwd", "Inclusion", "AllOf",
    "Claim", "Verdict", "check_claim", "recheck_witness", "environments",
    "parse_claim", "claim_id", "INCLUSIONS", "P5C_CONCLUSION", "ALL_CLAIM_IDS",
]


class AxiomId(enum.Enum):
    ID = "ID"
    MP = "MP"
    CS = "CS"
    CEM = "CEM"
    AC = "AC"
    RT = "RT"
    CV = "CV"
    CA = "CA"

    def __str__(self):
        return self.value


_AXIOMS = {
    AxiomId.ID: "A => A",
    AxiomId.MP: "(A => B) -> (A -> B)",
    AxiomId.CS: "A & B -> (A => B)",
    AxiomId.CEM: "(A => B) | (A => ~B)",
    AxiomId.AC: "(A => B) & (A => C) -> (A & C => B)",
    AxiomId.RT: "(A & B => C) -> ((A => B) -> (A => C))",
    AxiomId.CV: "(A => B) & ~(A => ~C) -> (A & C => B)",
    AxiomId.CA: "(A => B) & (C => B) -> (A | C => B)",
}


def axiom_schema(a: AxiomId) -> Formula:
    return parse_formula(_AXIOMS[a])


# Each condition gets the selection function as ``f(w, X) -> set`` plus the
# state w and the sets bound to A, B, C.  Variable names follow the table
# verbatim (AC and CA mention B where their axioms mention C).
_Cond = Callable[..., bool]

_CONDITIONS: dict[AxiomId, tuple[tuple[str, ...], _Cond]] = {
    AxiomId.ID: (("A",), lambda f, w, A: f(w, A) <= A),
    AxiomId.MP: (("A",), lambda f, w, A: w not in A or w in f(w, A)),
    AxiomId.CS: (("A",), lambda f, w, A: w not in A or f(w, A) <= {w}),
    AxiomId.CEM: (("A",), lambda f, w, A: len(f(w, A)) <= 1),
    AxiomId.AC: (("A", "B"), lambda f, w, A, B: not f(w, A) <= B or f(w, A & B) <= f(w, A)),
    AxiomId.RT: (("A", "B"), lambda f, w, A, B: not f(w, A) <= B or f(w, A) <= f(w, A & B)),
    AxiomId.CV: (("A", "B", "C"),
                 lambda f, w, A, B, C: not (f(w, A) <= B and f(w, A) & C) or f(w, A & C) <= B),
    AxiomId.CA: (("A", "B"), lambda f, w, A, B: f(w, A | B) <= f(w, A) | f(w, B)),
}


def axiom_vars(a: AxiomId) -> tuple[str, ...]:
    return tuple(sorted(atoms(axiom_schema(a))))


def condition_vars(a: AxiomId) -> tuple[str, ...]:
    return _CONDITIONS[a][0]


def schema_vars(a: AxiomId) -> tuple[str, ...]:
    return tuple(sorted(set(axiom_vars(a)) | set(condition_vars(a))))


def condition_holds(a: AxiomId, m: SelectionModel, env: Environment, w) -> bool:
    """The semantic condition of ``a`` at state ``w``, sets read from ``env``."""
    names, cond = _CONDITIONS[a]
    missing = [v for v in names if v not in env]
    if missing:
        raise KeyError(f"unbound schema variable(s) {', '.join(missing)}")

    def f(state, xs):
        return set(members(m.selection[state][mask_of(xs)]))

    sets = [set(members(env[v])) for v in names]
    return bool(cond(f, m.index(w), *sets))


# --------------------------------------------------------------------------
# Rules

@dataclass(frozen=True)
class Rule:
    name: str
    n: int = 0

    def __str__(self):
        return f"RCK{self.n}" if self.name == "RCK" else self.name


RCEA = Rule("RCEA")
RCEC = Rule("RCEC")


def RCK(n: int) -> Rule:
    if n < 1:
        raise ValueError("RCK needs at least one conjunct")
    return Rule("RCK", n)


def rule_schema(r: Rule) -> tuple[Formula, Formula]:
    """(premise, conclusion) of a rule over schema variables."""
    if r.name == "RCEA":
        return parse_formula("P <-> Q"), parse_formula("(P => R) <-> (Q => R)")
    if r.name == "RCEC":
        return parse_formula("P <-> Q"), parse_formula("(R => P) <-> (R => Q)")
    if r.name == "RCK":
        ps = [Atom(f"P{k}") for k in range(1, r.n + 1)]
        p0, q = Atom("P0"), Atom("Q")
        premise = Iff(conj(ps), q)
        conclusion = Implies(conj(Cond(p0, p) for p in ps), Cond(p0, q))
        return premise, conclusion
    raise ValueError(f"unknown rule {r}")


# --------------------------------------------------------------------------
# Claims

@dataclass(frozen=True)
class RuleClosure:
    rule: Rule


@dataclass(frozen=True)
class CorrFwd:
    axiom: AxiomId


@dataclass(frozen=True)
class CorrBwd:
    axiom: AxiomId


@dataclass(frozen=True)
class PrimedFwd:
    axiom: AxiomId


@dataclass(frozen=True)
class PrimedBwd:
    axiom: AxiomId


Item = Union[AxiomId, Formula]


@dataclass(frozen=True)
class Inclusion:
    """Premises imply conclusion, each quantified over its own schema variables.

    With ``semantic`` set, catalog items are read as their conditions
    rather than their axioms; raw formulas are always axioms.
    """
    premises: tuple[Item, ...]
    conclusion: Item
    semantic: bool = False


@dataclass(frozen=True)
class AllOf:
    parts: tuple["Claim", ...]


Claim = Union[RuleClosure, CorrFwd, CorrBwd, PrimedFwd, PrimedBwd, Inclusion, AllOf]


@dataclass(frozen=True)
class Verdict:
    holds: bool
    env: dict = field(default_factory=dict)
    state: int | None = None
    part: Claim | None = None  # failing component of an AllOf

    def __bool__(self):
        return self.holds


HOLDS = Verdict(True)


def environments(names, n_states: int) -> Iterator[dict]:
    """All assignments of subsets to ``names``, in ascending mask order."""
    names = list(names)
    for masks in itertools.product(range(1 << n_states), repeat=len(names)):
        yield dict(zip(names, masks))


def _axiom_fail(m, env, f):
    bad = failing_states(m, env, f)
    return bad[0] if bad else None


def _cond_fail(a, m, env):
    for w in range(m.size):
        if not condition_holds(a, m, env, w):
            return w
    return None


def _item_vars(item: Item, semantic: bool):
    if isinstance(item, AxiomId):
        return condition_vars(item) if semantic else axiom_vars(item)
    return tuple(sorted(atoms(item)))


def _item_witness(item: Item, semantic: bool, m: SelectionModel):
    """First (env, state) where the quantified item fails, or None."""
    for env in environments(_item_vars(item, semantic), m.size):
        if semantic and isinstance(item, AxiomId):
            w = _cond_fail(item, m, env)
        else:
            f = axiom_schema(item) if isinstance(item, AxiomId) else item
            w = _axiom_fail(m, env, f)
        if w is not None:
            return env, w
    return None


def check_claim(c: Claim, m: SelectionModel) -> Verdict:
    """Evaluate a claim on one finite model, returning a witness on failure."""
    if isinstance(c, AllOf):
        for part in c.parts:
            v = check_claim(part, m)
            if not v.holds:
                return Verdict(False, v.env, v.state, part)
        return HOLDS
    if isinstance(c, RuleClosure):
        premise, conclusion = rule_schema(c.rule)
        names = sorted(set(atoms(premise)) | set(atoms(conclusion)))
        for env in environments(names, m.size):
            if valid_in_model(m, env, premise):
                w = _axiom_fail(m, env, conclusion)
                if w is not None:
                    return Verdict(False, env, w)
        return HOLDS
    if isinstance(c, (CorrFwd, CorrBwd)):
        a = c.axiom
        ax = _item_witness(a, False, m)
        cd = _item_witness(a, True, m)
        if isinstance(c, CorrFwd) and ax is None and cd is not None:
            return Verdict(False, *cd)
        if isinstance(c, CorrBwd) and cd is None and ax is not None:
            return Verdict(False, *ax)
        return HOLDS
    if isinstance(c, (PrimedFwd, PrimedBwd)):
        a = c.axiom
        f = axiom_schema(a)
        for env in environments(schema_vars(a), m.size):
            ax_w = _axiom_fail(m, env, f)
            cd_w = _cond_fail(a, m, env)
            if isinstance(c, PrimedFwd) and ax_w is None and cd_w is not None:
                return Verdict(False, env, cd_w)
            if isinstance(c, PrimedBwd) and cd_w is None and ax_w is not None:
                return Verdict(False, env, ax_w)
        return HOLDS
    if isinstance(c, Inclusion):
        if any(_item_witness(p, c.semantic, m) is not None for p in c.premises):
            return HOLDS
        w = _item_witness(c.conclusion, c.semantic, m)
        return HOLDS if w is None else Verdict(False, *w)
    raise TypeError(f"not a claim: {c!r}")


def recheck_witness(c: Claim, m: SelectionModel, env: Environment, state) -> bool:
    """True iff ``(env, state)`` refutes ``c`` on ``m``.

    Checks the witnessed instance directly: quantified antecedents are
    re-evaluated in full, the failing consequent only at the witness.
    """
    if isinstance(c, AllOf):
        return any(recheck_witness(p, m, env, state) for p in c.parts)
    s = m.index(state) if state is not None else None
    if isinstance(c, RuleClosure):
        premise, conclusion = rule_schema(c.rule)
        return valid_in_model(m, env, premise) and s is not None and \
            not satisfies(m, env, s, conclusion)
    if isinstance(c, (CorrFwd, CorrBwd, Inclusion)):
        if isinstance(c, CorrFwd):
            prem, concl, sem = (c.axiom,), c.axiom, True
            prem_sem = False
        elif isinstance(c, CorrBwd):
            prem, concl, sem = (c.axiom,), c.axiom, False
            prem_sem = True
        else:
            prem, concl, sem, prem_sem = c.premises, c.conclusion, c.semantic, c.semantic
        if any(_item_witness(p, prem_sem, m) is not None for p in prem):
            return False
        if s is None:
            return False
        if sem and isinstance(concl, AxiomId):
            return not condition_holds(concl, m, env, s)
        f = axiom_schema(concl) if isinstance(concl, AxiomId) else concl
        return not satisfies(m, env, s, f)
    if isinstance(c, PrimedFwd):
        return (valid_in_model(m, env, axiom_schema(c.axiom)) and s is not None
                and not condition_holds(c.axiom, m, env, s))
    if isinstance(c, PrimedBwd):
        return (all(condition_holds(c.axiom, m, env, w) for w in range(m.size))
                and s is not None and not satisfies(m, env, s, axiom_schema(c.axiom)))
    raise TypeError(f"not a claim: {c!r}")


# --------------------------------------------------------------------------
# Problem-5 inclusions and the claim namespace

P5C_CONCLUSION = parse_formula("(A => B) -> ((A & B => C) <-> (A => C))")

INCLUSIONS = {
    "5a": ((AxiomId.MP, AxiomId.CS), AxiomId.CEM),
    "5b": ((AxiomId.CEM, AxiomId.MP), AxiomId.CS),
    "5c": ((AxiomId.RT, AxiomId.AC), P5C_CONCLUSION),
}

_KINDS = {"corr-fwd": CorrFwd, "corr-bwd": CorrBwd,
          "primed-fwd": PrimedFwd, "primed-bwd": PrimedBwd}


def parse_claim(text: str) -> Claim:
    """Resolve a claim id such as ``corr-fwd:ID``, ``rule:RCK2`` or ``incl:5a-ax``.

    ``rule:RCK`` stands for RCK with one, two and three conjuncts.
    """
    kind, _, arg = text.strip().partition(":")
    if kind in _KINDS:
        try:
            return _KINDS[kind](AxiomId(arg))
        except ValueError:
            raise ValueError(f"unknown axiom {arg!r}") from None
    if kind == "rule":
        if arg in ("RCEA", "RCEC"):
            return RuleClosure(Rule(arg))
        if arg == "RCK":
            return AllOf(tuple(RuleClosure(RCK(n)) for n in (1, 2, 3)))
        if arg.startswith("RCK") and arg[3:].isdigit():
            return RuleClosure(RCK(int(arg[3:])))
        raise ValueError(f"unknown rule {arg!r}")
    if kind == "incl":
        key, _, mode = arg.partition("-")
        if key not in INCLUSIONS or mode not in ("ax", "sem"):
            raise ValueError(f"unknown inclusion {arg!r}")
        prem, concl = INCLUSIONS[key]
        return Inclusion(prem, concl, semantic=(mode == "sem"))
    raise ValueError(f"unknown claim id {text!r}")


def claim_id(c: Claim) -> str:
    if isinstance(c, AllOf):
        if c == parse_claim("rule:RCK"):
            return "rule:RCK"
        raise ValueError("no id for this conjunction")
    if isinstance(c, RuleClosure):
        return f"rule:{c.rule}"
    for kind, cls in _KINDS.items():
        if isinstance(c, cls):
            return f"{kind}:{c.axiom}"
    if isinstance(c, Inclusion):
        for key, (prem, concl) in INCLUSIONS.items():
            if tuple(c.premises) == prem and c.conclusion == concl:
                return f"incl:{key}-{'sem' if c.semantic else 'ax'}"
    raise ValueError(f"no id for {c!r}")


ALL_CLAIM_IDS = (
    ["rule:RCEA", "rule:RCK", "rule:RCEC"]
    + [f"{k}:{a}" for a in AxiomId for k in ("corr-bwd", "corr-fwd")]
    + [f"{k}:{a}" for a in AxiomId for k in ("primed-bwd", "primed-fwd")]
    + [f"incl:{k}-{m}" for k in INCLUSIONS for m in ("ax", "sem")]
)
