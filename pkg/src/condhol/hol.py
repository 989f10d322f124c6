"""Simply-typed lambda calculus over the base types ``o`` and ``i``.

Terms use named variables annotated with their types.  ``Not``, ``Or`` and
``Pi`` are primitive node kinds with fixed denotations, so normalization is
pure beta/eta.  ``TrueC``/``FalseC`` are the two truth constants.

Evaluation is over finite *standard* models: the domain of ``a -> b`` is the
set of all functions from the domain of ``a`` to the domain of ``b``.
Domains are enumerated canonically: ``o`` as ``[False, True]``, ``i`` in
declaration order, and arrow types lexicographically in their tabulated
outputs (first argument most significant).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

__all__ = [
    "Base", "Arrow", "O", "I", "HolType", "arrow", "format_type",
    "Const", "Var", "Lam", "App", "Not", "Or", "Pi", "TrueC", "FalseC",
    "TRUE", "FALSE", "HolTerm",
    "neg", "disj", "conj", "implies", "iff", "forall", "exists", "app",
    "lam", "leibniz_eq",
    "HolTypeError", "DomainTooLargeError",
    "free_vars", "constants", "type_of", "typecheck", "substitute",
    "normalize", "alpha_equal", "format_term",
    "FunctionValue", "Table", "Closure", "Domains", "HolInterpretation",
    "evaluate", "compile_term", "DEFAULT_CAP",
]


# --------------------------------------------------------------------------
# Types

@dataclass(frozen=True)
class Base:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Arrow:
    dom: "HolType"
    cod: "HolType"

    def __str__(self):
        return format_type(self)


HolType = Union[Base, Arrow]
O = Base("o")
I = Base("i")


def arrow(*types: HolType) -> HolType:
    """``arrow(a, b, c)`` is ``a -> (b -> c)``."""
    out = types[-1]
    for t in reversed(types[:-1]):
        out = Arrow(t, out)
    return out


def format_type(t: HolType) -> str:
    if isinstance(t, Base):
        return t.name
    dom = format_type(t.dom)
    if isinstance(t.dom, Arrow):
        dom = f"({dom})"
    return f"{dom} -> {format_type(t.cod)}"


# --------------------------------------------------------------------------
# Terms

@dataclass(frozen=True)
class Const:
    name: str
    type: HolType


@dataclass(frozen=True)
class Var:
    name: str
    type: HolType


@dataclass(frozen=True)
class Lam:
    var: str
    vtype: HolType
    body: "HolTerm"


@dataclass(frozen=True)
class App:
    fn: "HolTerm"
    arg: "HolTerm"


@dataclass(frozen=True)
class Not:
    arg: "HolTerm"


@dataclass(frozen=True)
class Or:
    left: "HolTerm"
    right: "HolTerm"


@dataclass(frozen=True)
class Pi:
    """``Pi_a p`` with ``p : a -> o``; ``forall X:a. s`` is ``Pi(a, Lam(X, a, s))``."""
    type: HolType
    arg: "HolTerm"


@dataclass(frozen=True)
class TrueC:
    pass


@dataclass(frozen=True)
class FalseC:
    pass


TRUE = TrueC()
FALSE = FalseC()

HolTerm = Union[Const, Var, Lam, App, Not, Or, Pi, TrueC, FalseC]


def app(fn: HolTerm, *args: HolTerm) -> HolTerm:
    for a in args:
        fn = App(fn, a)
    return fn


def lam(params: list[tuple[str, HolType]], body: HolTerm) -> HolTerm:
    for name, ty in reversed(params):
        body = Lam(name, ty, body)
    return body


def neg(a: HolTerm) -> HolTerm:
    return Not(a)


def disj(a: HolTerm, b: HolTerm) -> HolTerm:
    return Or(a, b)


def conj(a: HolTerm, b: HolTerm) -> HolTerm:
    return Not(Or(Not(a), Not(b)))


def implies(a: HolTerm, b: HolTerm) -> HolTerm:
    return Or(Not(a), b)


def iff(a: HolTerm, b: HolTerm) -> HolTerm:
    return conj(implies(a, b), implies(b, a))


def forall(params: list[tuple[str, HolType]], body: HolTerm) -> HolTerm:
    for name, ty in reversed(params):
        body = Pi(ty, Lam(name, ty, body))
    return body


def exists(params: list[tuple[str, HolType]], body: HolTerm) -> HolTerm:
    for name, ty in reversed(params):
        body = Not(Pi(ty, Lam(name, ty, Not(body))))
    return body


def leibniz_eq(a: HolTerm, b: HolTerm, ty: HolType, pred: str = "Q") -> HolTerm:
    """``a = b`` as ``forall Q. Q a -> Q b``; exact in standard models."""
    p = Var(pred, Arrow(ty, O))
    if pred in free_vars(a) or pred in free_vars(b):
        pred = _fresh(pred, set(free_vars(a)) | set(free_vars(b)))
        p = Var(pred, Arrow(ty, O))
    return forall([(pred, p.type)], implies(App(p, a), App(p, b)))


# --------------------------------------------------------------------------
# Typing

class HolTypeError(TypeError):
    pass


def free_vars(t: HolTerm) -> dict[str, HolType]:
    """Free variables with their annotated types, in order of occurrence."""
    out: dict[str, HolType] = {}

    def walk(t, bound):
        if isinstance(t, Var):
            if t.name not in bound:
                out.setdefault(t.name, t.type)
        elif isinstance(t, Lam):
            walk(t.body, bound | {t.var})
        elif isinstance(t, App):
            walk(t.fn, bound)
            walk(t.arg, bound)
        elif isinstance(t, Or):
            walk(t.left, bound)
            walk(t.right, bound)
        elif isinstance(t, (Not, Pi)):
            walk(t.arg, bound)

    walk(t, frozenset())
    return out


def constants(t: HolTerm) -> dict[str, HolType]:
    """Constants occurring in ``t``, in order of first occurrence."""
    out: dict[str, HolType] = {}

    def walk(t):
        if isinstance(t, Const):
            prev = out.setdefault(t.name, t.type)
            if prev != t.type:
                raise HolTypeError(f"constant {t.name} used at types {prev} and {t.type}")
        elif isinstance(t, Lam):
            walk(t.body)
        elif isinstance(t, App):
            walk(t.fn)
            walk(t.arg)
        elif isinstance(t, Or):
            walk(t.left)
            walk(t.right)
        elif isinstance(t, (Not, Pi)):
            walk(t.arg)

    walk(t)
    return out


def _infer(t: HolTerm, ctx: Mapping[str, HolType] | None) -> HolType:
    # ctx None: trust the annotations on free variables
    if isinstance(t, Var):
        if ctx is not None:
            if t.name not in ctx:
                raise HolTypeError(f"unbound variable {t.name}")
            if ctx[t.name] != t.type:
                raise HolTypeError(f"variable {t.name} annotated {t.type} but bound at {ctx[t.name]}")
        return t.type
    if isinstance(t, Const):
        return t.type
    if isinstance(t, (TrueC, FalseC)):
        return O
    if isinstance(t, Lam):
        inner = None if ctx is None else {**ctx, t.var: t.vtype}
        if ctx is None:
            _check_bound(t.body, t.var, t.vtype)
        return Arrow(t.vtype, _infer(t.body, inner))
    if isinstance(t, App):
        ft = _infer(t.fn, ctx)
        at = _infer(t.arg, ctx)
        if not isinstance(ft, Arrow):
            raise HolTypeError(f"cannot apply a term of type {ft}")
        if ft.dom != at:
            raise HolTypeError(f"argument of type {at} given to a function of type {ft}")
        return ft.cod
    if isinstance(t, Not):
        if _infer(t.arg, ctx) != O:
            raise HolTypeError("negation of a non-formula")
        return O
    if isinstance(t, Or):
        if _infer(t.left, ctx) != O or _infer(t.right, ctx) != O:
            raise HolTypeError("disjunction of non-formulas")
        return O
    if isinstance(t, Pi):
        pt = _infer(t.arg, ctx)
        if pt != Arrow(t.type, O):
            raise HolTypeError(f"Pi at {t.type} applied to a term of type {pt}")
        return O
    raise HolTypeError(f"not a term: {t!r}")


def _check_bound(body: HolTerm, name: str, ty: HolType) -> None:
    # occurrences of a bound name must carry its binder's type
    stack = [body]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            if t.name == name and t.type != ty:
                raise HolTypeError(f"variable {name} annotated {t.type} but bound at {ty}")
        elif isinstance(t, Lam):
            if t.var != name:
                stack.append(t.body)
        elif isinstance(t, App):
            stack += [t.fn, t.arg]
        elif isinstance(t, Or):
            stack += [t.left, t.right]
        elif isinstance(t, (Not, Pi)):
            stack.append(t.arg)


def type_of(t: HolTerm) -> HolType:
    """Type of ``t``, taking free variables at their annotated types."""
    return _infer(t, None)


def typecheck(t: HolTerm, ctx: Mapping[str, HolType] | None = None) -> HolType:
    """Type of ``t``; every free variable must be declared in ``ctx``."""
    return _infer(t, dict(ctx or {}))


# --------------------------------------------------------------------------
# Substitution and normalization

def _fresh(base: str, avoid: set[str]) -> str:
    stem = base.rstrip("0123456789") or "X"
    k = 1
    while f"{stem}{k}" in avoid:
        k += 1
    return f"{stem}{k}"


def _all_names(t: HolTerm) -> set[str]:
    names = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Var):
            names.add(u.name)
        elif isinstance(u, Lam):
            names.add(u.var)
            stack.append(u.body)
        elif isinstance(u, App):
            stack += [u.fn, u.arg]
        elif isinstance(u, Or):
            stack += [u.left, u.right]
        elif isinstance(u, (Not, Pi)):
            stack.append(u.arg)
    return names


def substitute(t: HolTerm, x: Var, a: HolTerm) -> HolTerm:
    """Capture-avoiding ``[a/x] t``."""
    if type_of(a) != x.type:
        raise HolTypeError(f"cannot substitute a term of type {type_of(a)} for {x.name}:{x.type}")
    return _subst(t, x.name, a, set(free_vars(a)))


def _subst(t: HolTerm, x: str, a: HolTerm, fv_a: set[str]) -> HolTerm:
    if isinstance(t, Var):
        return a if t.name == x else t
    if isinstance(t, (Const, TrueC, FalseC)):
        return t
    if isinstance(t, App):
        return App(_subst(t.fn, x, a, fv_a), _subst(t.arg, x, a, fv_a))
    if isinstance(t, Not):
        return Not(_subst(t.arg, x, a, fv_a))
    if isinstance(t, Or):
        return Or(_subst(t.left, x, a, fv_a), _subst(t.right, x, a, fv_a))
    if isinstance(t, Pi):
        return Pi(t.type, _subst(t.arg, x, a, fv_a))
    if isinstance(t, Lam):
        if t.var == x:
            return t
        fv_body = free_vars(t.body)
        if x not in fv_body:
            return t
        if t.var in fv_a:
            new = _fresh(t.var, fv_a | set(fv_body) | {x} | _all_names(t.body))
            body = _subst(t.body, t.var, Var(new, t.vtype), {new})
            return Lam(new, t.vtype, _subst(body, x, a, fv_a))
        return Lam(t.var, t.vtype, _subst(t.body, x, a, fv_a))
    raise HolTypeError(f"not a term: {t!r}")


def _nf(t: HolTerm) -> HolTerm:
    if isinstance(t, (Var, Const, TrueC, FalseC)):
        return t
    if isinstance(t, App):
        fn = _nf(t.fn)
        arg = _nf(t.arg)
        if isinstance(fn, Lam):
            return _nf(_subst(fn.body, fn.var, arg, set(free_vars(arg))))
        return App(fn, arg)
    if isinstance(t, Lam):
        body = _nf(t.body)
        if (isinstance(body, App) and body.arg == Var(t.var, t.vtype)
                and t.var not in free_vars(body.fn)):
            return body.fn
        return Lam(t.var, t.vtype, body)
    if isinstance(t, Not):
        return Not(_nf(t.arg))
    if isinstance(t, Or):
        return Or(_nf(t.left), _nf(t.right))
    if isinstance(t, Pi):
        return Pi(t.type, _nf_binder(t.arg, t.type))
    raise HolTypeError(f"not a term: {t!r}")


def _nf_binder(p: HolTerm, ty: HolType) -> HolTerm:
    # the predicate under Pi is kept as an abstraction so quantifiers stay binders
    if isinstance(p, Lam):
        return Lam(p.var, p.vtype, _nf(p.body))
    p = _nf(p)
    if isinstance(p, Lam):
        return p
    v = _fresh("X", set(free_vars(p)))
    return Lam(v, ty, App(p, Var(v, ty)))


def _canonical(t: HolTerm) -> HolTerm:
    free = set(free_vars(t))
    prefix = next(c for c in "XYZUVWKLMN"
                  if not any(n.startswith(c) and n[1:].isdigit() for n in free))

    def walk(t, ren, level):
        if isinstance(t, Var):
            return Var(ren.get(t.name, t.name), t.type)
        if isinstance(t, (Const, TrueC, FalseC)):
            return t
        if isinstance(t, Lam):
            new = f"{prefix}{level + 1}"
            return Lam(new, t.vtype, walk(t.body, {**ren, t.var: new}, level + 1))
        if isinstance(t, App):
            return App(walk(t.fn, ren, level), walk(t.arg, ren, level))
        if isinstance(t, Not):
            return Not(walk(t.arg, ren, level))
        if isinstance(t, Or):
            return Or(walk(t.left, ren, level), walk(t.right, ren, level))
        if isinstance(t, Pi):
            return Pi(t.type, walk(t.arg, ren, level))
        raise HolTypeError(f"not a term: {t!r}")

    return walk(t, {}, 0)


def normalize(t: HolTerm) -> HolTerm:
    """Beta-eta normal form with canonically named bound variables.

    Arguments of ``Pi`` stay abstractions (``Pi p`` becomes
    ``Pi (lambda X. p X)``) so that every quantifier prints as a binder;
    everywhere else eta-redexes are contracted.
    """
    type_of(t)
    return _canonical(_nf(t))


def alpha_equal(a: HolTerm, b: HolTerm) -> bool:
    """Structural equality up to renaming of bound variables."""

    def eq(a, b, ra, rb, depth):
        if type(a) is not type(b):
            return False
        if isinstance(a, Var):
            la, lb = ra.get(a.name), rb.get(b.name)
            if la is None and lb is None:
                return a == b
            return la == lb and a.type == b.type
        if isinstance(a, Lam):
            return a.vtype == b.vtype and eq(a.body, b.body, {**ra, a.var: depth},
                                             {**rb, b.var: depth}, depth + 1)
        if isinstance(a, App):
            return eq(a.fn, b.fn, ra, rb, depth) and eq(a.arg, b.arg, ra, rb, depth)
        if isinstance(a, Or):
            return eq(a.left, b.left, ra, rb, depth) and eq(a.right, b.right, ra, rb, depth)
        if isinstance(a, Not):
            return eq(a.arg, b.arg, ra, rb, depth)
        if isinstance(a, Pi):
            return a.type == b.type and eq(a.arg, b.arg, ra, rb, depth)
        return a == b

    return eq(a, b, {}, {}, 0)


def format_term(t: HolTerm) -> str:
    """Human-readable rendering (``A & B`` and ``A -> B`` are recognized)."""
    if isinstance(t, (Var, Const)):
        return t.name
    if isinstance(t, TrueC):
        return "T"
    if isinstance(t, FalseC):
        return "F"
    if isinstance(t, Lam):
        return f"(\\{t.var}:{_ty_atom(t.vtype)}. {format_term(t.body)})"
    if isinstance(t, App):
        head, args = t, []
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fn
        return "(" + " ".join(format_term(x) for x in [head] + args[::-1]) + ")"
    if isinstance(t, Pi):
        if isinstance(t.arg, Lam):
            return f"(forall {t.arg.var}:{_ty_atom(t.arg.vtype)}. {format_term(t.arg.body)})"
        return f"(Pi {format_term(t.arg)})"
    if isinstance(t, Or):
        if isinstance(t.left, Not):
            return f"({format_term(t.left.arg)} -> {format_term(t.right)})"
        return f"({format_term(t.left)} | {format_term(t.right)})"
    if isinstance(t, Not):
        a = t.arg
        if isinstance(a, Or) and isinstance(a.left, Not) and isinstance(a.right, Not):
            return f"({format_term(a.left.arg)} & {format_term(a.right.arg)})"
        return f"~{format_term(a)}"
    raise HolTypeError(f"not a term: {t!r}")


def _ty_atom(t: HolType) -> str:
    s = format_type(t)
    return f"({s})" if isinstance(t, Arrow) else s


# --------------------------------------------------------------------------
# Finite standard models

DEFAULT_CAP = 1 << 16


class DomainTooLargeError(ValueError):
    pass


class FunctionValue:
    """A total function between finite domains."""

    __slots__ = ("type", "domains")

    def apply(self, v):
        raise NotImplementedError

    @property
    def outputs(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return (isinstance(other, FunctionValue) and self.type == other.type
                and self.outputs == other.outputs)

    def __hash__(self):
        return hash((self.type, self.outputs))

    def __repr__(self):
        return f"<{type(self).__name__} {format_type(self.type)} {self.outputs}>"


class Table(FunctionValue):
    __slots__ = ("_outputs",)

    def __init__(self, ty: Arrow, outputs, domains: "Domains"):
        self.type = ty
        self.domains = domains
        self._outputs = tuple(outputs)
        if len(self._outputs) != domains.size(ty.dom):
            raise ValueError(f"table for {ty} needs {domains.size(ty.dom)} entries")

    @property
    def outputs(self):
        return self._outputs

    def apply(self, v):
        return self._outputs[self.domains.index(v, self.type.dom)]


class Closure(FunctionValue):
    """Denotation of an abstraction; tabulated only on demand."""

    __slots__ = ("fn", "_outputs")

    def __init__(self, ty: Arrow, fn: Callable, domains: "Domains"):
        self.type = ty
        self.fn = fn
        self.domains = domains
        self._outputs = None

    def apply(self, v):
        return self.fn(v)

    @property
    def outputs(self):
        if self._outputs is None:
            self._outputs = tuple(self.fn(v) for v in self.domains.enumerate(self.type.dom))
        return self._outputs


class Domains:
    """Canonical enumeration of the full function spaces over ``|D_i| = n``."""

    def __init__(self, n: int, cap: int = DEFAULT_CAP):
        if n < 1:
            raise ValueError("D_i must be non-empty")
        self.n = n
        self.cap = cap
        self._enum: dict[HolType, list] = {}
        self._size: dict[HolType, int] = {}

    def size(self, ty: HolType) -> int:
        s = self._size.get(ty)
        if s is None:
            if ty == O:
                s = 2
            elif ty == I:
                s = self.n
            else:
                s = self.size(ty.cod) ** self.size(ty.dom)
            self._size[ty] = s
        return s

    def enumerate(self, ty: HolType) -> list:
        vals = self._enum.get(ty)
        if vals is None:
            if self.size(ty) > self.cap:
                raise DomainTooLargeError(
                    f"domain of {format_type(ty)} has {self.size(ty)} elements (cap {self.cap})")
            if ty == O:
                vals = [False, True]
            elif ty == I:
                vals = list(range(self.n))
            else:
                cod = self.enumerate(ty.cod)
                vals = [Table(ty, outs, self)
                        for outs in itertools.product(cod, repeat=self.size(ty.dom))]
            self._enum[ty] = vals
        return vals

    def index(self, v, ty: HolType) -> int:
        if ty == O:
            return int(v)
        if ty == I:
            return v
        radix = self.size(ty.cod)
        k = 0
        for out in v.outputs:
            k = k * radix + self.index(out, ty.cod)
        return k

    def contains(self, v, ty: HolType) -> bool:
        if ty == O:
            return isinstance(v, bool)
        if ty == I:
            return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.n
        return (isinstance(v, FunctionValue) and v.type == ty
                and all(self.contains(out, ty.cod) for out in v.outputs))

    def tabulate(self, ty: Arrow, fn: Callable) -> Table:
        if self.size(ty.dom) > self.cap:
            raise DomainTooLargeError(f"cannot tabulate over {format_type(ty.dom)}")
        return Table(ty, [fn(v) for v in self.enumerate(ty.dom)], self)


def _value_type(v) -> HolType:
    if isinstance(v, bool):
        return O
    if isinstance(v, int):
        return I
    if isinstance(v, FunctionValue):
        return v.type
    raise TypeError(f"not a value: {v!r}")


@dataclass
class HolInterpretation:
    """A standard model: ``domain_i`` plus denotations of constants.

    ``bindings`` supplies default values for free variables (used for
    schema variables); an explicit assignment overrides them.
    """

    domain_i: tuple[str, ...]
    const_denotations: dict = field(default_factory=dict)
    bindings: dict = field(default_factory=dict)
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        self.domain_i = tuple(self.domain_i)
        self.domains = Domains(len(self.domain_i), self.cap)
        for name, v in list(self.const_denotations.items()) + list(self.bindings.items()):
            if isinstance(v, FunctionValue) and v.domains is not self.domains:
                v = self.rebase(v)
                if name in self.const_denotations:
                    self.const_denotations[name] = v
                else:
                    self.bindings[name] = v
            if not self.domains.contains(v, _value_type(v)):
                raise ValueError(f"denotation of {name} does not inhabit its domain")

    def rebase(self, v):
        if not isinstance(v, FunctionValue):
            return v
        return Table(v.type, [self.rebase(o) for o in v.outputs], self.domains)

    def predicate(self, mask: int) -> Table:
        """Characteristic function ``i -> o`` of a state bitmask."""
        return Table(Arrow(I, O), [bool(mask >> k & 1) for k in range(self.domains.n)], self.domains)

    def tabulate(self, ty: HolType, fn: Callable) -> Table:
        """Curried table for ``ty`` from a Python function of all its arguments."""
        if not isinstance(ty, Arrow):
            raise ValueError("tabulate needs an arrow type")
        if isinstance(ty.cod, Arrow):
            return self.domains.tabulate(ty, lambda v: self.tabulate(ty.cod, lambda *r: fn(v, *r)))
        return self.domains.tabulate(ty, fn)


def _compile(t: HolTerm, h: HolInterpretation):
    """Return ``(run, type)`` where ``run(env)`` computes the denotation."""
    dom = h.domains
    if isinstance(t, Var):
        name = t.name

        def run(env):
            try:
                return env[name]
            except KeyError:
                raise KeyError(f"unassigned variable {name}") from None
        return run, t.type
    if isinstance(t, Const):
        if t.name not in h.const_denotations:
            raise KeyError(f"no denotation for constant {t.name}")
        v = h.const_denotations[t.name]
        if _value_type(v) != t.type:
            raise HolTypeError(f"constant {t.name} used at {t.type} but denotes a {_value_type(v)}")
        return (lambda env: v), t.type
    if isinstance(t, TrueC):
        return (lambda env: True), O
    if isinstance(t, FalseC):
        return (lambda env: False), O
    if isinstance(t, App):
        rf, ft = _compile(t.fn, h)
        ra, at = _compile(t.arg, h)
        if not isinstance(ft, Arrow) or ft.dom != at:
            raise HolTypeError("ill-typed application")
        return (lambda env: rf(env).apply(ra(env))), ft.cod
    if isinstance(t, Lam):
        rb, bt = _compile(t.body, h)
        ty = Arrow(t.vtype, bt)
        x = t.var

        def run(env):
            return Closure(ty, lambda v: rb({**env, x: v}), dom)
        return run, ty
    if isinstance(t, Not):
        r, _ = _compile(t.arg, h)
        return (lambda env: not r(env)), O
    if isinstance(t, Or):
        rl, _ = _compile(t.left, h)
        rr, _ = _compile(t.right, h)
        return (lambda env: rl(env) or rr(env)), O
    if isinstance(t, Pi):
        ty = t.type
        if isinstance(t.arg, Lam):
            rb, _ = _compile(t.arg.body, h)
            x = t.arg.var

            def run(env):
                return all(rb({**env, x: v}) for v in dom.enumerate(ty))
            return run, O
        rp, _ = _compile(t.arg, h)

        def run(env):
            p = rp(env)
            return all(p.apply(v) for v in dom.enumerate(ty))
        return run, O
    raise HolTypeError(f"not a term: {t!r}")


def compile_term(t: HolTerm, h: HolInterpretation) -> Callable[[Mapping], object]:
    """Compile once, evaluate under many assignments."""
    run, _ = _compile(t, h)
    base = dict(h.bindings)
    return lambda assignment=None: run({**base, **(assignment or {})})


def evaluate(h: HolInterpretation, assignment: Mapping, t: HolTerm):
    """Denotation of ``t`` under ``assignment`` (variable name -> value)."""
    return compile_term(t, h)(assignment)
