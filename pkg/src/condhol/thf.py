"""TPTP THF0 output for HOL problems, and a reader for that output.

The emitter is deterministic and fully parenthesizes every compound
formula, so the reader only has to understand what the emitter writes:
binders ``!``, ``?``, ``^`` with one variable each, ``@`` chains,
``~ | & => <=>`` and the builtins ``$true``/``$false``.  ``a => b``,
``a & b``, ``a <=> b`` and ``? [X:T]: b`` are printed for the exact
primitive shapes that :mod:`condhol.hol` builds for them, and read back to
those same shapes, so emit/parse round-trips structurally.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .hol import (O, I, Arrow, Base, HolType, HolTerm, Const, Var, Lam, App, Not, Or,
                  Pi, TrueC, FalseC, TRUE, FALSE, conj, implies, iff, typecheck,
                  constants, HolTypeError)

__all__ = ["ThfProblem", "ThfSyntaxError", "emit_thf", "emit_term", "emit_type",
           "parse_thf", "parse_type", "roundtrip_typecheck"]


@dataclass
class ThfProblem:
    name: str
    role_decls: list[tuple[str, HolType]]
    axioms: list[tuple[str, HolTerm]] = field(default_factory=list)
    conjecture: HolTerm | None = None
    expected: str | None = None
    comment: str = ""

    def check(self) -> None:
        """Every constant declared before use; every formula of type ``o``."""
        decl = dict(self.role_decls)
        for label, t in self.axioms + ([("conjecture", self.conjecture)]
                                       if self.conjecture is not None else []):
            for c, ty in constants(t).items():
                if decl.get(c) != ty:
                    raise HolTypeError(f"{label}: constant {c} is not declared as {ty}")
            if typecheck(t, {}) != O:
                raise HolTypeError(f"{label} is not a formula")


class ThfSyntaxError(ValueError):
    pass


# --------------------------------------------------------------------------
# Emission

def emit_type(t: HolType, nested: bool = False) -> str:
    if isinstance(t, Base):
        return "$" + t.name
    s = f"{emit_type(t.dom, True)} > {emit_type(t.cod)}"
    return f"({s})" if nested else s


def _iff_parts(t):
    # Not(Or(Not(Or(Not a, b)), Not(Or(Not b, a))))
    if not (isinstance(t, Not) and isinstance(t.arg, Or)):
        return None
    l, r = t.arg.left, t.arg.right
    if not (isinstance(l, Not) and isinstance(r, Not)):
        return None
    l, r = l.arg, r.arg
    if not (isinstance(l, Or) and isinstance(r, Or)
            and isinstance(l.left, Not) and isinstance(r.left, Not)):
        return None
    a, b = l.left.arg, l.right
    if r.left.arg == b and r.right == a:
        return a, b
    return None


def _binder(name: str) -> str:
    if not name[:1].isupper():
        raise ThfSyntaxError(f"THF variables must be capitalized: {name!r}")
    return name


def emit_term(t: HolTerm) -> str:
    if isinstance(t, Var):
        return _binder(t.name)
    if isinstance(t, Const):
        if not t.name[:1].islower():
            raise ThfSyntaxError(f"THF constants must start lowercase: {t.name!r}")
        return t.name
    if isinstance(t, TrueC):
        return "$true"
    if isinstance(t, FalseC):
        return "$false"
    if isinstance(t, Lam):
        return f"(^ [{_binder(t.var)}: {emit_type(t.vtype)}] : {emit_term(t.body)})"
    if isinstance(t, App):
        head, args = t, []
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fn
        return "(" + " @ ".join(emit_term(x) for x in [head] + args[::-1]) + ")"
    if isinstance(t, Pi):
        if isinstance(t.arg, Lam):
            p = t.arg
            return f"(! [{_binder(p.var)}: {emit_type(p.vtype)}] : {emit_term(p.body)})"
        return f"(!! @ {emit_term(t.arg)})"
    if isinstance(t, Or):
        if isinstance(t.left, Not):
            return f"({emit_term(t.left.arg)} => {emit_term(t.right)})"
        return f"({emit_term(t.left)} | {emit_term(t.right)})"
    if isinstance(t, Not):
        parts = _iff_parts(t)
        if parts:
            return f"({emit_term(parts[0])} <=> {emit_term(parts[1])})"
        a = t.arg
        if isinstance(a, Or) and isinstance(a.left, Not) and isinstance(a.right, Not):
            return f"({emit_term(a.left.arg)} & {emit_term(a.right.arg)})"
        if isinstance(a, Pi) and isinstance(a.arg, Lam) and isinstance(a.arg.body, Not):
            p = a.arg
            return f"(? [{_binder(p.var)}: {emit_type(p.vtype)}] : {emit_term(p.body.arg)})"
        return f"(~ {emit_term(a)})"
    raise ThfSyntaxError(f"not a term: {t!r}")


def emit_thf(p: ThfProblem) -> str:
    p.check()
    out = [f"% Problem  : {p.name}"]
    out += [f"% {line}".rstrip() for line in p.comment.splitlines()]
    if p.expected:
        out.append(f"% Status   : {p.expected}")
    for name, ty in p.role_decls:
        out.append(f"thf({name}_type, type, {name}: {emit_type(ty)}).")
    for label, t in p.axioms:
        out.append(f"thf({label}, axiom, {emit_term(t)}).")
    if p.conjecture is not None:
        out.append(f"thf(conj, conjecture, {emit_term(p.conjecture)}).")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# Reading

_TOKEN = re.compile(r"\s*(<=>|=>|!!|\$?[A-Za-z_][A-Za-z0-9_]*|[()\[\]:,.@~|&!?^>])")


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ThfSyntaxError(f"unexpected character {text[pos]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Reader:
    def __init__(self, toks, decls):
        self.toks, self.i, self.decls = toks, 0, decls

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want=None):
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            raise ThfSyntaxError(f"expected {want or 'a token'}, found {tok!r}")
        self.i += 1
        return tok

    def type_(self):
        left = self.type_atom()
        if self.peek() == ">":
            self.take()
            return Arrow(left, self.type_())
        return left

    def type_atom(self):
        tok = self.take()
        if tok == "(":
            t = self.type_()
            self.take(")")
            return t
        if tok == "$o":
            return O
        if tok == "$i":
            return I
        raise ThfSyntaxError(f"unknown type {tok!r}")

    def term(self, scope):
        tok = self.take()
        if tok == "(":
            return self.compound(scope)
        if tok == "$true":
            return TRUE
        if tok == "$false":
            return FALSE
        if tok[:1].isupper():
            if tok not in scope:
                raise ThfSyntaxError(f"unbound variable {tok}")
            return Var(tok, scope[tok])
        if tok in self.decls:
            return Const(tok, self.decls[tok])
        raise ThfSyntaxError(f"undeclared constant {tok!r}")

    def compound(self, scope):
        tok = self.peek()
        if tok == "~":
            self.take()
            t = Not(self.term(scope))
        elif tok in ("!", "?", "^"):
            self.take()
            self.take("[")
            name = self.take()
            self.take(":")
            ty = self.type_()
            self.take("]")
            self.take(":")
            body = self.term({**scope, name: ty})
            if tok == "^":
                t = Lam(name, ty, body)
            elif tok == "!":
                t = Pi(ty, Lam(name, ty, body))
            else:
                t = Not(Pi(ty, Lam(name, ty, Not(body))))
        elif tok == "!!":
            self.take()
            self.take("@")
            arg = self.term(scope)
            ty = typecheck(arg, scope)
            if not (isinstance(ty, Arrow) and ty.cod == O):
                raise ThfSyntaxError("!! expects a predicate")
            t = Pi(ty.dom, arg)
        else:
            t = self.term(scope)
            op = self.peek()
            if op == "@":
                while self.peek() == "@":
                    self.take()
                    t = App(t, self.term(scope))
            elif op in ("|", "&", "=>", "<=>"):
                self.take()
                r = self.term(scope)
                t = {"|": Or, "&": conj, "=>": implies, "<=>": iff}[op](t, r)
        self.take(")")
        return t


def parse_type(text: str) -> HolType:
    r = _Reader(_tokens(text), {})
    t = r.type_()
    if r.peek() is not None:
        raise ThfSyntaxError(f"trailing input {r.peek()!r}")
    return t


def parse_thf(text: str) -> ThfProblem:
    """Read a file written by :func:`emit_thf` back into a problem."""
    name, expected, comments = "", None, []
    decls: dict[str, HolType] = {}
    prob = ThfProblem("", [])
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("%"):
            body = s[1:].strip()
            if body.startswith("Problem  :"):
                name = body.split(":", 1)[1].strip()
            elif body.startswith("Status   :"):
                expected = body.split(":", 1)[1].strip()
            else:
                comments.append(body)
            continue
        try:
            toks = _tokens(s)
            r = _Reader(toks, decls)
            r.take("thf")
            r.take("(")
            label = r.take()
            r.take(",")
            role = r.take()
            r.take(",")
            if role == "type":
                c = r.take()
                r.take(":")
                ty = r.type_()
                if c in decls:
                    raise ThfSyntaxError(f"{c} declared twice")
                decls[c] = ty
                prob.role_decls.append((c, ty))
            elif role in ("axiom", "definition", "conjecture"):
                t = r.term({})
                if role == "conjecture":
                    if prob.conjecture is not None:
                        raise ThfSyntaxError("more than one conjecture")
                    prob.conjecture = t
                else:
                    prob.axioms.append((label, t))
            else:
                raise ThfSyntaxError(f"unsupported role {role!r}")
            r.take(")")
            r.take(".")
            if r.peek() is not None:
                raise ThfSyntaxError(f"trailing input {r.peek()!r}")
        except ThfSyntaxError as e:
            raise ThfSyntaxError(f"line {lineno}: {e}") from None
    prob.name, prob.expected, prob.comment = name, expected, "\n".join(comments)
    return prob


def roundtrip_typecheck(text: str) -> ThfProblem:
    """Parse, check declarations and types, and confirm re-emission is identical."""
    p = parse_thf(text)
    p.check()
    if emit_thf(p) != text:
        raise ThfSyntaxError(f"{p.name}: re-emission differs from the input")
    return p
