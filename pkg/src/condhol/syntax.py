"""Conditional-logic formulas: AST, concrete syntax, desugaring.

Concrete grammar, loosest binding first::

    iff   ::= cond [ '<->' cond ]          (non-associative)
    cond  ::= imp  [ '=>'  cond ]          (right-associative)
    imp   ::= or   [ '->'  imp  ]          (right-associative)
    or    ::= and  { '|' and }
    and   ::= unary { '&' unary }
    unary ::= '~' unary | ATOM | SCHEMA | '(' iff ')'

``ATOM`` is ``[a-z][a-zA-Z0-9_]*`` (a propositional letter interpreted by a
model's valuation); ``SCHEMA`` is ``[A-Z][a-zA-Z0-9_]*`` (a schema variable
ranging over arbitrary sets of states).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

__all__ = [
    "Atom", "Neg", "Or", "And", "Implies", "Iff", "Cond", "Formula",
    "FormulaSyntaxError", "parse_formula", "parse_formula_lines",
    "format_formula", "desugar", "atoms", "depth", "conj", "subformulas",
]


@dataclass(frozen=True)
class Atom:
    name: str

    @property
    def schema(self) -> bool:
        """Uppercase names are schema variables."""
        return self.name[:1].isupper()


@dataclass(frozen=True)
class Neg:
    arg: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Cond:
    antecedent: "Formula"
    consequent: "Formula"


Formula = Union[Atom, Neg, Or, And, Implies, Iff, Cond]

BINARY = (Or, And, Implies, Iff, Cond)


def children(f: Formula) -> tuple:
    if isinstance(f, Atom):
        return ()
    if isinstance(f, Neg):
        return (f.arg,)
    if isinstance(f, Cond):
        return (f.antecedent, f.consequent)
    return (f.left, f.right)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal."""
    yield f
    for c in children(f):
        yield from subformulas(c)


def depth(f: Formula) -> int:
    """Nesting depth; atoms have depth 0."""
    cs = children(f)
    return 0 if not cs else 1 + max(depth(c) for c in cs)


def conj(parts) -> Formula:
    """Left-nested conjunction of a non-empty sequence."""
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


# --------------------------------------------------------------------------
# Lexing / parsing

class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        text = f"{message} at line {line}, column {column}"
        if expected:
            text += f" (expected {expected})"
        super().__init__(text)


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<op><->|->|=>|[~&|()])
  | (?P<name>[A-Za-z0-9_]+)
""", re.VERBOSE)
_ATOM = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
_SCHEMA = re.compile(r"[A-Z][a-zA-Z0-9_]*\Z")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'op', 'name' or 'eof'
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, col,
                                     "an atom, '~' or '('")
        kind = m.lastgroup
        s = m.group()
        if kind == "name":
            if not (_ATOM.match(s) or _SCHEMA.match(s)):
                raise FormulaSyntaxError(f"illegal atom name {s!r}", line, col,
                                         "a name matching [a-z][a-zA-Z0-9_]* or [A-Z][a-zA-Z0-9_]*")
            toks.append(_Tok("name", s, line, col))
        elif kind == "op":
            toks.append(_Tok("op", s, line, col))
        nl = s.count("\n")
        if nl:
            line += nl
            col = len(s) - s.rfind("\n")
        else:
            col += len(s)
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self, op: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == op:
            self.i += 1
            return True
        return False

    def fail(self, expected: str):
        t = self.cur
        what = "end of input" if t.kind == "eof" else repr(t.text)
        raise FormulaSyntaxError(f"unexpected {what}", t.line, t.column, expected)

    def parse(self) -> Formula:
        f = self.iff()
        if self.cur.kind != "eof":
            self.fail("end of input or a binary connective")
        return f

    def iff(self) -> Formula:
        left = self.cond()
        if self.take("<->"):
            right = self.cond()
            if self.cur.kind == "op" and self.cur.text == "<->":
                raise FormulaSyntaxError("'<->' is non-associative; add parentheses",
                                         self.cur.line, self.cur.column)
            return Iff(left, right)
        return left

    def cond(self) -> Formula:
        left = self.imp()
        if self.take("=>"):
            return Cond(left, self.cond())
        return left

    def imp(self) -> Formula:
        left = self.or_()
        if self.take("->"):
            return Implies(left, self.imp())
        return left

    def or_(self) -> Formula:
        f = self.and_()
        while self.take("|"):
            f = Or(f, self.and_())
        return f

    def and_(self) -> Formula:
        f = self.unary()
        while self.take("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        t = self.cur
        if self.take("~"):
            return Neg(self.unary())
        if self.take("("):
            f = self.iff()
            if not self.take(")"):
                self.fail("')'")
            return f
        if t.kind == "name":
            self.i += 1
            return Atom(t.text)
        self.fail("an atom, '~' or '('")


def parse_formula(text: str) -> Formula:
    """Parse one formula; raises :class:`FormulaSyntaxError`."""
    if not text or not text.strip():
        raise FormulaSyntaxError("empty formula", 1, 1, "a formula")
    return _Parser(text).parse()


def parse_formula_lines(text: str) -> list[Formula]:
    """Batch format: one formula per line, ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            out.append(parse_formula(body))
        except FormulaSyntaxError as e:
            raise FormulaSyntaxError(e.message, lineno, e.column, e.expected) from None
    return out


# --------------------------------------------------------------------------
# Printing

# binding strength, higher binds tighter
_PREC = {Iff: 0, Cond: 1, Implies: 2, Or: 3, And: 4, Neg: 5, Atom: 6}
_SYM = {Iff: "<->", Cond: "=>", Implies: "->", Or: "|", And: "&"}
_RIGHT_ASSOC = (Cond, Implies)
_LEFT_ASSOC = (Or, And)


def format_formula(f: Formula) -> str:
    """Render with the fewest parentheses that reparse to the same tree."""
    return _fmt(f, 0)


def _fmt(f: Formula, need: int) -> str:
    p = _PREC[type(f)]
    if isinstance(f, Atom):
        s = f.name
    elif isinstance(f, Neg):
        s = "~" + _fmt(f.arg, p)
    else:
        left, right = children(f)
        if isinstance(f, _RIGHT_ASSOC):
            lp, rp = p + 1, p
        elif isinstance(f, _LEFT_ASSOC):
            lp, rp = p, p + 1
        else:
            lp = rp = p + 1
        s = f"{_fmt(left, lp)} {_SYM[type(f)]} {_fmt(right, rp)}"
    return f"({s})" if p < need else s


# --------------------------------------------------------------------------

def desugar(f: Formula) -> Formula:
    """Rewrite into the primitive connectives ``~``, ``|`` and ``=>``."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Neg):
        return Neg(desugar(f.arg))
    if isinstance(f, Cond):
        return Cond(desugar(f.antecedent), desugar(f.consequent))
    a, b = desugar(f.left), desugar(f.right)
    if isinstance(f, Or):
        return Or(a, b)
    if isinstance(f, And):
        return Neg(Or(Neg(a), Neg(b)))
    if isinstance(f, Implies):
        return Or(Neg(a), b)
    # a <-> b  ==  (a -> b) & (b -> a)
    return Neg(Or(Neg(Or(Neg(a), b)), Neg(Or(Neg(b), a))))


def atoms(f: Formula) -> list[str]:
    """Atom and schema names in order of first occurrence."""
    seen: dict[str, None] = {}
    for g in subformulas(f):
        if isinstance(g, Atom):
            seen.setdefault(g.name)
    return list(seen)
