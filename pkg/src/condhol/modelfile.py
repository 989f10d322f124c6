"""Text format for selection-function models and countermodel fixtures.

Example::

    # Refute's countermodel
    states: i1
    selection:
      (i1, {}) -> {}
      (i1, {i1}) -> {}
    claim: primed-fwd:MP
    environment:
      A = {i1}
      B = {i1}
    state: i1

``valuation`` and ``environment`` sections hold ``name = {states}`` lines.
The ``selection`` section must list every ``(state, subset)`` pair exactly
once.  ``claim``, ``formula``, ``environment`` and ``state`` only appear in
fixtures.  Output is canonical: states in declaration order and subsets in
ascending bitmask order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .semantics import SelectionModel, mask_of, members
from .syntax import Formula, parse_formula, format_formula

__all__ = ["ModelFormatError", "Fixture", "parse_model", "format_model", "load_model",
           "parse_fixture", "format_fixture", "load_fixture", "format_set"]


class ModelFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass
class Fixture:
    model: SelectionModel
    env: dict = field(default_factory=dict)
    state: str | None = None
    claim: str | None = None
    formula: Formula | None = None
    comment: str = ""


_SET = re.compile(r"\s*(\{[^}]*\}|∅)\s*")
_ENTRY = re.compile(r"\(\s*([^,\s]+)\s*,\s*(\{[^}]*\}|∅)\s*\)\s*->\s*(\{[^}]*\}|∅)\s*\Z")
_BIND = re.compile(r"([A-Za-z][A-Za-z0-9_]*)\s*=\s*(\{[^}]*\}|∅)\s*\Z")
_SECTIONS = ("states", "valuation", "selection", "environment", "claim", "formula", "state")


def format_set(names) -> str:
    return "{" + ", ".join(names) + "}"


def _parse_set(text: str, states: list[str], line: int) -> int:
    text = text.strip()
    if text == "∅":
        return 0
    inner = text[1:-1].strip()
    if not inner:
        return 0
    idx = []
    for tok in inner.split(","):
        tok = tok.strip()
        if tok not in states:
            raise ModelFormatError(f"unknown state {tok!r}", line)
        idx.append(states.index(tok))
    return mask_of(idx)


def _parse(text: str) -> Fixture:
    sections: dict[str, list[tuple[int, str]]] = {}
    scalars: dict[str, tuple[int, str]] = {}
    current = None
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#"):
            comments.append(raw.lstrip()[1:].strip())
            continue
        line = raw.split(" #", 1)[0].rstrip()
        if not line.strip():
            continue
        if not raw[0].isspace():
            key, sep, rest = line.partition(":")
            key = key.strip()
            if not sep or key not in _SECTIONS:
                raise ModelFormatError(f"expected one of {', '.join(_SECTIONS)}", lineno)
            if key in sections or key in scalars:
                raise ModelFormatError(f"duplicate section {key!r}", lineno)
            if key in ("valuation", "selection", "environment"):
                if rest.strip():
                    raise ModelFormatError(f"{key} entries go on indented lines", lineno)
                sections[key] = []
                current = key
            else:
                scalars[key] = (lineno, rest.strip())
                current = None
        else:
            if current is None:
                raise ModelFormatError("indented line outside a section", lineno)
            sections[current].append((lineno, line.strip()))

    if "states" not in scalars:
        raise ModelFormatError("missing 'states'")
    states = scalars["states"][1].replace(",", " ").split()
    if not states:
        raise ModelFormatError("no states declared", scalars["states"][0])
    if len(set(states)) != len(states):
        raise ModelFormatError("duplicate state", scalars["states"][0])
    n = len(states)

    def bindings(key):
        out = {}
        for lineno, line in sections.get(key, []):
            m = _BIND.match(line)
            if not m:
                raise ModelFormatError(f"expected 'name = {{states}}' in {key}", lineno)
            if m.group(1) in out:
                raise ModelFormatError(f"{m.group(1)} bound twice", lineno)
            out[m.group(1)] = _parse_set(m.group(2), states, lineno)
        return out

    table: dict[tuple[int, int], int] = {}
    if "selection" not in sections:
        raise ModelFormatError("missing 'selection'")
    for lineno, line in sections["selection"]:
        m = _ENTRY.match(line)
        if not m:
            raise ModelFormatError("expected '(state, {subset}) -> {subset}'", lineno)
        w = m.group(1)
        if w not in states:
            raise ModelFormatError(f"unknown state {w!r}", lineno)
        key = (states.index(w), _parse_set(m.group(2), states, lineno))
        if key in table:
            raise ModelFormatError("selection entry given twice", lineno)
        table[key] = _parse_set(m.group(3), states, lineno)
    missing = [(w, x) for w in range(n) for x in range(1 << n) if (w, x) not in table]
    if missing:
        w, x = missing[0]
        raise ModelFormatError(
            f"selection table is not total: no entry for ({states[w]}, "
            f"{format_set(states[k] for k in members(x))}) and {len(missing) - 1} more")
    model = SelectionModel(tuple(states),
                           tuple(tuple(table[w, x] for x in range(1 << n)) for w in range(n)),
                           bindings("valuation"))
    fx = Fixture(model, bindings("environment"), comment="\n".join(comments))
    if "state" in scalars:
        lineno, s = scalars["state"]
        if s not in states:
            raise ModelFormatError(f"unknown state {s!r}", lineno)
        fx.state = s
    if "claim" in scalars:
        fx.claim = scalars["claim"][1]
    if "formula" in scalars:
        lineno, text = scalars["formula"]
        try:
            fx.formula = parse_formula(text)
        except ValueError as e:
            raise ModelFormatError(str(e), lineno) from None
    return fx


def parse_model(text: str) -> SelectionModel:
    return _parse(text).model


def parse_fixture(text: str) -> Fixture:
    fx = _parse(text)
    if fx.claim is None and fx.formula is None:
        raise ModelFormatError("a fixture needs a 'claim' or a 'formula'")
    if fx.claim is not None and fx.formula is not None:
        raise ModelFormatError("a fixture has either a 'claim' or a 'formula', not both")
    return fx


def _names(m: SelectionModel, mask: int) -> str:
    return format_set(m.names(mask))


def format_model(m: SelectionModel, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append("states: " + " ".join(m.states))
    if m.valuation:
        lines.append("valuation:")
        lines += [f"  {name} = {_names(m, mask)}" for name, mask in m.valuation.items()]
    lines.append("selection:")
    for w in range(m.size):
        for x in range(1 << m.size):
            lines.append(f"  ({m.states[w]}, {_names(m, x)}) -> {_names(m, m.selection[w][x])}")
    return "\n".join(lines) + "\n"


def format_fixture(fx: Fixture) -> str:
    out = format_model(fx.model, fx.comment)
    if fx.claim is not None:
        out += f"claim: {fx.claim}\n"
    if fx.formula is not None:
        out += f"formula: {format_formula(fx.formula)}\n"
    if fx.env:
        out += "environment:\n" + "".join(
            f"  {k} = {_names(fx.model, v)}\n" for k, v in fx.env.items())
    if fx.state is not None:
        out += f"state: {fx.state}\n"
    return out


def load_model(path) -> SelectionModel:
    return parse_model(Path(path).read_text(encoding="utf-8"))


def load_fixture(path) -> Fixture:
    return parse_fixture(Path(path).read_text(encoding="utf-8"))
