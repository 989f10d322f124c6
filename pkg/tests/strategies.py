from hypothesis import strategies as st

from condhol.semantics import SelectionModel
from condhol.syntax import Atom, Neg, Or, And, Implies, Iff, Cond

ATOMS = ["p", "q", "r", "A", "B"]


def formulas(names=ATOMS, max_leaves=12):
    leaf = st.sampled_from(names).map(Atom)
    binary = [Or, And, Implies, Iff, Cond]
    return st.recursive(
        leaf,
        lambda sub: st.one_of(
            sub.map(Neg),
            *[st.tuples(sub, sub).map(lambda lr, op=op: op(*lr)) for op in binary]),
        max_leaves=max_leaves)


@st.composite
def models(draw, min_states=1, max_states=3, names=ATOMS):
    n = draw(st.integers(min_states, max_states))
    s = 1 << n
    rows = tuple(tuple(draw(st.integers(0, s - 1)) for _ in range(s)) for _ in range(n))
    val = {a: draw(st.integers(0, s - 1)) for a in names}
    return SelectionModel(tuple(f"i{k + 1}" for k in range(n)), rows, val)
