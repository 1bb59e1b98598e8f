import pytest
from hypothesis import strategies as st

from logic.formula import BOT, TOP, UNIT, Atom, Limp, Plus, Sequent, Tensor, With, parse_sequent
from logic.profiles import BASE, LogicProfile

X, Y, Z = Atom("X"), Atom("Y"), Atom("Z")

UNITS = LogicProfile(units=True)
EXCHANGE = LogicProfile(exchange=True)
IMPLICATION = LogicProfile(implication=True)


def formulas(profile: LogicProfile = BASE, max_leaves: int = 4):
    leaves = [st.sampled_from([X, Y]), st.just(UNIT)]
    if profile.units:
        leaves.append(st.sampled_from([TOP, BOT]))
    binary = [Tensor, With, Plus] + ([Limp] if profile.implication else [])

    def extend(children):
        return st.builds(lambda op, a, b: op(a, b), st.sampled_from(binary), children, children)

    return st.recursive(st.one_of(leaves), extend, max_leaves=max_leaves)


def sequents(profile: LogicProfile = BASE, max_leaves: int = 2, max_context: int = 2):
    f = formulas(profile, max_leaves)
    return st.builds(
        Sequent,
        st.one_of(st.none(), f),
        st.lists(f, max_size=max_context).map(tuple),
        f,
    )


@pytest.fixture
def seq():
    """Parse a sequent under an optional profile."""
    def parse(text: str, profile: LogicProfile = BASE) -> Sequent:
        return parse_sequent(text, profile)
    return parse
