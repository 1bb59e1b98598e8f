import logging

import pytest
from hypothesis import given, settings

from logic import calculus as c
from logic.congruence import ex_count
from logic.errors import BudgetExceeded, ProfileError
from logic.focused import check_focused, emb
from logic.labels import FocusedRule as FR
from logic.search import (
    SearchBudget,
    canonicalize_exchange,
    count_classes,
    count_classes_oracle,
    derive,
    enumerate_focused,
    enumerate_unfocused,
    is_derivable,
)
from tests.conftest import BASE, EXCHANGE, IMPLICATION, UNITS, sequents


@pytest.mark.parametrize("text", [
    "(X * Y) * Z | . |- X * (Y * Z)",
    "I * X | . |- X",
    "X | . |- X * I",
    "- | X, Y |- X * Y",
    "(X \\/ Y) * Z | . |- (X * Z) \\/ (Y * Z)",
])
def test_derivable(seq, text):
    s = seq(text)
    d = derive(s)
    assert d is not None
    check_focused(d, s)
    c.check(emb(d, s), s)


@pytest.mark.parametrize("text", [
    "X * (Y * Z) | . |- (X * Y) * Z",
    "X | . |- I * X",
    "X /\\ Y | Y \\/ X |- (X * Y) \\/ (Y * X)",
    "- | . |- X",
    "- | Y, X |- X * Y",
])
def test_not_derivable(seq, text):
    assert derive(seq(text)) is None


@pytest.mark.parametrize("text, count", [
    ("- | X, Y |- X * Y", 1),
    ("X /\\ Y | . |- X \\/ Y", 2),
    ("X /\\ Y | . |- (X /\\ Y) \\/ Z", 1),
    ("I | . |- I", 1),
    ("X /\\ X | . |- X", 2),
])
def test_focused_counts(seq, text, count):
    assert count_classes(seq(text)) == count


def test_enumeration_is_duplicate_free(seq):
    s = seq("X /\\ X | . |- X /\\ X")
    ds = enumerate_focused(s)
    assert len(ds) == len(set(ds)) == 4
    for d in ds:
        check_focused(d, s)


def test_unfocused_enumeration(seq):
    assert enumerate_unfocused(seq("I | . |- I")) == [c.ax(), c.il(c.ir())]
    assert enumerate_unfocused(seq("X | . |- X")) == [c.ax()]
    assert enumerate_unfocused(seq("- | . |- X")) == []


def test_oracle_counts_agree(seq):
    for text in ("I | . |- I", "X /\\ Y | . |- X \\/ Y", "- | X, Y |- X * Y", "X /\\ X | . |- X /\\ X"):
        s = seq(text)
        assert count_classes_oracle(s) == count_classes(s)


def test_connective_gate(seq):
    s = seq("(X * Y) * Z | . |- X * (Y * Z)")
    with pytest.raises(BudgetExceeded) as info:
        derive(s, budget=SearchBudget(max_connectives=3))
    assert info.value.limit == 3


def test_node_cap(seq):
    with pytest.raises(BudgetExceeded):
        enumerate_focused(seq("X /\\ X | . |- X /\\ X"), budget=SearchBudget(node_cap=3))


def test_result_cap(seq):
    with pytest.raises(BudgetExceeded):
        enumerate_focused(seq("X /\\ X | . |- X /\\ X"), budget=SearchBudget(result_cap=3))


def test_budget_fields_are_positive():
    with pytest.raises(ValueError):
        SearchBudget(node_cap=0)


def test_units_laws(seq):
    assert count_classes(seq("X /\\ Y | X |- Top", UNITS), UNITS) == 1
    assert count_classes(seq("Bot | X, Y |- X * Y", UNITS), UNITS) == 1
    assert derive(seq("- | Bot, X |- Y", UNITS), UNITS) is not None
    assert derive(seq("- | X, Bot |- Y", UNITS), UNITS) is None


def test_implication_search(seq):
    s = seq("- | X -o Y, X |- Y", IMPLICATION)
    d = derive(s, IMPLICATION)
    assert d.premises[0].rule is FR.F2LI
    assert d.premises[0].premises[0].rule is FR.PASS
    t = seq("X -o Y | X |- Y", IMPLICATION)
    d = derive(t, IMPLICATION)
    check_focused(d, t, IMPLICATION)
    assert is_derivable(seq("X | . |- Y -o X * Y", IMPLICATION), IMPLICATION)


def test_exchange_uses_one_swap(seq):
    s = seq("- | Y, X |- X * Y", EXCHANGE)
    d = derive(s, EXCHANGE)
    assert d.rule is FR.EX
    check_focused(d, s, EXCHANGE)
    embedded = emb(d, s)
    assert ex_count(embedded) == 1
    c.check(embedded, s, EXCHANGE)


def test_exchange_prefers_identity_placement(seq):
    s = seq("- | X, Y |- X * Y", EXCHANGE)
    d = derive(s, EXCHANGE)
    assert d.pos == 0 and d.premises[0].pos == 0
    assert ex_count(emb(d, s)) == 0


def test_canonicalize_exchange(seq, caplog):
    s = seq("- | Y, X |- X * Y", EXCHANGE)
    given_derivation = c.ex(0, c.pass_(c.otimes_r(0, c.ax(), c.pass_(c.ax()))))
    d = canonicalize_exchange(s, given_derivation, EXCHANGE)
    assert d == derive(s, EXCHANGE)
    with pytest.raises(ProfileError):
        canonicalize_exchange(s, given_derivation, BASE)
    with caplog.at_level(logging.WARNING):
        assert count_classes(s, EXCHANGE) >= 1
    assert "unproven" in caplog.text


def test_canonicalize_exchange_stays_in_the_class(seq):
    s = seq("X /\\ X | . |- X", EXCHANGE)
    second = c.and_l(2, c.ax())
    d = canonicalize_exchange(s, second, EXCHANGE)
    assert d != derive(s, EXCHANGE)
    assert d == enumerate_focused(s, EXCHANGE)[1]
    assert emb(d, s) == second
    assert emb(canonicalize_exchange(s, c.and_l(1, c.ax()), EXCHANGE), s) == c.and_l(1, c.ax())


@settings(max_examples=40, deadline=None)
@given(sequents(max_leaves=2, max_context=1))
def test_search_agrees_with_unfocused_derivability(s):
    found = derive(s)
    assert (found is not None) == bool(enumerate_unfocused(s))
    if found is not None:
        check_focused(found, s)
        c.check(emb(found, s), s)


@settings(max_examples=25, deadline=None)
@given(sequents(max_leaves=2, max_context=1))
def test_exchange_is_conservative(s):
    if derive(s) is not None:
        assert derive(s, EXCHANGE) is not None
        assert derive(s, UNITS) is not None
        assert derive(s, IMPLICATION) is not None
