import pytest
from hypothesis import given

from logic import calculus as c
from logic import congruence
from logic.calculus import (
    STRUCTURAL_LAWS,
    and_l_ctx,
    and_l_ctx_sequent,
    ccut,
    ccut_sequent,
    check,
    expand_ax,
    is_valid,
    scut,
    scut_sequent,
    structural_law,
)
from logic.errors import CutError, DerivationError
from logic.formula import UNIT, Sequent, Tensor, With
from tests.conftest import EXCHANGE, IMPLICATION, UNITS, X, Y, Z, formulas


def tensor_pair() -> c.Derivation:
    # - | X, Y |- X * Y
    return c.pass_(c.otimes_r(0, c.ax(), c.pass_(c.ax())))


def test_check_accepts_small_derivations(seq):
    check(c.pass_(c.ax()), seq("- | X |- X"))
    check(c.il(c.ir()), seq("I | . |- I"))
    check(tensor_pair(), seq("- | X, Y |- X * Y"))
    check(c.and_l(2, c.or_r(1, c.ax())), seq("X /\\ Y | . |- Y \\/ Z"))


def test_check_reports_path_to_bad_node(seq):
    bad = c.otimes_r(0, c.ax(), c.ax())
    with pytest.raises(DerivationError) as info:
        check(bad, seq("X | Y |- X * Y"))
    assert info.value.path == (1,)
    assert "ax" in info.value.reason


def test_check_rejects_rules_outside_profile(seq):
    assert not is_valid(c.ex(0, tensor_pair()), seq("- | Y, X |- X * Y"))
    assert is_valid(c.ex(0, tensor_pair()), seq("- | Y, X |- X * Y"), EXCHANGE)


def test_split_out_of_range(seq):
    with pytest.raises(DerivationError, match="split"):
        check(c.otimes_r(3, c.ax(), c.ir()), seq("X | . |- X * I"))


@pytest.mark.parametrize("name", STRUCTURAL_LAWS)
def test_structural_laws_check(name):
    s, d = structural_law(name, X, Y, Z)
    check(d, s)


def test_unknown_structural_law():
    with pytest.raises(ValueError):
        structural_law("braiding", X, Y)


@given(formulas(IMPLICATION))
def test_expanded_identity_checks(a):
    check(expand_ax(a), Sequent(a, (), a), IMPLICATION)


@given(formulas(UNITS))
def test_expanded_identity_checks_with_units(a):
    check(expand_ax(a), Sequent(a, (), a), UNITS)


@given(formulas(IMPLICATION, max_leaves=3))
def test_stoup_cut_of_identities(a):
    s = Sequent(a, (), a)
    d = scut(expand_ax(a), s, expand_ax(a), s, IMPLICATION)
    check(d, scut_sequent(s, s), IMPLICATION)


def test_stoup_cut_of_structural_laws():
    s, f = structural_law("right_unitor", X)
    t = Sequent(Tensor(X, UNIT), (), Tensor(X, UNIT))
    d = scut(f, s, expand_ax(Tensor(X, UNIT)), t)
    check(d, scut_sequent(s, t))


def test_stoup_cut_mismatch():
    s = Sequent(X, (), X)
    with pytest.raises(CutError):
        scut(c.ax(), s, c.ax(), Sequent(Y, (), Y))


def test_context_cut(seq):
    fs = seq("- | X |- X")
    gs = seq("- | X, Y |- X * Y")
    d = ccut(c.pass_(c.ax()), fs, tensor_pair(), gs, 0)
    check(d, ccut_sequent(fs, gs, 0))


def test_context_cut_mismatch(seq):
    with pytest.raises(CutError):
        ccut(c.pass_(c.ax()), seq("- | X |- X"), tensor_pair(), seq("- | X, Y |- X * Y"), 1)


def test_context_cut_needs_empty_stoup(seq):
    with pytest.raises(CutError, match="empty stoup"):
        ccut(c.and_l(1, c.ax()), seq("X /\\ Y | . |- X"), tensor_pair(), seq("- | X, Y |- X * Y"), 0)


def test_and_left_in_context(seq):
    s = seq("- | X, Y |- X * Y")
    d = and_l_ctx(1, tensor_pair(), s, 0, Z)
    assert and_l_ctx_sequent(1, s, 0, Z) == Sequent(None, (With(X, Z), Y), Tensor(X, Y))
    check(d, and_l_ctx_sequent(1, s, 0, Z))


def test_stoup_cut_associates_on_a_composable_triple(seq):
    fs, gs, hs = seq("X /\\ Y | . |- X"), seq("X | Y |- X * Y"), seq("X * Y | . |- (X * Y) \\/ Z")
    f = c.and_l(1, c.ax())
    g = c.otimes_r(0, c.ax(), c.pass_(c.ax()))
    h = c.or_r(1, c.otimes_l(c.otimes_r(0, c.ax(), c.pass_(c.ax()))))
    fg, gh = c.scut_sequent(fs, gs), c.scut_sequent(gs, hs)
    total = c.scut_sequent(fg, hs)
    assert total == seq("X /\\ Y | Y |- (X * Y) \\/ Z")
    outer = c.scut(c.scut(f, fs, g, gs), fg, h, hs)
    inner = c.scut(f, fs, c.scut(g, gs, h, hs), gh)
    c.check(outer, total)
    c.check(inner, total)
    assert congruence.equiv(outer, inner, total)


def test_context_cut_identities(seq):
    s = seq("- | X, Y |- X * Y")
    d = c.pass_(c.otimes_r(0, c.ax(), c.pass_(c.ax())))
    for pos, a in enumerate(s.context):
        cut = c.ccut(c.pass_(c.ax()), Sequent(None, (a,), a), d, s, pos)
        c.check(cut, s)
        assert congruence.equiv(cut, d, s)
    into = c.ccut(d, s, c.pass_(c.ax()), Sequent(None, (s.succedent,), s.succedent), 0)
    assert congruence.equiv(into, d, s)


def test_context_cut_commutes_with_stoup_cut(seq):
    fs, gs, es = seq("X /\\ Y | . |- X"), seq("X | Y |- X * Y"), seq("- | I, Y |- Y")
    f = c.and_l(1, c.ax())
    g = c.otimes_r(0, c.ax(), c.pass_(c.ax()))
    e = c.pass_(c.il(c.pass_(c.ax())))
    fg = c.scut_sequent(fs, gs)
    first = c.scut(f, fs, c.ccut(e, es, g, gs, 0), c.ccut_sequent(es, gs, 0))
    then = c.ccut(e, es, c.scut(f, fs, g, gs), fg, 0)
    target = seq("X /\\ Y | I, Y |- X * Y")
    c.check(first, target)
    c.check(then, target)
    assert congruence.equiv(first, then, target)
