import logging

import pytest

from logic import calculus as c
from logic import congruence
from logic.errors import BudgetExceeded, RewriteError
from logic.labels import Direction, EquationId
from logic.search import enumerate_unfocused
from tests.conftest import EXCHANGE, IMPLICATION, UNITS


def tensor_pair():
    return c.pass_(c.otimes_r(0, c.ax(), c.pass_(c.ax())))


def test_every_profile_equation_has_rewrites():
    for eq_id in EquationId:
        eq = congruence.EQUATION_INFO[eq_id]
        assert eq.id is eq_id
        assert callable(eq.lr) and callable(eq.rl)
    assert congruence.EQUATION_INFO[EquationId.LIMPL_ANDR].supplemental
    assert congruence.EQUATION_INFO[EquationId.EX_PASS].imported


def test_eta_unit_step(seq):
    s = seq("I | . |- I")
    assert congruence.rewrite_once(c.ax(), s, (), EquationId.ETA_I) == c.il(c.ir())
    back = congruence.rewrite_once(c.il(c.ir()), s, (), EquationId.ETA_I, Direction.RL)
    assert back == c.ax()


def test_missing_redex(seq):
    with pytest.raises(RewriteError):
        congruence.rewrite_once(c.ax(), seq("X | . |- X"), (), EquationId.ETA_I)


def test_equation_outside_profile(seq):
    with pytest.raises(RewriteError, match="not part of"):
        congruence.rewrite_once(tensor_pair(), seq("- | X, Y |- X * Y"), (), EquationId.EX_PASS)


def test_applicable_lists_redexes(seq):
    redexes = congruence.applicable(c.ax(), seq("I | . |- I"))
    assert any(r.equation is EquationId.ETA_I and r.direction is Direction.LR for r in redexes)
    assert redexes[0].to_dict()["path"] == []


def test_tensor_right_moves_below_pass(seq):
    s = seq("- | X, Y |- X * Y")
    d = c.otimes_r(1, c.pass_(c.ax()), c.pass_(c.ax()))
    c.check(d, s)
    assert congruence.normalize_rw(d, s) == tensor_pair()


def test_normal_forms_are_fixpoints(seq):
    s = seq("X /\\ Y | . |- X /\\ Y")
    normal = congruence.normalize_rw(c.ax(), s)
    assert normal == c.and_r(c.and_l(1, c.ax()), c.and_l(2, c.ax()))
    assert congruence.is_normal(normal, s)
    assert congruence.normalize_rw(normal, s) == normal


def test_rewrite_step_cap(seq):
    s = seq("X /\\ Y | . |- X /\\ Y")
    with pytest.raises(RewriteError, match="did not terminate"):
        congruence.normalize_rw(c.ax(), s, step_cap=0)


def test_equiv_relates_eta_forms(seq):
    assert congruence.equiv(c.ax(), c.il(c.ir()), seq("I | . |- I"))


def test_equiv_separates_projections(seq):
    s = seq("X /\\ Y | . |- X \\/ Y")
    first = c.and_l(1, c.or_r(1, c.ax()))
    second = c.and_l(2, c.or_r(2, c.ax()))
    assert not congruence.equiv(first, second, s)
    assert not congruence.equiv_oracle(first, second, s)


def test_equiv_relates_permuted_rules(seq):
    s = seq("X /\\ Y | . |- X \\/ Y")
    assert congruence.equiv(c.or_r(1, c.and_l(1, c.ax())), c.and_l(1, c.or_r(1, c.ax())), s)
    assert congruence.equiv_oracle(c.or_r(1, c.and_l(1, c.ax())), c.and_l(1, c.or_r(1, c.ax())), s)


def test_partition_counts_classes(seq):
    s = seq("X /\\ Y | . |- X \\/ Y")
    ds = enumerate_unfocused(s)
    assert len(ds) == 4
    assert len(congruence.partition(ds, s)) == 2


def test_oracle_gate(seq):
    s = seq("(X * Y) * X | . |- X * (Y * X)")
    with pytest.raises(BudgetExceeded):
        congruence.equiv_oracle(c.ax(), c.ax(), s, max_connectives=2)


def test_collapse_units(seq):
    s = seq("X /\\ Y | . |- Top", UNITS)
    assert congruence.collapse_units(c.and_l(1, c.top_r()), s, UNITS) == c.top_r()
    t = seq("Bot | X |- Y", UNITS)
    assert congruence.collapse_units(c.bot_l(), t, UNITS) == c.bot_l()


def test_exchange_involution_normalizes(seq):
    s = seq("- | X, Y |- X * Y", EXCHANGE)
    d = c.ex(0, c.ex(0, tensor_pair()))
    assert congruence.normalize_rw(d, s, EXCHANGE) == tensor_pair()


def test_exchange_equiv_falls_back_to_oracle(seq, caplog):
    s = seq("- | X, Y |- X * Y", EXCHANGE)
    with caplog.at_level(logging.WARNING):
        assert congruence.equiv(c.ex(0, c.ex(0, tensor_pair())), tensor_pair(), s, EXCHANGE)
    assert "oracle" in caplog.text


def test_ex_count():
    assert congruence.ex_count(c.ex(0, c.ex(1, c.ax()))) == 2
    assert congruence.ex_count(tensor_pair()) == 0


def test_implication_left_distributes_over_conjunction(seq):
    s = seq("X -o Y | X |- Y /\\ Y", IMPLICATION)
    stacked = c.limp_l(1, c.pass_(c.ax()), c.and_r(c.ax(), c.ax()))
    spread = c.and_r(c.limp_l(1, c.pass_(c.ax()), c.ax()), c.limp_l(1, c.pass_(c.ax()), c.ax()))
    assert congruence.rewrite_once(stacked, s, (), EquationId.LIMPL_ANDR, Direction.LR, IMPLICATION) == spread
    assert congruence.rewrite_once(spread, s, (), EquationId.LIMPL_ANDR, Direction.RL, IMPLICATION) == stacked
    assert congruence.equiv(stacked, spread, s, IMPLICATION)
