import pytest

from logic import calculus as c
from logic.formula import UNIT, Sequent
from logic.search import SearchBudget, enumerate_unfocused
from services.corpus import (
    CHECKS,
    CheckOptions,
    CorpusReport,
    check_bijection,
    check_canonicity,
    check_cut_laws,
    check_unit_laws,
    formulas_of_size,
    run_checks,
    sequent_corpus,
)
from tests.conftest import BASE, EXCHANGE, IMPLICATION, UNITS, X, Y


def test_formulas_of_size():
    assert formulas_of_size(0, ("X", "Y"), BASE) == (X, Y)
    assert len(formulas_of_size(1, ("X", "Y"), BASE)) == 1 + 3 * 4
    assert len(formulas_of_size(1, ("X", "Y"), UNITS)) == 3 + 3 * 4
    assert len(formulas_of_size(1, ("X", "Y"), IMPLICATION)) == 1 + 4 * 4


def test_corpus_enumerates_smallest_first():
    corpus = list(sequent_corpus(max_connectives=0, max_context=0))
    assert len(corpus) == 6
    assert corpus[0] == Sequent(None, (), X)
    assert Sequent(Y, (), X) in corpus
    sizes = [sum(1 for _ in s.context) for s in sequent_corpus(max_connectives=1, max_context=1)]
    assert max(sizes) == 1


def test_reports_merge():
    a = CorpusReport(checked=2, failures=["one"])
    b = CorpusReport(checked=1, skipped=3, caveats=["note"])
    merged = a.merge(b)
    assert (merged.checked, merged.skipped, merged.failures, merged.caveats) == (3, 3, ["one"], ["note"])
    assert not merged.ok and b.ok


def test_budget_turns_into_skip():
    opts = CheckOptions(budget=SearchBudget(max_connectives=1))
    s = Sequent(UNIT, (UNIT,), X)
    report = check_canonicity(s, BASE, opts)
    assert report.skipped == 1 and report.checked == 0


def test_unit_laws_need_units():
    assert check_unit_laws(Sequent(None, (X,), X), BASE).skipped == 1
    assert check_unit_laws(Sequent(None, (X,), X), UNITS).ok


def test_small_corpus_passes():
    sequents = list(sequent_corpus(max_connectives=1, max_context=1))
    reports = run_checks(sequents, BASE)
    assert set(reports) == set(CHECKS)
    for name, report in reports.items():
        assert report.ok, (name, report.failures[:3])


def test_one_unfocusable_derivation_only_caveats_itself(seq):
    s = seq("X -o Y | X /\\ X |- (Y /\\ Y) \\/ Z", IMPLICATION)
    ds = enumerate_unfocused(s, IMPLICATION)
    stuck = c.or_r(1, c.and_r(
        c.limp_l(1, c.pass_(c.and_l(1, c.ax())), c.ax()),
        c.limp_l(1, c.pass_(c.and_l(2, c.ax())), c.ax()),
    ))
    assert stuck in ds
    report = check_bijection(s, IMPLICATION)
    assert report.checked == 1 and report.ok
    assert any(str(stuck) in msg for msg in report.caveats)
    assert 0 < len(report.caveats) < len(ds)


def test_cut_laws_compose_with_partner_sequents(seq):
    report = check_cut_laws(seq("X /\\ Y | . |- X"), BASE)
    assert report.checked == 1 and report.ok
    report = check_cut_laws(seq("- | X, Y |- X * Y"), BASE, CheckOptions(partner_connectives=0))
    assert report.checked == 1 and report.ok


@pytest.mark.slow
@pytest.mark.parametrize("profile", [BASE, UNITS, IMPLICATION, EXCHANGE])
def test_corpus_per_profile_at_three_connectives(profile):
    sequents = list(sequent_corpus(max_connectives=3, max_context=2, profile=profile))
    reports = run_checks(sequents, profile)
    for name, report in reports.items():
        assert report.ok, (name, report.failures[:3])
