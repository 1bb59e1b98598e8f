import pytest
from hypothesis import given

from logic.errors import ParseError, ProfileError
from logic.formula import (
    TOP,
    UNIT,
    Limp,
    Plus,
    Sequent,
    Tensor,
    With,
    connectives,
    conj,
    impconj,
    is_irreducible_stoup,
    is_negative,
    parse_formula,
    parse_sequent,
    print_formula,
    print_sequent,
    sequent_connectives,
)
from tests.conftest import IMPLICATION, UNITS, X, Y, Z, formulas


def test_binary_connectives_associate_right():
    assert parse_formula("X * Y * Z") == Tensor(X, Tensor(Y, Z))
    assert parse_formula("(X * Y) * Z") == Tensor(Tensor(X, Y), Z)


def test_precedence_tensor_and_or():
    assert parse_formula("X * Y /\\ Z") == With(Tensor(X, Y), Z)
    assert parse_formula("X \\/ Y /\\ Z") == Plus(X, With(Y, Z))
    assert parse_formula("X -o Y \\/ Z", IMPLICATION) == Limp(X, Plus(Y, Z))


def test_printer_brackets_mixed_connectives():
    assert print_formula(With(Tensor(X, Y), Z)) == "(X * Y) /\\ Z"
    assert print_formula(Tensor(X, Tensor(Y, Z))) == "X * Y * Z"
    assert print_formula(Tensor(Tensor(X, Y), Z)) == "(X * Y) * Z"


def test_sequent_syntax():
    s = parse_sequent("X /\\ Y | . |- (X /\\ Y) \\/ Z")
    assert s == Sequent(With(X, Y), (), Plus(With(X, Y), Z))
    assert parse_sequent("- | X, Y |- X * Y") == Sequent(None, (X, Y), Tensor(X, Y))
    assert print_sequent(Sequent(None, (), X)) == "- | . |- X"
    assert print_sequent(s) == "X /\\ Y | . |- (X /\\ Y) \\/ Z"


def test_parse_error_reports_offset():
    with pytest.raises(ParseError) as info:
        parse_formula("X * )")
    assert info.value.position == 4


def test_parse_error_on_missing_turnstile():
    with pytest.raises(ParseError):
        parse_sequent("X | Y")


def test_units_and_implication_are_profile_gated():
    with pytest.raises(ProfileError, match="units profile"):
        parse_formula("Top")
    with pytest.raises(ProfileError, match="implication profile"):
        parse_formula("X -o Y")
    assert parse_formula("Top", UNITS) == TOP


def test_connective_count_includes_units():
    assert connectives(X) == 0
    assert connectives(Tensor(UNIT, X)) == 2
    assert sequent_connectives(parse_sequent("X * Y | Z |- I")) == 2


def test_conj_and_impconj():
    assert conj(With(X, With(Y, Z))) == [X, Y, Z]
    assert conj(Tensor(X, Y)) == [Tensor(X, Y)]
    assert impconj(With(Limp(X, Y), Z)) == [((X,), Y), ((), Z)]
    assert impconj(Limp(X, Limp(Y, Z))) == [((X, Y), Z)]


def test_polarity_tables():
    assert is_negative(With(X, Y))
    assert not is_negative(TOP)
    assert is_negative(TOP, UNITS)
    assert is_negative(Limp(X, Y), IMPLICATION)
    assert is_irreducible_stoup(None)
    assert is_irreducible_stoup(With(X, Y))
    assert not is_irreducible_stoup(Tensor(X, Y))
    assert not is_irreducible_stoup(UNIT)


@given(formulas(IMPLICATION))
def test_printed_formulas_parse_back(a):
    assert parse_formula(print_formula(a), IMPLICATION) == a


@given(formulas(UNITS))
def test_printed_unit_formulas_parse_back(a):
    assert parse_formula(print_formula(a), UNITS) == a
