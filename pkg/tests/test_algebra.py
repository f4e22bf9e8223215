"""
Тесты для модуля `stylic.algebra` и точной линейной алгебры `stylic.linalg`.
"""
import gc
import weakref
from fractions import Fraction

import pytest

from stylic.algebra import (
    AlgebraElement,
    basis_change_determinant,
    basis_realization_check,
    corner_dimension,
    export_idempotents,
    idempotent,
    idempotent_system,
    triangular_basis,
    verify_idempotent_system,
)
from stylic.errors import AlgebraError
from stylic.linalg import ExactMatrix, rank_of
from stylic.monoid import enumerate_monoid, get_monoid
from stylic.quiver import default_search_length

A, B = 1, 2


def test_letter_is_idempotent_in_algebra() -> None:
    styl1 = get_monoid(1)
    one = AlgebraElement.one(styl1)
    a = AlgebraElement.letter(styl1, A)

    assert not (one - a) * a
    assert a * a == a
    assert (one - a) + a == one


def test_idempotents_for_one_letter() -> None:
    styl1 = get_monoid(1)

    assert idempotent(styl1, 0).coeffs == {0: 1, 1: -1}
    assert idempotent(styl1, 1).coeffs == {1: 1}


def test_idempotents_for_two_letters() -> None:
    """
    e_∅ = 1 - a - b + ab, e_a = a - ba, e_b = b - ab, e_ba = ba.
    """
    styl2 = get_monoid(2)
    ab, ba = styl2.id_of_word((A, B)), styl2.id_of_word((B, A))

    assert idempotent(styl2, 0b00).coeffs == {0: 1, 1: -1, 2: -1, ab: 1}
    assert idempotent(styl2, 0b01).coeffs == {1: 1, ba: -1}
    assert idempotent(styl2, 0b10).coeffs == {2: 1, ab: -1}
    assert idempotent(styl2, 0b11).coeffs == {ba: 1}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_idempotent_system_is_complete_and_primitive(n: int) -> None:
    results = verify_idempotent_system(get_monoid(n))

    assert len(results) == 4
    assert all(result.passed for result in results), results
    assert len(idempotent_system(get_monoid(n))) == 2 ** n


def test_e_gamma_absorbs_gamma() -> None:
    styl3 = get_monoid(3)
    for gamma in styl3.alphabet.columns():
        e = idempotent(styl3, gamma)
        assert e * AlgebraElement.basis(styl3, styl3.id_of_column(gamma)) == e
        assert e * e == e


def test_axa_identities() -> None:
    """
    Для x из букв >= a: axa = xa, (1-a)xa = 0, (1-a)x(1-a) = (1-a)x.
    """
    styl3 = get_monoid(3)
    one = AlgebraElement.one(styl3)
    for x in styl3.ids():
        word = styl3.rep_words[x]
        low = min(word) if word else 3
        ex = AlgebraElement.basis(styl3, x)
        for letter in range(1, low + 1):
            a = AlgebraElement.letter(styl3, letter)
            assert a * ex * a == ex * a
            assert not (one - a) * ex * a
            assert (one - a) * ex * (one - a) == (one - a) * ex


def test_corner_dimensions_for_one_letter() -> None:
    styl1 = get_monoid(1)

    assert corner_dimension(styl1, 0, 0) == 1
    assert corner_dimension(styl1, 1, 1) == 1
    assert corner_dimension(styl1, 0, 1) == 0
    assert corner_dimension(styl1, 1, 0) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_corner_dimensions_sum_to_cardinality(n: int) -> None:
    monoid = get_monoid(n)
    columns = list(monoid.alphabet.columns())
    total = sum(corner_dimension(monoid, g, d) for g in columns for d in columns)
    assert total == len(monoid)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_triangular_basis(n: int) -> None:
    monoid = get_monoid(n)
    basis = triangular_basis(monoid)

    assert len(basis) == len(monoid)
    assert basis[monoid.identity_id] == idempotent(monoid, 0)
    assert basis_change_determinant(monoid) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_basis_realization(n: int) -> None:
    result = basis_realization_check(get_monoid(n), default_search_length(n))
    assert result.passed, result.witness


@pytest.mark.parametrize("n", [2, 3, 4])
def test_basis_realization_within_twice_alphabet_size(n: int) -> None:
    result = basis_realization_check(get_monoid(n), 2 * n)
    assert result.passed, result.witness


def test_idempotent_cache_is_released_with_monoid() -> None:
    """
    Идемпотенты и углы кэшируются на самом моноиде и не удерживают его после использования.
    """
    monoid = enumerate_monoid(2)
    assert idempotent(monoid, 0b01) is idempotent(monoid, 0b01)
    assert corner_dimension(monoid, 0b01, 0b01) == 1

    ref = weakref.ref(monoid)
    del monoid
    gc.collect()
    assert ref() is None


def test_basis_realization_reports_short_search() -> None:
    result = basis_realization_check(get_monoid(3), 0)

    assert not result.passed
    assert "нет слова" in result.witness


def test_mixing_monoids_raises() -> None:
    with pytest.raises(AlgebraError):
        AlgebraElement.one(get_monoid(1)) + AlgebraElement.one(get_monoid(2))


def test_rational_coefficients() -> None:
    styl2 = get_monoid(2)
    half = AlgebraElement.letter(styl2, A) * Fraction(1, 2)

    assert half.coefficient(1) == Fraction(1, 2)
    assert (half + half).coeffs == {1: 1}
    assert half.terms()[0].coeff_denominator == 2


def test_export_idempotents() -> None:
    exported = export_idempotents(get_monoid(2))

    assert [item.gamma for item in exported] == [0, 1, 2, 3]
    assert len(exported[0].terms) == 4


def test_exact_matrix() -> None:
    matrix = ExactMatrix([[1, 2], [2, 4]])

    assert matrix.rank() == 1
    assert matrix.determinant() == 0
    assert matrix.nullspace() == [[Fraction(-2), Fraction(1)]]
    assert matrix.left_nullspace() == [[Fraction(-2), Fraction(1)]]
    assert ExactMatrix([[Fraction(1, 2), 0], [0, 4]]).determinant() == 2
    assert rank_of([], 3) == 0


def test_exact_matrix_over_prime_field() -> None:
    assert ExactMatrix([[1, 1], [1, -1]]).rank() == 2
    assert ExactMatrix([[1, 1], [1, -1]], characteristic=2).rank() == 1
    with pytest.raises(ValueError):
        ExactMatrix([[1, 0]], characteristic=2).nullspace()
