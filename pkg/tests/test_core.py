"""
Тесты для модуля `stylic.core`: действия на столбцах, инволюция θ и алфавит.
"""
import pytest
from pydantic import ValidationError

from stylic.core import (
    Alphabet,
    column_from_letters,
    column_height,
    column_letters,
    column_max,
    column_min,
    column_weight,
    column_word,
    is_frank,
    left_act,
    left_insert,
    right_act,
    right_act_word,
)
from stylic.errors import AlphabetError

A, B, C, D = 1, 2, 3, 4


def test_column_encoding() -> None:
    column = column_from_letters([D, B, A])

    assert column == 0b1011
    assert column_letters(column) == (A, B, D)
    assert column_word(column) == (D, B, A)
    assert column_height(column) == 3
    assert column_min(column) == A
    assert column_max(column) == D
    assert column_weight(column) == 7


def test_empty_column_has_no_min() -> None:
    assert column_min(0) is None
    assert column_max(0) is None
    assert column_word(0) == ()


@pytest.mark.parametrize(
    "letter, column, expected",
    [
        (A, 0b010, (0b001, B)),  # a вытесняет b
        (C, 0b011, (0b111, None)),  # c больше всех букв
        (B, 0b110, (0b110, B)),  # b вытесняет саму себя
        (A, 0, (0b001, None)),
    ],
)
def test_left_insert(letter: int, column: int, expected: tuple) -> None:
    assert left_insert(letter, column) == expected


@pytest.mark.parametrize(
    "column, letter, expected",
    [
        (0b010, A, (0b011, None)),  # a < min
        (0b001, B, (0b010, A)),
        (0b011, B, (0b011, B)),
        (0, C, (0b100, None)),
    ],
)
def test_right_act(column: int, letter: int, expected: tuple) -> None:
    assert right_act(column, letter) == expected


def test_left_act_reads_word_from_the_right() -> None:
    alphabet = Alphabet(n=4)
    word = alphabet.parse_word("dbabac")

    assert word == (D, B, A, B, A, C)
    assert left_act(word, 0) == alphabet.parse_column("dba")


def test_right_act_word_folds_left_to_right() -> None:
    assert right_act_word(0b001, (B, C)) == 0b100
    assert right_act_word(0b001, ()) == 0b001


@pytest.mark.parametrize(
    "column, letter, frank",
    [
        (0, A, False),
        (0b001, B, True),
        (0b010, A, False),
        (0b011, B, False),
        (0b011, C, True),
    ],
)
def test_is_frank(column: int, letter: int, frank: bool) -> None:
    assert is_frank(column, letter) is frank


def test_frank_action_keeps_height() -> None:
    alphabet = Alphabet(n=4)
    for column in alphabet.columns():
        for letter in alphabet.letters():
            if is_frank(column, letter):
                assert column_height(right_act(column, letter)[0]) == column_height(column)


def test_left_right_duality() -> None:
    """
    γ·w = θ(θ(w)·θ(γ)) для всех столбцов и слов длины <= 4 при n = 3.
    """
    alphabet = Alphabet(n=3)
    for word in alphabet.words(4):
        for column in alphabet.columns():
            dual = alphabet.theta_column(left_act(alphabet.theta_word(word), alphabet.theta_column(column)))
            assert right_act_word(column, word) == dual


def test_theta() -> None:
    alphabet = Alphabet(n=3)

    assert alphabet.theta_letter(A) == C
    assert alphabet.theta_column(0b011) == 0b110
    assert alphabet.theta_word((A, B)) == (B, C)
    assert alphabet.theta_word(alphabet.theta_word((A, C, C))) == (A, C, C)


def test_names() -> None:
    alphabet = Alphabet(n=4)

    assert alphabet.column_name(0) == "ε"
    assert alphabet.column_name(0b1011) == "dba"
    assert alphabet.word_name(()) == "ε"
    assert alphabet.parse_word("ε") == ()
    assert alphabet.parse_word("") == ()


def test_words_in_shortlex_order() -> None:
    words = list(Alphabet(n=2).words(2))
    assert words == [(), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]


@pytest.mark.parametrize("n", [0, 17])
def test_alphabet_size_is_validated(n: int) -> None:
    with pytest.raises(ValidationError):
        Alphabet(n=n)


def test_out_of_range_values_raise() -> None:
    alphabet = Alphabet(n=2)

    with pytest.raises(AlphabetError):
        alphabet.check_letter(3)
    with pytest.raises(AlphabetError):
        alphabet.check_column(4)
    with pytest.raises(AlphabetError):
        alphabet.parse_word("abc")
    with pytest.raises(AlphabetError):
        alphabet.parse_word("a1")
