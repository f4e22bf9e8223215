"""
Модуль с полустандартными таблицами: P-символ Шенстеда через вставку в столбцы,
слово чтения по столбцам и проверка плактической эквивалентности.

Таблица хранится как кортеж непустых столбцов слева направо.
"""
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from stylic.core import (
    Alphabet,
    Column,
    Letter,
    Word,
    column_from_letters,
    column_height,
    column_letters,
    column_word,
    left_insert,
)
from stylic.errors import TableauError

Tableau = Tuple[Column, ...]


def is_tableau(columns: Sequence[Column]) -> bool:
    """
    Проверяет, что последовательность столбцов образует полустандартную таблицу:
    столбцы непустые, высоты не возрастают, строки не убывают слева направо.
    """
    for left, right in zip(columns, columns[1:]):
        left_letters = column_letters(left)
        right_letters = column_letters(right)
        if len(right_letters) > len(left_letters):
            return False
        if any(x > y for x, y in zip(left_letters, right_letters)):
            return False
    return all(columns)


def check_tableau(columns: Sequence[Column]) -> Tableau:
    if not is_tableau(columns):
        raise TableauError(f"Последовательность столбцов {list(columns)} не является таблицей")
    return tuple(columns)


def insert_letter(tableau: Tableau, letter: Letter) -> Tableau:
    """Вставка буквы в таблицу: вытесненная буква вставляется в следующий столбец."""
    columns = list(tableau)
    carried = letter
    for index, column in enumerate(columns):
        columns[index], carried = left_insert(carried, column)
        if carried is None:
            return tuple(columns)
    columns.append(column_from_letters([carried]))
    return tuple(columns)


def p_symbol(word: Sequence[Letter]) -> Tableau:
    """
    P-символ слова x1...xk: x1 → (x2 → (... → (xk → ∅))).

    Буквы вставляются в столбцы начиная с самой правой, поэтому первый
    столбец результата совпадает с word·∅.
    """
    tableau: Tableau = ()
    for letter in reversed(word):
        tableau = insert_letter(tableau, letter)
    return tableau


def column_reading_word(tableau: Sequence[Column]) -> Word:
    """Слово чтения: столбцы слева направо, каждый как убывающее слово."""
    word: List[Letter] = []
    for column in check_tableau(tableau):
        word.extend(column_word(column))
    return tuple(word)


def plactic_equivalent(u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    return p_symbol(u) == p_symbol(v)


def shape(tableau: Sequence[Column]) -> Tuple[int, ...]:
    """Высоты столбцов."""
    return tuple(column_height(column) for column in tableau)


def enumerate_tableaux(n: int, max_cells: int) -> Iterator[Tableau]:
    """Все таблицы с буквами из 1..n и не более чем max_cells клетками (включая пустую)."""
    alphabet = Alphabet(n=n)
    nonempty = [c for c in alphabet.columns() if c]

    def extend(prefix: Tableau, cells: int) -> Iterator[Tableau]:
        yield prefix
        for column in nonempty:
            height = column_height(column)
            if cells + height > max_cells:
                continue
            candidate = prefix + (column,)
            if is_tableau(candidate):
                yield from extend(candidate, cells + height)

    yield from extend((), 0)


def knuth_relation_instances(n: int) -> Iterator[Tuple[Word, Word]]:
    """
    Все экземпляры соотношений Кнута на алфавите из n букв:
    bac = bca, acb = cab при a<b<c; bab = bba, aba = baa при a<b.
    """
    for a, b, c in combinations(range(1, n + 1), 3):
        yield (b, a, c), (b, c, a)
        yield (a, c, b), (c, a, b)
    for a, b in combinations(range(1, n + 1), 2):
        yield (b, a, b), (b, b, a)
        yield (a, b, a), (b, a, a)


def render_french(tableau: Sequence[Column], alphabet: Alphabet) -> str:
    """
    Рисует таблицу во французской нотации: первая строка внизу,
    как на рисунке с таблицей dbabac.
    """
    columns = [column_letters(column) for column in check_tableau(tableau)]
    if not columns:
        return alphabet.word_name(())
    height = len(columns[0])
    lines = []
    for row in reversed(range(height)):
        cells = [alphabet.letter_name(col[row]) for col in columns if row < len(col)]
        lines.append(" ".join(cells))
    return "\n".join(lines)
