"""
Модуль с базовыми объектами: буквы, столбцы, слова.

Буква - целое число от 1 до n (1 - наименьшая буква алфавита).
Столбец - подмножество алфавита, закодированное n-битной маской
(буква i хранится в бите i-1); как слово он читается в строго убывающем порядке.
Слово - кортеж букв.

Содержит левое действие (вставка Шенстеда в столбец), правое действие
(с вытеснением наибольшей буквы <= c) и инволюцию theta, обращающую порядок алфавита.
"""
from typing import ClassVar, Iterable, Iterator, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from stylic.errors import AlphabetError

Letter = int
Column = int
Word = Tuple[int, ...]

EMPTY_COLUMN: Column = 0
# Имя пустого столбца в текстовом выводе
EMPTY_NAME = "ε"
LETTER_NAMES = "abcdefghijklmnop"


def bit(letter: Letter) -> Column:
    """Столбец из одной буквы."""
    return 1 << (letter - 1)


def column_from_letters(letters: Iterable[Letter]) -> Column:
    column = EMPTY_COLUMN
    for letter in letters:
        column |= bit(letter)
    return column


def column_letters(column: Column) -> Tuple[Letter, ...]:
    """Буквы столбца в возрастающем порядке."""
    letters = []
    index = 1
    while column:
        if column & 1:
            letters.append(index)
        column >>= 1
        index += 1
    return tuple(letters)


def column_word(column: Column) -> Word:
    """Столбец как строго убывающее слово."""
    return tuple(reversed(column_letters(column)))


def column_height(column: Column) -> int:
    return bin(column).count("1")


def column_min(column: Column) -> Optional[Letter]:
    """Наименьшая буква столбца; None для пустого столбца (соглашение min(∅) = +∞)."""
    if not column:
        return None
    return (column & -column).bit_length()


def column_max(column: Column) -> Optional[Letter]:
    if not column:
        return None
    return column.bit_length()


def column_weight(column: Column) -> int:
    """Вес столбца - сумма индексов его букв; вес пустого столбца равен 0."""
    return sum(column_letters(column))


def contains(column: Column, letter: Letter) -> bool:
    return bool(column & bit(letter))


def left_insert(letter: Letter, column: Column) -> Tuple[Column, Optional[Letter]]:
    """
    Вставка Шенстеда буквы в столбец.

    Если буква больше всех букв столбца, она добавляется. Иначе наименьшая
    буква y >= letter вытесняется и заменяется на letter.

    Возвращает:
        Tuple[Column, Optional[Letter]]: новый столбец и вытесненная буква (или None).
    """
    at_least = column & ~(bit(letter) - 1)
    if not at_least:
        return column | bit(letter), None
    bumped = (at_least & -at_least).bit_length()
    return (column & ~bit(bumped)) | bit(letter), bumped


def left_act(word: Sequence[Letter], column: Column) -> Column:
    """Левое действие слова на столбец: (uv)·γ = u·(v·γ), буквы читаются справа налево."""
    for letter in reversed(word):
        column, _ = left_insert(letter, column)
    return column


def right_act(column: Column, letter: Letter) -> Tuple[Column, Optional[Letter]]:
    """
    Правое действие буквы на столбец.

    Если letter < min(γ) (в том числе для пустого столбца), буква добавляется.
    Иначе вытесняется b = max{x ∈ γ : x <= letter}; если letter ∈ γ, столбец не меняется.
    """
    at_most = column & ((1 << letter) - 1)
    if not at_most:
        return column | bit(letter), None
    bumped = at_most.bit_length()
    return (column & ~bit(bumped)) | bit(letter), bumped


def right_act_word(column: Column, word: Sequence[Letter]) -> Column:
    """Правое действие слова: буквы применяются слева направо."""
    for letter in word:
        column, _ = right_act(column, letter)
    return column


def is_frank(column: Column, letter: Letter) -> bool:
    """Действие буквы справа "откровенное": letter >= min(γ) и letter ∉ γ."""
    low = column_min(column)
    return low is not None and letter >= low and not contains(column, letter)


class Alphabet(BaseModel):
    """
    Контекст алфавита из n букв. Размер задается во время выполнения (1..16).
    """
    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, le=16, description="Размер алфавита")

    def letters(self) -> range:
        return range(1, self.n + 1)

    def columns(self) -> range:
        """Все столбцы, упорядоченные по значению битовой маски (∅ первый)."""
        return range(1 << self.n)

    def check_letter(self, letter: Letter) -> Letter:
        if not 1 <= letter <= self.n:
            raise AlphabetError(f"Буква {letter} вне алфавита 1..{self.n}")
        return letter

    def check_word(self, word: Iterable[Letter]) -> Word:
        return tuple(self.check_letter(letter) for letter in word)

    def check_column(self, column: Column) -> Column:
        if not 0 <= column < (1 << self.n):
            raise AlphabetError(f"Столбец {column} вне Γ(A) для n={self.n}")
        return column

    def theta_letter(self, letter: Letter) -> Letter:
        return self.n + 1 - letter

    def theta_column(self, column: Column) -> Column:
        return column_from_letters(self.theta_letter(x) for x in column_letters(column))

    def theta_word(self, word: Sequence[Letter]) -> Word:
        """Анти-гомоморфизм: слово обращается, буквы отражаются."""
        return tuple(self.theta_letter(x) for x in reversed(word))

    def letter_name(self, letter: Letter) -> str:
        return LETTER_NAMES[self.check_letter(letter) - 1]

    def word_name(self, word: Sequence[Letter]) -> str:
        if not word:
            return EMPTY_NAME
        return "".join(self.letter_name(x) for x in word)

    def column_name(self, column: Column) -> str:
        """Имя столбца как убывающего слова, "ε" для пустого."""
        return self.word_name(column_word(self.check_column(column)))

    def parse_word(self, text: str) -> Word:
        """
        Разбирает слово вида "dbabac"; "" и "ε" дают пустое слово.

        Исключения:
            AlphabetError: Если встречается символ вне алфавита.
        """
        if text in ("", EMPTY_NAME):
            return ()
        word = []
        for char in text:
            index = LETTER_NAMES.find(char)
            if index < 0:
                raise AlphabetError(f"Символ '{char}' не является буквой")
            word.append(self.check_letter(index + 1))
        return tuple(word)

    def parse_column(self, text: str) -> Column:
        return column_from_letters(self.parse_word(text))

    def words(self, max_length: int) -> Iterator[Word]:
        """Все слова длины <= max_length в порядке shortlex."""
        layer = [()]
        yield ()
        for _ in range(max_length):
            layer = [word + (letter,) for word in layer for letter in self.letters()]
            yield from layer
