"""
Модуль стилического моноида Styl(A).

Элемент моноида - отображение Γ(A) → Γ(A), заданное левым действием слова
на столбцы; два элемента равны тогда и только тогда, когда равны их таблицы
действия. Моноид перечисляется обходом в ширину от единицы с умножением
справа на буквы, поэтому представляющее слово каждого элемента - первое в
порядке shortlex.
"""
import logging
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Set, Tuple

from stylic.config import get_settings
from stylic.core import (
    Alphabet,
    Column,
    EMPTY_COLUMN,
    Letter,
    Word,
    column_from_letters,
    column_word,
    left_act,
    left_insert,
)
from stylic.errors import MonoidError
from stylic.models import ElementExport, MonoidExport

logger = logging.getLogger(__name__)

Table = Tuple[Column, ...]


def action_table(word: Sequence[Letter], n: int) -> Table:
    """Таблица действия слова: table[γ] = word·γ для всех столбцов."""
    return tuple(left_act(word, column) for column in range(1 << n))


def stylic_equivalent(u: Sequence[Letter], v: Sequence[Letter], n: int) -> bool:
    """Стилическая эквивалентность без перечисления моноида."""
    return action_table(u, n) == action_table(v, n)


@dataclass(frozen=True)
class StylElement:
    """
    Элемент Styl(A): таблица действия и одно представляющее слово.
    Равенство элементов определяется только таблицей.
    """
    table: Table
    rep_word: Word = field(compare=False)
    id: int = field(compare=False)


class StylMonoid:
    """
    Перечисленный стилический моноид над алфавитом из n букв.

    После построения моноид не изменяется; мемоизация идеалов защищена блокировкой,
    таблица умножения (если включена) вычисляется целиком при построении.
    """

    def __init__(self, n: int, memoize_mult: bool = True, mult_table_budget: Optional[int] = None):
        self.alphabet = Alphabet(n=n)
        self.n = n
        self.tables: List[Table] = []
        self.rep_words: List[Word] = []
        self.index: Dict[Table, int] = {}
        # right_letter[x][a-1] = x·a, left_letter[x][a-1] = a·x
        self.right_letter: List[Tuple[int, ...]] = []
        self.left_letter: List[Tuple[int, ...]] = []
        self._generator_tables: List[Table] = [
            tuple(left_insert(a, column)[0] for column in self.alphabet.columns())
            for a in self.alphabet.letters()
        ]
        self._ideals: Dict[int, frozenset] = {}
        self._memo: Dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self._mult: Optional[List[List[int]]] = None

        self._enumerate()
        self.identity_id = 0
        self.generator_ids = tuple(self.right_letter[self.identity_id])

        budget = mult_table_budget or get_settings().STYLIC_MULT_TABLE_BUDGET
        if memoize_mult and len(self) ** 2 <= budget:
            self._mult = [[self._compose(i, j) for j in range(len(self))] for i in range(len(self))]
            logger.info(f"Таблица умножения Styl({n}) сохранена: {len(self) ** 2} ячеек")
        elif memoize_mult:
            logger.info(f"Таблица умножения Styl({n}) не помещается в лимит {budget}, умножение по запросу")

    def _enumerate(self) -> None:
        identity = tuple(self.alphabet.columns())
        self.tables.append(identity)
        self.rep_words.append(())
        self.index[identity] = 0
        right: List[List[int]] = []
        position = 0
        while position < len(self.tables):
            table = self.tables[position]
            successors = []
            for a, generator in zip(self.alphabet.letters(), self._generator_tables):
                product = tuple(table[column] for column in generator)
                target = self.index.get(product)
                if target is None:
                    target = len(self.tables)
                    self.tables.append(product)
                    self.rep_words.append(self.rep_words[position] + (a,))
                    self.index[product] = target
                successors.append(target)
            right.append(successors)
            position += 1
        self.right_letter = [tuple(row) for row in right]
        self.left_letter = [
            tuple(
                self.index[tuple(generator[column] for column in table)]
                for generator in self._generator_tables
            )
            for table in self.tables
        ]
        logger.info(f"Styl({self.n}) перечислен: {len(self.tables)} элементов")

    def __len__(self) -> int:
        return len(self.tables)

    def ids(self) -> range:
        return range(len(self.tables))

    def element(self, element_id: int) -> StylElement:
        if not 0 <= element_id < len(self.tables):
            raise MonoidError(f"Элемент {element_id} не принадлежит Styl({self.n})")
        return StylElement(self.tables[element_id], self.rep_words[element_id], element_id)

    def elements(self) -> List[StylElement]:
        return [self.element(i) for i in self.ids()]

    def _compose(self, x: int, y: int) -> int:
        tx = self.tables[x]
        return self.index[tuple(tx[column] for column in self.tables[y])]

    def mul(self, x: int, y: int) -> int:
        """Произведение по идентификаторам: (xy)·γ = x·(y·γ)."""
        if self._mult is not None:
            return self._mult[x][y]
        return self._compose(x, y)

    def id_of_word(self, word: Sequence[Letter]) -> int:
        element_id = self.identity_id
        for letter in reversed(self.alphabet.check_word(word)):
            element_id = self.left_letter[element_id][letter - 1]
        return element_id

    def element_of_word(self, word: Sequence[Letter]) -> StylElement:
        """Образ слова при каноническом гомоморфизме μ."""
        return self.element(self.id_of_word(word))

    def id_of_column(self, column: Column) -> int:
        """μ(γ) для столбца, прочитанного как убывающее слово."""
        return self.id_of_word(column_word(self.alphabet.check_column(column)))

    def multiply(self, x: StylElement, y: StylElement) -> StylElement:
        return self.element(self.mul(self._own(x), self._own(y)))

    def _own(self, x: StylElement) -> int:
        if self.index.get(x.table) != x.id:
            raise MonoidError("Элемент принадлежит другому моноиду")
        return x.id

    def stylic_equivalent(self, u: Sequence[Letter], v: Sequence[Letter]) -> bool:
        return self.id_of_word(u) == self.id_of_word(v)

    def eta(self, x: int) -> Column:
        """η(x) = x·∅, первый столбец N(x) и P(rep_word)."""
        return self.tables[x][EMPTY_COLUMN]

    def lfix(self, x: int) -> Column:
        """Буквы a с a·x = x."""
        return column_from_letters(
            a for a in self.alphabet.letters() if self.left_letter[x][a - 1] == x
        )

    def rfix_scan(self, x: int) -> Column:
        """Буквы a с x·a = x, прямым перебором."""
        return column_from_letters(
            a for a in self.alphabet.letters() if self.right_letter[x][a - 1] == x
        )

    def theta(self, x: int) -> int:
        """Анти-автоморфизм θ на элементах."""
        return self.id_of_word(self.alphabet.theta_word(self.rep_words[x]))

    def theta_element(self, x: StylElement) -> StylElement:
        return self.element(self.theta(self._own(x)))

    def rfix(self, x: int) -> Column:
        """rfix(x) = θ(η(θ(x)))."""
        return self.alphabet.theta_column(self.eta(self.theta(x)))

    def ideal(self, y: int) -> frozenset:
        """Двусторонний идеал M·y·M, замыкание по умножению на буквы с обеих сторон."""
        cached = self._ideals.get(y)
        if cached is not None:
            return cached
        seen: Set[int] = {y}
        stack = [y]
        while stack:
            z = stack.pop()
            for neighbour in self.right_letter[z] + self.left_letter[z]:
                if neighbour not in seen:
                    seen.add(neighbour)
                    stack.append(neighbour)
        result = frozenset(seen)
        with self._lock:
            self._ideals.setdefault(y, result)
        return result

    def memoized(self, key: Hashable, build: Callable[[], Any]) -> Any:
        """
        Значение, вычисленное над этим моноидом, кэшируется на самом экземпляре
        и освобождается вместе с ним. build вызывается без блокировки.
        """
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        value = build()
        with self._lock:
            return self._memo.setdefault(key, value)

    def j_leq(self, x: int, y: int) -> bool:
        """x <=_J y тогда и только тогда, когда x ∈ M y M."""
        return x in self.ideal(y)

    def linear_extension(self) -> List[int]:
        """Линейное продолжение <=_J: по размеру идеала, затем по идентификатору."""
        return sorted(self.ids(), key=lambda x: (len(self.ideal(x)), x))

    def is_idempotent(self, x: int) -> bool:
        return self.mul(x, x) == x

    def idempotents(self) -> List[int]:
        return [x for x in self.ids() if self.is_idempotent(x)]

    def j_minimum(self, candidates: Sequence[int]) -> int:
        """
        Наименьший по <=_J элемент множества.

        Исключения:
            MonoidError: Если минимум не единственен.
        """
        minima = [x for x in candidates if all(self.j_leq(x, y) for y in candidates)]
        if len(minima) != 1:
            raise MonoidError(f"У множества {list(candidates)} нет наименьшего элемента по J")
        return minima[0]

    def lfix_min_idempotent(self, x: int) -> int:
        """min_J {e : e² = e, e·x = x}."""
        return self.j_minimum([e for e in self.idempotents() if self.mul(e, x) == x])

    def rfix_min_idempotent(self, x: int) -> int:
        """min_J {e : e² = e, x·e = x}."""
        return self.j_minimum([e for e in self.idempotents() if self.mul(x, e) == x])

    def to_export(self) -> MonoidExport:
        return MonoidExport(
            n=self.n,
            size=len(self),
            elements=[
                ElementExport(
                    id=i,
                    rep_word=self.alphabet.word_name(self.rep_words[i]),
                    table=list(self.tables[i]),
                )
                for i in self.ids()
            ],
        )


def enumerate_monoid(n: int, memoize_mult: bool = True) -> StylMonoid:
    """
    Перечисляет Styl(A) для алфавита из n букв.

    Исключения:
        pydantic.ValidationError: Если n вне диапазона 1..16.
    """
    return StylMonoid(n, memoize_mult=memoize_mult)


def get_monoid(n: int, memoize_mult: bool = True) -> StylMonoid:
    """
    Общий для процесса кэш перечисленных моноидов.
    get_monoid(3), get_monoid(3, True) и get_monoid(3, memoize_mult=True) - один объект.
    """
    return _shared_monoid(int(n), bool(memoize_mult))


@lru_cache(maxsize=None)
def _shared_monoid(n: int, memoize_mult: bool) -> StylMonoid:
    return enumerate_monoid(n, memoize_mult=memoize_mult)


def submonoid_closure(monoid: StylMonoid, letters: Sequence[Letter]) -> List[int]:
    """Подмоноид, порожденный буквами letters, в порядке обхода в ширину."""
    order = [monoid.identity_id]
    seen = {monoid.identity_id}
    position = 0
    while position < len(order):
        x = order[position]
        for letter in letters:
            y = monoid.right_letter[x][letter - 1]
            if y not in seen:
                seen.add(y)
                order.append(y)
        position += 1
    return order


def restriction_embedding_check(big: StylMonoid, small: StylMonoid) -> Optional[str]:
    """
    Проверяет, что подмоноид Styl(n), порожденный буквами 2..n, изоморфен
    Styl(n-1) при переименовании i → i-1.

    Возвращает:
        Optional[str]: None при успехе, иначе описание контрпримера.
    """
    if small.n != big.n - 1:
        raise MonoidError("Ожидается пара Styl(n), Styl(n-1)")
    sub = submonoid_closure(big, range(2, big.n + 1))
    if len(sub) != len(small):
        return f"|<2..{big.n}>| = {len(sub)}, |Styl({small.n})| = {len(small)}"
    image = {x: small.id_of_word(tuple(a - 1 for a in big.rep_words[x])) for x in sub}
    if len(set(image.values())) != len(sub):
        return "отображение в Styl(n-1) не инъективно"
    for x in sub:
        for y in sub:
            if image[big.mul(x, y)] != small.mul(image[x], image[y]):
                return (
                    f"f({big.alphabet.word_name(big.rep_words[x])}·"
                    f"{big.alphabet.word_name(big.rep_words[y])}) != f(x)·f(y)"
                )
    return None
