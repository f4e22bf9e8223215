"""
Модуль матрицы Картана стилической алгебры.

Матрица вычисляется двумя независимыми способами: через размерности углов
e_γ·K·e_δ и подсчетом элементов x с η(x) = γ и rfix(x) = δ.
Строки и столбцы упорядочены по значению битовой маски (∅ первым).
"""
import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from stylic.algebra import AlgebraElement, basis_element, corner_dimension, idempotent
from stylic.config import get_settings, resolve_threads
from stylic.core import Column
from stylic.errors import CartanError
from stylic.linalg import rank_of
from stylic.models import CartanComparison, CartanExport, CheckResult
from stylic.monoid import StylMonoid

logger = logging.getLogger(__name__)

SIDES = ("left", "right")


@dataclass(frozen=True)
class CartanMatrix:
    n: int
    order: Tuple[Column, ...]
    names: Tuple[str, ...]
    entries: Tuple[Tuple[int, ...], ...]

    def entry(self, gamma: Column, delta: Column) -> int:
        return self.entries[self.order.index(gamma)][self.order.index(delta)]

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)

    def row_sums(self) -> List[int]:
        """Размерности правых проективных модулей e_γ·K."""
        return [sum(row) for row in self.entries]

    def column_sums(self) -> List[int]:
        """Размерности левых проективных модулей K·e_γ."""
        return [sum(column) for column in zip(*self.entries)]

    def to_export(self) -> CartanExport:
        return CartanExport(
            n=self.n,
            order=list(self.order),
            names=list(self.names),
            entries=[list(row) for row in self.entries],
        )

    def to_csv(self) -> str:
        """CSV с заголовками строк и столбцов в виде убывающих слов."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["", *self.names])
        for name, row in zip(self.names, self.entries):
            writer.writerow([name, *row])
        return buffer.getvalue()

    def to_text(self) -> str:
        width = max(len(name) for name in self.names) + 1
        lines = [" " * width + "".join(name.rjust(width) for name in self.names)]
        for name, row in zip(self.names, self.entries):
            lines.append(name.rjust(width) + "".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def _matrix(monoid: StylMonoid, entries: List[List[int]]) -> CartanMatrix:
    order = tuple(monoid.alphabet.columns())
    return CartanMatrix(
        n=monoid.n,
        order=order,
        names=tuple(monoid.alphabet.column_name(gamma) for gamma in order),
        entries=tuple(tuple(row) for row in entries),
    )


def cartan_linear(monoid: StylMonoid, characteristic: int = 0, threads: Optional[int] = None) -> CartanMatrix:
    """
    Элемент (γ, δ) = dim e_γ·K·e_δ. Строки вычисляются параллельно.

    Аргументы:
        monoid (StylMonoid): Перечисленный моноид.
        characteristic (int): Характеристика поля для вычисления рангов.
        threads (Optional[int]): Число потоков; по умолчанию из STYLIC_THREADS.
    """
    order = list(monoid.alphabet.columns())
    workers = threads or resolve_threads(get_settings())

    def row(gamma: Column) -> List[int]:
        return [corner_dimension(monoid, gamma, delta, characteristic) for delta in order]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        entries = list(executor.map(row, order))
    logger.info(f"Матрица Картана (ранги) для n={monoid.n} вычислена")
    return _matrix(monoid, entries)


def cartan_combinatorial(monoid: StylMonoid) -> CartanMatrix:
    """Элемент (γ, δ) = |{x : η(x) = γ, rfix(x) = δ}|."""
    size = 1 << monoid.n
    entries = [[0] * size for _ in range(size)]
    for x in monoid.ids():
        entries[monoid.eta(x)][monoid.rfix(x)] += 1
    logger.info(f"Матрица Картана (подсчет) для n={monoid.n} вычислена")
    return _matrix(monoid, entries)


def projective_basis(monoid: StylMonoid, gamma: Column, side: str) -> List[AlgebraElement]:
    """
    Базис проективного модуля: для side="right" - e_γ·K, элементы e_η(x)·x с η(x) = γ;
    для side="left" - K·e_γ, элементы с rfix(x) = γ.

    Исключения:
        CartanError: Если ранг набора не совпадает с его размером
            или с размерностью модуля.
    """
    monoid.alphabet.check_column(gamma)
    e_gamma = idempotent(monoid, gamma)
    if side == "right":
        members = [x for x in monoid.ids() if monoid.eta(x) == gamma]
        module = [e_gamma * AlgebraElement.basis(monoid, m) for m in monoid.ids()]
    elif side == "left":
        members = [x for x in monoid.ids() if monoid.rfix(x) == gamma]
        module = [AlgebraElement.basis(monoid, m) * e_gamma for m in monoid.ids()]
    else:
        raise CartanError(f"Сторона должна быть одной из {SIDES}, получено {side!r}")

    basis = [basis_element(monoid, x) for x in members]
    vectors = [b.to_vector() for b in basis]
    independent = rank_of(vectors, len(monoid))
    if independent != len(basis):
        raise CartanError(f"Базис {side} модуля для γ={gamma} линейно зависим")
    module_vectors = [m.to_vector() for m in module]
    module_rank = rank_of(module_vectors, len(monoid))
    joint_rank = rank_of(module_vectors + vectors, len(monoid))
    if module_rank != independent or joint_rank != module_rank:
        raise CartanError(
            f"Набор для γ={monoid.alphabet.column_name(gamma)} ({side}) не является базисом модуля: "
            f"ранг модуля {module_rank}, ранг набора {independent}"
        )
    return basis


def compare(monoid: StylMonoid, characteristic: int = 0, threads: Optional[int] = None) -> CartanComparison:
    linear = cartan_linear(monoid, characteristic, threads)
    combinatorial = cartan_combinatorial(monoid)
    equal = linear.entries == combinatorial.entries
    log = logger.info if equal else logger.error
    log(f"Матрицы Картана для n={monoid.n} {'совпадают' if equal else 'различаются'}")
    return CartanComparison(
        linear=linear.to_export(),
        combinatorial=combinatorial.to_export(),
        equal=equal,
    )


def fix_cross_check(monoid: StylMonoid) -> CheckResult:
    """
    Сверяет lfix(x) = η(x), rfix(x) = θ(η(θ(x))) с прямым перебором букв и
    с J-минимальными идемпотентами: μ(lfix(x)) и μ(rfix(x)).
    """
    name = monoid.alphabet.column_name
    for x in monoid.ids():
        word = monoid.alphabet.word_name(monoid.rep_words[x])
        if monoid.lfix(x) != monoid.eta(x):
            return CheckResult(name="cartan.fix_cross_check", n=monoid.n, cases=x, passed=False,
                               witness=f"lfix({word}) = {name(monoid.lfix(x))} != η = {name(monoid.eta(x))}")
        if monoid.rfix_scan(x) != monoid.rfix(x):
            return CheckResult(name="cartan.fix_cross_check", n=monoid.n, cases=x, passed=False,
                               witness=f"rfix({word}) = {name(monoid.rfix_scan(x))} != θηθ = {name(monoid.rfix(x))}")
        if monoid.lfix_min_idempotent(x) != monoid.id_of_column(monoid.eta(x)):
            return CheckResult(name="cartan.fix_cross_check", n=monoid.n, cases=x, passed=False,
                               witness=f"J-минимальный левый идемпотент для {word} != μ(η(x))")
        if monoid.rfix_min_idempotent(x) != monoid.id_of_column(monoid.rfix(x)):
            return CheckResult(name="cartan.fix_cross_check", n=monoid.n, cases=x, passed=False,
                               witness=f"J-минимальный правый идемпотент для {word} != μ(rfix(x))")
    return CheckResult(name="cartan.fix_cross_check", n=monoid.n, cases=len(monoid), passed=True)
