"""
Модуль моноидной алгебры ZStyl(A) с точными коэффициентами.

Содержит идемпотенты e_γ = Π↗_{a∉γ}(1-a) · Π↘_{a∈γ} a, проверку того, что они
образуют полную систему примитивных ортогональных идемпотентов, размерности
углов e_γ·K·e_δ и треугольный базис {e_η(x)·x}.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from stylic.core import Column, Letter, Word
from stylic.errors import AlgebraError
from stylic.linalg import ExactMatrix, rank_of
from stylic.models import CheckResult, IdempotentExport, TermExport
from stylic.monoid import StylMonoid

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def _normalize(value: Rational) -> Scalar:
    """Целые коэффициенты храним как int."""
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


class AlgebraElement:
    """
    Неизменяемая конечная линейная комбинация элементов моноида.
    Нулевые коэффициенты не хранятся.
    """
    __slots__ = ("monoid", "coeffs")

    def __init__(self, monoid: StylMonoid, coeffs: Optional[Mapping[int, Rational]] = None):
        self.monoid = monoid
        self.coeffs: Dict[int, Scalar] = {
            x: _normalize(c) for x, c in (coeffs or {}).items() if c != 0
        }

    @classmethod
    def zero(cls, monoid: StylMonoid) -> "AlgebraElement":
        return cls(monoid)

    @classmethod
    def one(cls, monoid: StylMonoid) -> "AlgebraElement":
        return cls(monoid, {monoid.identity_id: 1})

    @classmethod
    def basis(cls, monoid: StylMonoid, x: int) -> "AlgebraElement":
        return cls(monoid, {x: 1})

    @classmethod
    def of_word(cls, monoid: StylMonoid, word: Iterable[Letter]) -> "AlgebraElement":
        return cls(monoid, {monoid.id_of_word(tuple(word)): 1})

    @classmethod
    def letter(cls, monoid: StylMonoid, a: Letter) -> "AlgebraElement":
        return cls(monoid, {monoid.generator_ids[a - 1]: 1})

    def _check(self, other: "AlgebraElement") -> None:
        if other.monoid is not self.monoid:
            raise AlgebraError("Элементы принадлежат алгебрам разных моноидов")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        result = defaultdict(int, self.coeffs)
        for x, c in other.coeffs.items():
            result[x] += c
        return AlgebraElement(self.monoid, result)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.monoid, {x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, scalar: Rational) -> "AlgebraElement":
        return AlgebraElement(self.monoid, {x: c * scalar for x, c in self.coeffs.items()})

    def __mul__(self, other: Union["AlgebraElement", Rational]) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        mul = self.monoid.mul
        result: Dict[int, Scalar] = defaultdict(int)
        for x, cx in self.coeffs.items():
            for y, cy in other.coeffs.items():
                result[mul(x, y)] += cx * cy
        return AlgebraElement(self.monoid, result)

    def __rmul__(self, scalar: Rational) -> "AlgebraElement":
        return self.scale(scalar)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.monoid is other.monoid and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, x: int) -> Scalar:
        return self.coeffs.get(x, 0)

    def support(self) -> List[int]:
        return sorted(self.coeffs)

    def to_vector(self) -> List[Scalar]:
        """Плотный вектор коэффициентов в порядке идентификаторов моноида."""
        return [self.coeffs.get(x, 0) for x in self.monoid.ids()]

    def terms(self) -> List[TermExport]:
        return [
            TermExport(
                element_id=x,
                coeff_numerator=Fraction(c).numerator,
                coeff_denominator=Fraction(c).denominator,
            )
            for x, c in sorted(self.coeffs.items())
        ]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        name = self.monoid.alphabet.word_name
        parts = [f"{c}*{name(self.monoid.rep_words[x])}" for x, c in sorted(self.coeffs.items())]
        return " + ".join(parts)


def idempotent(monoid: StylMonoid, gamma: Column) -> AlgebraElement:
    """
    e_γ: произведение (1-a) по a ∉ γ в порядке возрастания, умноженное на μ(γ).

    Аргументы:
        monoid (StylMonoid): Перечисленный моноид.
        gamma (Column): Столбец.

    Возвращает:
        AlgebraElement: Идемпотент e_γ.
    """
    monoid.alphabet.check_column(gamma)
    return monoid.memoized(("idempotent", gamma), lambda: _build_idempotent(monoid, gamma))


def _build_idempotent(monoid: StylMonoid, gamma: Column) -> AlgebraElement:
    one = AlgebraElement.one(monoid)
    result = one
    for a in monoid.alphabet.letters():
        if not gamma & (1 << (a - 1)):
            result = result * (one - AlgebraElement.letter(monoid, a))
    return result * AlgebraElement.basis(monoid, monoid.id_of_column(gamma))


def idempotent_system(monoid: StylMonoid) -> List[AlgebraElement]:
    return [idempotent(monoid, gamma) for gamma in monoid.alphabet.columns()]


def _left_corner(monoid: StylMonoid, gamma: Column) -> Tuple[AlgebraElement, ...]:
    """e_γ·x для всех x."""
    e = idempotent(monoid, gamma)
    return monoid.memoized(
        ("left_corner", gamma),
        lambda: tuple(e * AlgebraElement.basis(monoid, x) for x in monoid.ids()),
    )


def corner_dimension(monoid: StylMonoid, gamma: Column, delta: Column, characteristic: int = 0) -> int:
    """Ранг множества {e_γ·x·e_δ : x ∈ Styl(A)} в базисе моноида."""
    e_delta = idempotent(monoid, delta)
    vectors = [(left * e_delta).to_vector() for left in _left_corner(monoid, gamma)]
    return rank_of(vectors, len(monoid), characteristic)


def verify_idempotent_system(monoid: StylMonoid) -> List[CheckResult]:
    """
    Проверяет полноту, ортогональность, примитивность и ненулевость системы e_γ.

    Возвращает:
        List[CheckResult]: Четыре результата; при неудаче - со свидетелем.
    """
    alphabet = monoid.alphabet
    columns = list(alphabet.columns())
    system = idempotent_system(monoid)
    n = monoid.n
    results = []

    witness = None
    for gamma, e_gamma in zip(columns, system):
        for delta, e_delta in zip(columns, system):
            expected = e_gamma if gamma == delta else AlgebraElement.zero(monoid)
            if e_gamma * e_delta != expected:
                witness = f"e_{alphabet.column_name(gamma)}·e_{alphabet.column_name(delta)}"
                break
        if witness:
            break
    results.append(CheckResult(name="idempotents.orthogonal", n=n, cases=len(columns) ** 2,
                               passed=witness is None, witness=witness))

    total = AlgebraElement.zero(monoid)
    for e_gamma in system:
        total = total + e_gamma
    complete = total == AlgebraElement.one(monoid)
    results.append(CheckResult(name="idempotents.sum_is_one", n=n, cases=1, passed=complete,
                               witness=None if complete else repr(total)))

    witness = next(
        (alphabet.column_name(g) for g in columns if corner_dimension(monoid, g, g) != 1), None
    )
    results.append(CheckResult(name="idempotents.primitive", n=n, cases=len(columns),
                               passed=witness is None, witness=witness))

    witness = next((alphabet.column_name(g) for g, e in zip(columns, system) if not e), None)
    results.append(CheckResult(name="idempotents.nonzero", n=n, cases=len(columns),
                               passed=witness is None, witness=witness))
    for result in results:
        log = logger.info if result.passed else logger.error
        log(f"{result.name} (n={n}): {'OK' if result.passed else 'FAIL ' + str(result.witness)}")
    return results


def basis_element(monoid: StylMonoid, x: int) -> AlgebraElement:
    """e_η(x)·x."""
    return idempotent(monoid, monoid.eta(x)) * AlgebraElement.basis(monoid, x)


def triangular_basis(monoid: StylMonoid) -> List[AlgebraElement]:
    """
    Базис {e_η(x)·x : x ∈ Styl(A)} с проверкой треугольности.

    Каждый элемент равен x плюс целочисленная комбинация элементов строго
    меньших x по <=_J; матрица перехода имеет полный ранг и определитель ±1.

    Исключения:
        AlgebraError: При нарушении треугольности или унимодулярности.
    """
    basis = []
    for x in monoid.ids():
        element = basis_element(monoid, x)
        if element.coefficient(x) != 1:
            raise AlgebraError(f"Коэффициент при x={x} в e_η(x)·x равен {element.coefficient(x)}")
        for y, c in element.coeffs.items():
            if y == x:
                continue
            if not isinstance(c, int):
                raise AlgebraError(f"Нецелый коэффициент {c} в e_η(x)·x для x={x}")
            if not monoid.j_leq(y, x):
                raise AlgebraError(f"Элемент {y} в e_η(x)·x не лежит ниже x={x} по J")
        basis.append(element)
    matrix = ExactMatrix([b.to_vector() for b in basis], cols=len(monoid))
    if matrix.rank() != len(monoid):
        raise AlgebraError("Треугольный базис не имеет полного ранга")
    det = matrix.determinant()
    if abs(det) != 1:
        raise AlgebraError(f"Определитель матрицы перехода равен {det}")
    logger.info(f"Треугольный базис Styl({monoid.n}) проверен: {len(basis)} элементов, det = {det}")
    return basis


def basis_change_determinant(monoid: StylMonoid) -> Fraction:
    return ExactMatrix([basis_element(monoid, x).to_vector() for x in monoid.ids()],
                       cols=len(monoid)).determinant()


def search_tail_word(monoid: StylMonoid, gamma: Column, x: int, max_length: int) -> Optional[Word]:
    """
    Кратчайшее (shortlex) слово w с μ(γ·w) = x, поиском в ширину по графу Кэли.
    """
    start = monoid.id_of_column(gamma)
    if start == x:
        return ()
    words = {start: ()}
    layer = [start]
    for _ in range(max_length):
        next_layer = []
        for y in layer:
            for a in monoid.alphabet.letters():
                z = monoid.right_letter[y][a - 1]
                if z not in words:
                    words[z] = words[y] + (a,)
                    if z == x:
                        return words[z]
                    next_layer.append(z)
        layer = next_layer
    return None


def basis_realization_check(monoid: StylMonoid, max_length: int) -> CheckResult:
    """
    Для каждого x находит слово w с μ(η(x)·w) = x и проверяет e_η(x)·μ(w) = e_η(x)·x.
    """
    for x in monoid.ids():
        gamma = monoid.eta(x)
        word = search_tail_word(monoid, gamma, x, max_length)
        if word is None:
            return CheckResult(name="algebra.basis_realization", n=monoid.n, cases=x, passed=False,
                               witness=f"нет слова длины <= {max_length} для x={x}")
        e_gamma = idempotent(monoid, gamma)
        if e_gamma * AlgebraElement.of_word(monoid, word) != basis_element(monoid, x):
            return CheckResult(name="algebra.basis_realization", n=monoid.n, cases=x, passed=False,
                               witness=f"x={x}, w={monoid.alphabet.word_name(word)}")
    return CheckResult(name="algebra.basis_realization", n=monoid.n, cases=len(monoid), passed=True)


def export_idempotents(monoid: StylMonoid) -> List[IdempotentExport]:
    return [
        IdempotentExport(gamma=gamma, terms=idempotent(monoid, gamma).terms())
        for gamma in monoid.alphabet.columns()
    ]
