"""
Модуль точной линейной алгебры над Q (и, для экспериментов, над GF(p)).
Обертка над sympy DomainMatrix: ранг, ядро, определитель. Плавающей точки нет.
"""
from fractions import Fraction
from numbers import Rational
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

Vector = List[Fraction]


def _domain(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic)


def _to_fraction(value) -> Fraction:
    """Преобразует элемент sympy (Rational/Integer) в Fraction."""
    return Fraction(int(value.p), int(value.q))


class ExactMatrix:
    """
    Матрица rows × cols с точными рациональными элементами.

    Аргументы:
        rows (Sequence[Sequence[Rational]]): Строки матрицы.
        cols (Optional[int]): Число столбцов, обязательно для матрицы без строк.
        characteristic (int): 0 для Q, простое p для GF(p).
    """

    def __init__(
        self,
        rows: Sequence[Sequence[Rational]],
        cols: Optional[int] = None,
        characteristic: int = 0,
    ):
        self.entries: List[List[Fraction]] = [[Fraction(x) for x in row] for row in rows]
        if cols is None:
            if not self.entries:
                raise ValueError("Для пустой матрицы нужно явно указать число столбцов")
            cols = len(self.entries[0])
        if any(len(row) != cols for row in self.entries):
            raise ValueError("Строки матрицы имеют разную длину")
        self.rows = len(self.entries)
        self.cols = cols
        self.characteristic = characteristic
        self._domain = _domain(characteristic)

    def _convert(self, value: Fraction):
        if self.characteristic == 0:
            return QQ(value.numerator, value.denominator)
        return self._domain(value.numerator) / self._domain(value.denominator)

    def to_domain_matrix(self) -> DomainMatrix:
        data = [[self._convert(x) for x in row] for row in self.entries]
        return DomainMatrix(data, (self.rows, self.cols), self._domain)

    def transpose(self) -> "ExactMatrix":
        columns = [[row[j] for row in self.entries] for j in range(self.cols)]
        return ExactMatrix(columns, cols=self.rows, characteristic=self.characteristic)

    def rref(self) -> Tuple[List[Vector], Tuple[int, ...]]:
        """Приведенная ступенчатая форма (только над Q) и номера ведущих столбцов."""
        if self.characteristic != 0:
            raise ValueError("Ступенчатая форма с восстановлением дробей доступна только над Q")
        if self.rows == 0 or self.cols == 0:
            return [], ()
        reduced, pivots = self.to_domain_matrix().rref()
        matrix = reduced.to_Matrix()
        rows = [[_to_fraction(matrix[i, j]) for j in range(self.cols)] for i in range(self.rows)]
        return rows, tuple(pivots)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return self.to_domain_matrix().rank()

    def nullspace(self) -> List[Vector]:
        """
        Базис ядра {v : M v = 0} над Q.

        Возвращает:
            List[Vector]: По одному вектору на каждый свободный столбец.
        """
        reduced, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            vector = [Fraction(0)] * self.cols
            vector[f] = Fraction(1)
            for i, p in enumerate(pivots):
                vector[p] = -reduced[i][f]
            basis.append(vector)
        return basis

    def left_nullspace(self) -> List[Vector]:
        """Базис {λ : λ M = 0}."""
        return self.transpose().nullspace()

    def determinant(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("Определитель определен только для квадратной матрицы")
        if self.rows == 0:
            return Fraction(1)
        if self.characteristic != 0:
            raise ValueError("Определитель вычисляется только над Q")
        det = self.to_domain_matrix().det()
        return _to_fraction(QQ.to_sympy(det))


def rank_of(vectors: Sequence[Sequence[Rational]], dimension: int, characteristic: int = 0) -> int:
    return ExactMatrix(vectors, cols=dimension, characteristic=characteristic).rank()
