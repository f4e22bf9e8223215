"""
Модуль с Pydantic-моделями для JSON-экспорта и отчетов о проверках.
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class ElementExport(BaseModel):
    """
    Элемент моноида: представляющее слово и таблица действия (битовые маски столбцов).
    """
    id: int = Field(..., description="Номер элемента в порядке обхода в ширину")
    rep_word: str = Field(..., description="Представляющее слово (shortlex-минимальное)")
    table: List[int] = Field(..., description="table[γ] = x·γ")


class MonoidExport(BaseModel):
    n: int
    size: int
    elements: List[ElementExport]


class TermExport(BaseModel):
    """
    Слагаемое элемента алгебры с точным рациональным коэффициентом.
    """
    element_id: int
    coeff_numerator: int
    coeff_denominator: int = 1


class IdempotentExport(BaseModel):
    gamma: int = Field(..., description="Столбец как битовая маска")
    terms: List[TermExport]


class EdgeExport(BaseModel):
    src: int
    label: int
    dst: int


class QuiverExport(BaseModel):
    n: int
    extended: bool = False
    vertices: List[int]
    edges: List[EdgeExport]


class CartanExport(BaseModel):
    """
    Матрица Картана; строки и столбцы упорядочены по значению битовой маски.
    """
    n: int
    order: List[int]
    names: List[str]
    entries: List[List[int]]


class CartanComparison(BaseModel):
    linear: CartanExport
    combinatorial: CartanExport
    equal: bool


class CheckResult(BaseModel):
    """
    Результат одной проверки: имя, размер алфавита, число случаев и контрпример.
    """
    name: str
    n: int
    cases: int = 0
    passed: bool
    witness: Optional[str] = None


class VerificationReport(BaseModel):
    n: int
    seed: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def first_failure(self) -> Optional[CheckResult]:
        return next((check for check in self.checks if not check.passed), None)


class KernelReport(BaseModel):
    """
    Ядро отображения φ и его сравнение с линейной оболочкой соотношений.
    """
    n: int
    paths: int
    rank: int
    kernel_dimension: int
    relation_count: int
    relation_span_dimension: int
    relations_in_kernel: bool
    endpoints_agree: bool
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return (
            self.relations_in_kernel
            and self.endpoints_agree
            and self.relation_span_dimension == self.kernel_dimension
        )


class AdmissibilityReport(BaseModel):
    n: int
    acyclic: bool
    longest_path: int
    nilpotency_index: int = Field(..., description="m = длина самого длинного пути + 1, F^m = 0")
    kernel_in_square: bool
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.acyclic and self.kernel_in_square
