"""
Модуль колчана Q(A) стилической алгебры и расширенного колчана Q'(A).

Вершины - столбцы, ребра γ -c-> γ·c - откровенные правые действия.
Здесь же отображение φ из алгебры путей в алгебру моноида, удаление петель,
проверки сюръективности, ядра и допустимости идеала ker φ.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

import networkx as nx
from graphviz import Digraph

from stylic.algebra import AlgebraElement, basis_element, idempotent
from stylic.core import (
    Alphabet,
    Column,
    Letter,
    Word,
    column_min,
    column_word,
    contains,
    is_frank,
    right_act,
    right_act_word,
)
from stylic.errors import QuiverError
from stylic.linalg import ExactMatrix, rank_of
from stylic.models import AdmissibilityReport, EdgeExport, KernelReport, QuiverExport
from stylic.monoid import StylMonoid
from stylic.tableaux import column_reading_word, p_symbol

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    source: Column
    label: Letter
    target: Column


class Path(NamedTuple):
    """Путь задается началом и словом меток; конец хранится для удобства."""
    start: Column
    steps: Word
    end: Column

    @property
    def length(self) -> int:
        return len(self.steps)


def default_search_length(n: int) -> int:
    """Длина слова чтения N-таблицы не превосходит n(n+1)/2."""
    return max(2 * n, n * (n + 1) // 2)


class Quiver:
    """
    Помеченный ориентированный граф на множестве столбцов алфавита.

    Аргументы:
        alphabet (Alphabet): Алфавит.
        edges (Iterable[Edge]): Ребра.
        extended (bool): Содержит ли граф петли Q'(A).
    """

    def __init__(self, alphabet: Alphabet, edges: Iterable[Edge], extended: bool = False):
        self.alphabet = alphabet
        self.n = alphabet.n
        self.extended = extended
        self.vertices: List[Column] = list(alphabet.columns())
        self.edges: List[Edge] = sorted(edges)
        self._successor: Dict[Tuple[Column, Letter], Column] = {}
        self._deterministic = True
        for edge in self.edges:
            key = (edge.source, edge.label)
            if key in self._successor:
                self._deterministic = False
            self._successor.setdefault(key, edge.target)

    def successor(self, column: Column, letter: Letter) -> Optional[Column]:
        return self._successor.get((column, letter))

    def out_edges(self, column: Column) -> List[Edge]:
        return [edge for edge in self.edges if edge.source == column]

    def is_deterministic(self) -> bool:
        """Не более одного ребра с данной меткой из каждой вершины."""
        return self._deterministic

    def loops(self) -> List[Edge]:
        return [edge for edge in self.edges if edge.source == edge.target]

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.source, edge.target, label=edge.label)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def longest_path_length(self) -> int:
        """
        Длина самого длинного пути.

        Исключения:
            QuiverError: Если граф содержит циклы.
        """
        graph = self.to_networkx()
        if not nx.is_directed_acyclic_graph(graph):
            raise QuiverError("Колчан содержит циклы, самый длинный путь не определен")
        return nx.dag_longest_path_length(graph)

    def path(self, start: Column, word: Iterable[Letter]) -> Path:
        """
        Путь из start с метками word.

        Исключения:
            QuiverError: Если слово не помечает путь из start.
        """
        current = self.alphabet.check_column(start)
        steps = self.alphabet.check_word(word)
        for letter in steps:
            target = self.successor(current, letter)
            if target is None:
                raise QuiverError(
                    f"Нет ребра с меткой {self.alphabet.letter_name(letter)} "
                    f"из вершины {self.alphabet.column_name(current)}"
                )
            current = target
        return Path(start, steps, current)

    def to_dot(self) -> str:
        name = self.alphabet.column_name
        dot = Digraph(name="Q")
        for vertex in self.vertices:
            dot.node(name(vertex))
        for edge in self.edges:
            dot.edge(name(edge.source), name(edge.target), label=self.alphabet.letter_name(edge.label))
        return dot.source

    def to_export(self) -> QuiverExport:
        return QuiverExport(
            n=self.n,
            extended=self.extended,
            vertices=self.vertices,
            edges=[EdgeExport(src=e.source, label=e.label, dst=e.target) for e in self.edges],
        )


def build_quiver(n: int) -> Quiver:
    """Q(A): ребро γ -c-> γ·c для каждого откровенного действия."""
    alphabet = Alphabet(n=n)
    edges = [
        Edge(gamma, c, right_act(gamma, c)[0])
        for gamma in alphabet.columns()
        for c in alphabet.letters()
        if is_frank(gamma, c)
    ]
    quiver = Quiver(alphabet, edges)
    logger.info(f"Колчан Q({n}) построен: {len(edges)} ребер")
    return quiver


def build_extended(n: int) -> Quiver:
    """Q'(A): Q(A) и петля (γ, c, γ) для каждой буквы c ∈ γ."""
    base = build_quiver(n)
    alphabet = base.alphabet
    loops = [
        Edge(gamma, c, gamma)
        for gamma in alphabet.columns()
        for c in alphabet.letters()
        if contains(gamma, c)
    ]
    quiver = Quiver(alphabet, base.edges + loops, extended=True)
    logger.info(f"Расширенный колчан Q'({n}) построен: {len(quiver.edges)} ребер, из них {len(loops)} петель")
    return quiver


def loops_removal(alphabet: Alphabet, gamma: Column, word: Iterable[Letter]) -> Word:
    """
    Удаляет из пути в Q'(A) шаги-петли.

    Результат w' помечает путь в Q(A) из γ, причем γ·w' = γ·w и γw' ≡ γw.

    Исключения:
        QuiverError: Если word не помечает путь в Q'(A) из γ.
    """
    current = alphabet.check_column(gamma)
    steps = alphabet.check_word(word)
    kept: List[Letter] = []
    for letter in steps:
        low = column_min(current)
        if low is None or letter < low:
            raise QuiverError(
                f"Слово {alphabet.word_name(steps)} не помечает путь в Q' "
                f"из {alphabet.column_name(gamma)}"
            )
        if contains(current, letter):
            continue
        kept.append(letter)
        current, _ = right_act(current, letter)
    return tuple(kept)


def _check_path(monoid: StylMonoid, path: Path) -> List[Column]:
    """Вершины пути в Q(A); QuiverError, если путь не в Q(A)."""
    vertices = [path.start]
    current = path.start
    for letter in path.steps:
        if not is_frank(current, letter):
            raise QuiverError(
                f"Шаг {monoid.alphabet.letter_name(letter)} из "
                f"{monoid.alphabet.column_name(current)} не является ребром Q"
            )
        current, _ = right_act(current, letter)
        vertices.append(current)
    if current != path.end:
        raise QuiverError(f"Путь заканчивается в {current}, а не в {path.end}")
    return vertices


def phi(monoid: StylMonoid, path: Path, check: bool = False) -> AlgebraElement:
    """
    φ(γ0 -c1-> γ1 ... -cl-> γl) = e_γ0 c1 e_γ1 ... cl e_γl.

    Аргументы:
        monoid (StylMonoid): Моноид того же алфавита.
        path (Path): Путь в Q(A).
        check (bool): Сравнить результат с e_γ0·μ(c1...cl).

    Исключения:
        QuiverError: Если путь не принадлежит Q(A) или проверка не прошла.
    """
    vertices = _check_path(monoid, path)
    result = idempotent(monoid, vertices[0])
    for letter, vertex in zip(path.steps, vertices[1:]):
        result = result * AlgebraElement.letter(monoid, letter) * idempotent(monoid, vertex)
    if check:
        expected = idempotent(monoid, path.start) * AlgebraElement.of_word(monoid, path.steps)
        if result != expected:
            raise QuiverError(f"φ({path_name(monoid.alphabet, path)}) != e_γ·μ(u)")
    return result


def path_name(alphabet: Alphabet, path: Path) -> str:
    return f"{alphabet.column_name(path.start)}:{alphabet.word_name(path.steps)}"


def enumerate_paths(quiver: Quiver) -> List[Path]:
    """
    Все пути Q(A), включая пустые, по возрастанию длины, внутри длины -
    лексикографически по (начало, метки).

    Исключения:
        QuiverError: Для расширенного колчана (путей бесконечно много).
    """
    if quiver.extended:
        raise QuiverError("Пути перечисляются только в колчане без петель")
    layer = [Path(vertex, (), vertex) for vertex in quiver.vertices]
    paths: List[Path] = []
    while layer:
        layer.sort(key=lambda p: (p.start, p.steps))
        paths.extend(layer)
        layer = [
            Path(p.start, p.steps + (edge.label,), edge.target)
            for p in layer
            for edge in quiver.out_edges(p.end)
        ]
    return paths


def count_paths(quiver: Quiver) -> int:
    return len(enumerate_paths(quiver))


def phi_vectors(monoid: StylMonoid, paths: List[Path]) -> List[List]:
    return [phi(monoid, p).to_vector() for p in paths]


def phi_rank(monoid: StylMonoid, quiver: Quiver) -> int:
    """Ранг над Q образов всех путей; равен |Styl(A)|, если φ сюръективно."""
    if monoid.n != quiver.n:
        raise QuiverError("Моноид и колчан построены для разных алфавитов")
    paths = enumerate_paths(quiver)
    rank = rank_of(phi_vectors(monoid, paths), len(monoid))
    logger.info(f"rank φ для n={monoid.n}: {rank} при {len(paths)} путях")
    return rank


def relation_groups(monoid: StylMonoid, paths: List[Path]) -> Dict[Tuple[Column, int], List[int]]:
    """Номера путей, сгруппированные по (начало, μ(γ·метки))."""
    groups: Dict[Tuple[Column, int], List[int]] = defaultdict(list)
    for index, path in enumerate(paths):
        key = (path.start, monoid.id_of_word(column_word(path.start) + path.steps))
        groups[key].append(index)
    return groups


def kernel_span_check(monoid: StylMonoid, quiver: Quiver) -> KernelReport:
    """
    Вычисляет ker φ и сравнивает его с оболочкой разностей p - q путей
    с общим началом γ и μ(γu) = μ(γv).
    """
    if monoid.n != quiver.n:
        raise QuiverError("Моноид и колчан построены для разных алфавитов")
    paths = enumerate_paths(quiver)
    images = phi_vectors(monoid, paths)
    matrix = ExactMatrix(images, cols=len(monoid))
    rank = matrix.rank()
    kernel_dimension = len(paths) - rank

    relations: List[List[int]] = []
    in_kernel = True
    endpoints = True
    witness = None
    for indices in relation_groups(monoid, paths).values():
        first = indices[0]
        for other in indices[1:]:
            vector = [0] * len(paths)
            vector[other] = 1
            vector[first] = -1
            relations.append(vector)
            if paths[other].end != paths[first].end and endpoints:
                endpoints = False
                witness = witness or (
                    f"концы {path_name(monoid.alphabet, paths[other])} и "
                    f"{path_name(monoid.alphabet, paths[first])} различны"
                )
            if images[other] != images[first] and in_kernel:
                in_kernel = False
                witness = witness or (
                    f"φ({path_name(monoid.alphabet, paths[other])}) != "
                    f"φ({path_name(monoid.alphabet, paths[first])})"
                )
    span = rank_of(relations, len(paths))
    if witness is None and span != kernel_dimension:
        witness = f"dim span = {span}, dim ker φ = {kernel_dimension}"
    report = KernelReport(
        n=monoid.n,
        paths=len(paths),
        rank=rank,
        kernel_dimension=kernel_dimension,
        relation_count=len(relations),
        relation_span_dimension=span,
        relations_in_kernel=in_kernel,
        endpoints_agree=endpoints,
        witness=witness,
    )
    log = logger.info if report.passed else logger.error
    log(f"ker φ для n={monoid.n}: размерность {kernel_dimension}, оболочка соотношений {span}")
    return report


def admissibility_check(monoid: StylMonoid, quiver: Quiver) -> AdmissibilityReport:
    """
    Проверяет, что Q(A) ацикличен (F^m = 0 при m = длина самого длинного пути + 1)
    и что ker φ ⊆ F²: у векторов базиса ядра нулевые компоненты на путях длины <= 1.
    """
    acyclic = quiver.is_acyclic()
    if not acyclic:
        return AdmissibilityReport(n=monoid.n, acyclic=False, longest_path=-1, nilpotency_index=0,
                                   kernel_in_square=False, witness="колчан содержит цикл")
    longest = quiver.longest_path_length()
    paths = enumerate_paths(quiver)
    kernel = ExactMatrix(phi_vectors(monoid, paths), cols=len(monoid)).left_nullspace()
    witness = None
    for vector in kernel:
        bad = next((i for i, p in enumerate(paths) if p.length <= 1 and vector[i] != 0), None)
        if bad is not None:
            witness = f"вектор ядра с компонентой на пути {path_name(monoid.alphabet, paths[bad])}"
            break
    report = AdmissibilityReport(
        n=monoid.n,
        acyclic=True,
        longest_path=longest,
        nilpotency_index=longest + 1,
        kernel_in_square=witness is None,
        witness=witness,
    )
    log = logger.info if report.passed else logger.error
    log(f"Допустимость ker φ для n={monoid.n}: m = {longest + 1}, ker φ ⊆ F²: {report.kernel_in_square}")
    return report


def complement_word(alphabet: Alphabet, gamma: Column, word: Iterable[Letter]) -> Word:
    """
    Слово u с γw ≡ u·(γ·w): по таблице P(θ(w)θ(γ)), чье слово чтения
    равно (θ(w)·θ(γ))·v, возвращается θ(v).
    """
    word = alphabet.check_word(word)
    gamma = alphabet.check_column(gamma)
    tableau = p_symbol(alphabet.theta_word(word) + alphabet.theta_word(column_word(gamma)))
    reading = column_reading_word(tableau)
    head = column_word(tableau[0]) if tableau else ()
    return alphabet.theta_word(reading[len(head):])


def _search_q_prime_word(monoid: StylMonoid, gamma: Column, x: int, max_length: int) -> Optional[Word]:
    """Кратчайшее слово w, помечающее путь в Q'(A) из γ, с μ(γw) = x."""
    start = (monoid.id_of_column(gamma), gamma)
    if start[0] == x:
        return ()
    words = {start: ()}
    layer = [start]
    for _ in range(max_length):
        next_layer = []
        for element, column in layer:
            low = column_min(column)
            if low is None:
                continue
            for letter in range(low, monoid.n + 1):
                state = (monoid.right_letter[element][letter - 1], right_act(column, letter)[0])
                if state in words:
                    continue
                words[state] = words[(element, column)] + (letter,)
                if state[0] == x:
                    return words[state]
                next_layer.append(state)
        layer = next_layer
    return None


def n_paths(monoid: StylMonoid, max_length: Optional[int] = None) -> List[Path]:
    """
    Для каждого x путь в Q(A) из η(x) в rfix(x) с φ(путь) = e_η(x)·x.

    Слово находится поиском в Q'(A) и очищается удалением петель.

    Исключения:
        QuiverError: Если слово не найдено или свойства пути нарушены.
    """
    limit = max_length or default_search_length(monoid.n)
    paths = []
    for x in monoid.ids():
        gamma = monoid.eta(x)
        word = _search_q_prime_word(monoid, gamma, x, limit)
        if word is None:
            raise QuiverError(f"Для x={x} нет пути в Q' длины <= {limit}")
        reduced = loops_removal(monoid.alphabet, gamma, word)
        path = Path(gamma, reduced, right_act_word(gamma, reduced))
        if path.end != monoid.rfix(x):
            raise QuiverError(f"Путь для x={x} заканчивается не в rfix(x)")
        if phi(monoid, path) != basis_element(monoid, x):
            raise QuiverError(f"φ(путь) != e_η(x)·x для x={x}")
        paths.append(path)
    logger.info(f"Пути сюръективности для n={monoid.n} построены: {len(paths)}")
    return paths


class PathAlgebraElement:
    """
    Элемент алгебры путей: конечная комбинация путей одного колчана.
    Произведение путей - конкатенация, если конец первого совпадает с началом второго, иначе 0.
    """
    __slots__ = ("quiver", "coeffs")

    def __init__(self, quiver: Quiver, coeffs: Optional[Mapping[Path, Rational]] = None):
        self.quiver = quiver
        self.coeffs: Dict[Path, Fraction] = {
            p: Fraction(c) for p, c in (coeffs or {}).items() if c != 0
        }

    @classmethod
    def of_path(cls, quiver: Quiver, path: Path) -> "PathAlgebraElement":
        return cls(quiver, {path: 1})

    @classmethod
    def vertex(cls, quiver: Quiver, gamma: Column) -> "PathAlgebraElement":
        return cls(quiver, {Path(gamma, (), gamma): 1})

    @classmethod
    def arrow(cls, quiver: Quiver, edge: Edge) -> "PathAlgebraElement":
        return cls(quiver, {Path(edge.source, (edge.label,), edge.target): 1})

    def _check(self, other: "PathAlgebraElement") -> None:
        if other.quiver is not self.quiver:
            raise QuiverError("Элементы принадлежат алгебрам путей разных колчанов")

    def __add__(self, other: "PathAlgebraElement") -> "PathAlgebraElement":
        self._check(other)
        result: Dict[Path, Fraction] = defaultdict(Fraction, self.coeffs)
        for p, c in other.coeffs.items():
            result[p] += c
        return PathAlgebraElement(self.quiver, result)

    def __neg__(self) -> "PathAlgebraElement":
        return PathAlgebraElement(self.quiver, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: "PathAlgebraElement") -> "PathAlgebraElement":
        return self + (-other)

    def __mul__(self, other) -> "PathAlgebraElement":
        if not isinstance(other, PathAlgebraElement):
            return PathAlgebraElement(self.quiver, {p: c * other for p, c in self.coeffs.items()})
        self._check(other)
        result: Dict[Path, Fraction] = defaultdict(Fraction)
        for p, cp in self.coeffs.items():
            for q, cq in other.coeffs.items():
                if p.end == q.start:
                    result[Path(p.start, p.steps + q.steps, q.end)] += cp * cq
        return PathAlgebraElement(self.quiver, result)

    def __rmul__(self, scalar: Rational) -> "PathAlgebraElement":
        return self * scalar

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathAlgebraElement):
            return NotImplemented
        return self.quiver is other.quiver and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def in_arrow_square(self) -> bool:
        """Лежит ли элемент в F²: все пути длины не меньше 2."""
        return all(p.length >= 2 for p in self.coeffs)

    def image(self, monoid: StylMonoid) -> AlgebraElement:
        """Образ при φ, продолженном по линейности."""
        result = AlgebraElement.zero(monoid)
        for p, c in self.coeffs.items():
            result = result + phi(monoid, p) * c
        return result
