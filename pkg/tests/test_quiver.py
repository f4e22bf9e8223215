"""
Тесты для модуля `stylic.quiver`.
"""
import pytest

from stylic.algebra import AlgebraElement, basis_element, idempotent
from stylic.core import column_word, right_act_word
from stylic.errors import QuiverError
from stylic.monoid import get_monoid
from stylic.quiver import (
    Edge,
    Path,
    PathAlgebraElement,
    admissibility_check,
    build_extended,
    build_quiver,
    complement_word,
    count_paths,
    default_search_length,
    enumerate_paths,
    kernel_span_check,
    loops_removal,
    n_paths,
    phi,
    phi_rank,
)
from stylic.tableaux import plactic_equivalent

A, B, C, D = 1, 2, 3, 4

QUIVER_EDGES = {
    2: {Edge(0b01, B, 0b10)},
    3: {
        Edge(0b001, B, 0b010),
        Edge(0b001, C, 0b100),
        Edge(0b010, C, 0b100),
        Edge(0b011, C, 0b101),
        Edge(0b101, B, 0b110),
    },
    4: {
        Edge(0b0001, B, 0b0010),
        Edge(0b0001, C, 0b0100),
        Edge(0b0001, D, 0b1000),
        Edge(0b0010, C, 0b0100),
        Edge(0b0010, D, 0b1000),
        Edge(0b0100, D, 0b1000),
        Edge(0b0011, C, 0b0101),
        Edge(0b0011, D, 0b1001),
        Edge(0b0101, B, 0b0110),
        Edge(0b0101, D, 0b1001),
        Edge(0b1001, B, 0b1010),
        Edge(0b1001, C, 0b1100),
        Edge(0b0110, D, 0b1010),
        Edge(0b1010, C, 0b1100),
        Edge(0b0111, D, 0b1011),
        Edge(0b1011, C, 0b1101),
        Edge(0b1101, B, 0b1110),
    },
}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quiver_edges(n: int) -> None:
    quiver = build_quiver(n)

    assert set(quiver.edges) == QUIVER_EDGES[n]
    assert len(quiver.edges) == len(QUIVER_EDGES[n])
    assert quiver.edges == sorted(quiver.edges)
    assert quiver.vertices == list(range(2 ** n))


def test_quiver_for_one_letter_has_no_edges() -> None:
    quiver = build_quiver(1)

    assert quiver.edges == []
    assert build_extended(1).edges == [Edge(0b1, A, 0b1)]


@pytest.mark.parametrize("n, longest", [(2, 1), (3, 2), (4, 4)])
def test_quiver_is_acyclic(n: int, longest: int) -> None:
    quiver = build_quiver(n)

    assert quiver.is_acyclic()
    assert quiver.is_deterministic()
    assert quiver.longest_path_length() == longest


def test_extended_quiver() -> None:
    extended = build_extended(2)

    assert extended.edges == [
        Edge(0b01, A, 0b01),
        Edge(0b01, B, 0b10),
        Edge(0b10, B, 0b10),
        Edge(0b11, A, 0b11),
        Edge(0b11, B, 0b11),
    ]
    assert extended.is_deterministic()
    assert len(extended.loops()) == 4
    assert not extended.is_acyclic()
    with pytest.raises(QuiverError):
        extended.longest_path_length()


def test_extended_edges_are_the_min_respecting_actions() -> None:
    """
    В Q'(A) ребро с меткой c выходит из γ ровно тогда, когда γ непуст и c >= min γ.
    """
    extended = build_extended(4)
    for gamma in extended.vertices:
        labels = sorted(edge.label for edge in extended.out_edges(gamma))
        expected = [] if gamma == 0 else list(range((gamma & -gamma).bit_length(), 5))
        assert labels == expected


def test_path_follows_labels() -> None:
    quiver = build_quiver(3)

    assert quiver.path(0b011, (C, B)) == Path(0b011, (C, B), 0b110)
    assert quiver.path(0b011, ()).length == 0
    with pytest.raises(QuiverError):
        quiver.path(0b011, (B,))


@pytest.mark.parametrize(
    "gamma, word, expected",
    [
        (0b01, (B, B), (B,)),
        (0b11, (A, B), ()),
        (0b001, (A, C, C), (C,)),
    ],
)
def test_loops_removal(gamma: int, word: tuple, expected: tuple) -> None:
    alphabet = build_quiver(3).alphabet
    reduced = loops_removal(alphabet, gamma, word)

    assert reduced == expected
    assert right_act_word(gamma, reduced) == right_act_word(gamma, word)


@pytest.mark.parametrize("gamma, word", [(0, (A,)), (0b10, (A,))])
def test_loops_removal_rejects_foreign_words(gamma: int, word: tuple) -> None:
    with pytest.raises(QuiverError):
        loops_removal(build_quiver(2).alphabet, gamma, word)


def test_phi_of_vertex_and_arrow() -> None:
    styl2 = get_monoid(2)
    quiver = build_quiver(2)

    assert phi(styl2, Path(0b01, (), 0b01)) == idempotent(styl2, 0b01)
    image = phi(styl2, quiver.path(0b01, (B,)), check=True)
    assert image == idempotent(styl2, 0b01) * AlgebraElement.letter(styl2, B)
    assert image


def test_phi_rejects_paths_outside_the_quiver() -> None:
    styl2 = get_monoid(2)

    with pytest.raises(QuiverError):
        phi(styl2, Path(0b10, (A,), 0b11))
    with pytest.raises(QuiverError):
        phi(styl2, Path(0b01, (B,), 0b11))


@pytest.mark.parametrize("n, count", [(1, 2), (2, 5), (3, 15), (4, 58)])
def test_path_counts(n: int, count: int) -> None:
    quiver = build_quiver(n)
    paths = enumerate_paths(quiver)

    assert count_paths(quiver) == count
    assert [p.length for p in paths[: 2 ** n]] == [0] * 2 ** n
    assert [p.length for p in paths] == sorted(p.length for p in paths)


def test_extended_paths_are_not_enumerated() -> None:
    with pytest.raises(QuiverError):
        enumerate_paths(build_extended(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_is_surjective(n: int) -> None:
    assert phi_rank(get_monoid(n), build_quiver(n)) == len(get_monoid(n))


@pytest.mark.parametrize("n, kernel", [(1, 0), (2, 0), (3, 0), (4, 6)])
def test_kernel_is_spanned_by_relations(n: int, kernel: int) -> None:
    report = kernel_span_check(get_monoid(n), build_quiver(n))

    assert report.kernel_dimension == kernel
    assert report.rank == len(get_monoid(n))
    assert report.paths == report.rank + kernel
    assert report.passed, report.witness


def test_admissibility() -> None:
    report = admissibility_check(get_monoid(4), build_quiver(4))

    assert report.acyclic
    assert report.longest_path == 4
    assert report.nilpotency_index == 5
    assert report.passed


def test_complement_word() -> None:
    """
    γw ≡ u·(γ·w) для всех γ и слов длины <= 3 при n = 3.
    """
    styl3 = get_monoid(3)
    alphabet = styl3.alphabet
    for gamma in alphabet.columns():
        for word in alphabet.words(3):
            u = complement_word(alphabet, gamma, word)
            left = column_word(gamma) + word
            right = u + column_word(right_act_word(gamma, word))
            assert plactic_equivalent(left, right)
            assert styl3.stylic_equivalent(left, right)


def test_n_paths() -> None:
    styl3 = get_monoid(3)
    paths = n_paths(styl3)

    assert len(paths) == len(styl3)
    for x, path in enumerate(paths):
        assert path.start == styl3.eta(x)
        assert path.end == styl3.rfix(x)
        assert phi(styl3, path) == basis_element(styl3, x)


def test_default_search_length() -> None:
    assert [default_search_length(n) for n in (1, 2, 3, 4, 5)] == [2, 4, 6, 10, 15]


def test_dot_export() -> None:
    dot = build_quiver(3).to_dot()

    assert dot.startswith("digraph Q {")
    assert dot.count("->") == 5
    assert "label=c" in dot


def test_json_export() -> None:
    export = build_extended(2).to_export()

    assert export.extended is True
    assert export.edges[0].model_dump() == {"src": 1, "label": 1, "dst": 1}


def test_path_algebra_products() -> None:
    styl3 = get_monoid(3)
    quiver = build_quiver(3)
    first = PathAlgebraElement.arrow(quiver, Edge(0b011, C, 0b101))
    second = PathAlgebraElement.arrow(quiver, Edge(0b101, B, 0b110))
    product = first * second

    assert product == PathAlgebraElement.of_path(quiver, quiver.path(0b011, (C, B)))
    assert not second * first
    assert product.in_arrow_square()
    assert not first.in_arrow_square()
    assert PathAlgebraElement.vertex(quiver, 0b011) * first == first
    assert (first - first) == PathAlgebraElement(quiver)
    assert product.image(styl3) == phi(styl3, quiver.path(0b011, (C, B)))
    assert (2 * first).image(styl3) == phi(styl3, quiver.path(0b011, (C,))) * 2
