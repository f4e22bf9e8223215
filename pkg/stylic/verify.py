"""
Модуль полного набора проверок свойств стилического моноида, его алгебры и колчана.

Для каждого размера алфавита m <= min(n, 4) группы проверок выполняются
исчерпывающим перебором; для каждого m от 5 до n утверждения, индексированные
словами, проверяются на случайной выборке из не менее чем 10⁴ случаев.
Проверки не выбрасывают исключений: результат содержит контрпример.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from stylic.algebra import (
    AlgebraElement,
    basis_realization_check,
    corner_dimension,
    idempotent,
    triangular_basis,
    verify_idempotent_system,
)
from stylic.cartan import cartan_combinatorial, cartan_linear, fix_cross_check, projective_basis
from stylic.config import get_settings, resolve_threads
from stylic.core import (
    Alphabet,
    Column,
    Word,
    column_height,
    column_min,
    column_weight,
    column_word,
    is_frank,
    left_act,
    left_insert,
    right_act,
    right_act_word,
)
from stylic.errors import StylicError
from stylic.models import CheckResult, VerificationReport
from stylic.monoid import StylMonoid, get_monoid, restriction_embedding_check
from stylic.quiver import (
    Path,
    Quiver,
    admissibility_check,
    build_extended,
    build_quiver,
    complement_word,
    default_search_length,
    enumerate_paths,
    kernel_span_check,
    loops_removal,
    n_paths,
    phi,
    phi_rank,
)
from stylic.tableaux import (
    column_reading_word,
    enumerate_tableaux,
    knuth_relation_instances,
    p_symbol,
    plactic_equivalent,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 4
RANDOM_CASES = 10_000
# |Styl(A)| для n = 1..5
KNOWN_SIZES = {1: 2, 2: 5, 3: 15, 4: 52, 5: 203}
KNOWN_PATH_COUNTS = {1: 2, 2: 5, 3: 15, 4: 58}

Witness = Optional[str]


def _result(name: str, n: int, cases: int, witness: Witness) -> CheckResult:
    return CheckResult(name=name, n=n, cases=cases, passed=witness is None, witness=witness)


def _first(cases: Iterator[Witness]) -> Tuple[int, Witness]:
    """Прогоняет генератор проверок до первого контрпримера."""
    count = 0
    for witness in cases:
        count += 1
        if witness is not None:
            return count, witness
    return count, None


def _check(name: str, n: int, cases: Iterator[Witness]) -> CheckResult:
    count, witness = _first(cases)
    return _result(name, n, count, witness)


def _decreasing_words(alphabet: Alphabet) -> List[Word]:
    return [column_word(gamma) for gamma in alphabet.columns()]


def _superplax_instances(n: int) -> Iterator[Tuple[Word, Word, Word]]:
    """(x1..xp, z1..zq, y) при x1<..<xp<y<z1<..<zq, p, q >= 1."""
    for y in range(2, n):
        below = range(1, y)
        above = range(y + 1, n + 1)
        for p in range(1, len(below) + 1):
            for xs in combinations(below, p):
                for q in range(1, len(above) + 1):
                    for zs in combinations(above, q):
                        yield xs, zs, (y,)


def _q_prime_words(gamma: Column, n: int, max_length: int) -> Iterator[Word]:
    """Все слова длины <= max_length, помечающие путь в Q'(A) из γ."""
    stack: List[Tuple[Column, Word]] = [(gamma, ())]
    while stack:
        column, word = stack.pop()
        yield word
        low = column_min(column)
        if low is None or len(word) == max_length:
            continue
        for letter in range(low, n + 1):
            stack.append((right_act(column, letter)[0], word + (letter,)))


def _left_right_action_cases(alphabet: Alphabet) -> Iterator[Witness]:
    """(γ, c) ↦ (δ, b) справа тогда и только тогда, когда (b, δ) ↦ (γ, c) слева."""
    columns = list(alphabet.columns())
    for gamma in columns:
        for delta in columns:
            if column_height(gamma) != column_height(delta):
                continue
            for b in alphabet.letters():
                for c in alphabet.letters():
                    left = left_insert(b, delta) == (gamma, c)
                    right = right_act(gamma, c) == (delta, b)
                    yield None if left == right else (
                        f"γ={alphabet.column_name(gamma)}, δ={alphabet.column_name(delta)}, "
                        f"b={alphabet.letter_name(b)}, c={alphabet.letter_name(c)}"
                    )


def _edge_identity_cases(monoid: StylMonoid, quiver: Quiver) -> Iterator[Witness]:
    """Для ребра γ -c-> δ с вытесненной буквой b: b·e_γ·c = b·c·e_δ и e_γ·c·e_δ = e_γ·c."""
    alphabet = monoid.alphabet
    name = alphabet.column_name
    for edge in quiver.edges:
        bumped = right_act(edge.source, edge.label)[1]
        e_source = idempotent(monoid, edge.source)
        e_target = idempotent(monoid, edge.target)
        b = AlgebraElement.letter(monoid, bumped)
        c = AlgebraElement.letter(monoid, edge.label)
        ok = b * e_source * c == b * c * e_target and e_source * c * e_target == e_source * c
        yield None if ok else f"{name(edge.source)} -{alphabet.letter_name(edge.label)}-> {name(edge.target)}"


def _phi_image_cases(monoid: StylMonoid, paths: Sequence[Path]) -> Iterator[Witness]:
    for path in paths:
        try:
            phi(monoid, path, check=True)
            yield None
        except StylicError as e:
            yield str(e)


def _algebra_axa_witness(monoid: StylMonoid, x: int, a: int) -> Witness:
    """При a <= min(x) в алгебре: a·x·a = x·a, (1-a)·x·a = 0, (1-a)·x·(1-a) = (1-a)·x."""
    one = AlgebraElement.one(monoid)
    ex = AlgebraElement.basis(monoid, x)
    ea = AlgebraElement.letter(monoid, a)
    ok = (
        ea * ex * ea == ex * ea
        and not (one - ea) * ex * ea
        and (one - ea) * ex * (one - ea) == (one - ea) * ex
    )
    alphabet = monoid.alphabet
    return None if ok else f"a={alphabet.letter_name(a)}, x={alphabet.word_name(monoid.rep_words[x])}"


# ---------------------------------------------------------------- core


def check_core(m: int) -> List[CheckResult]:
    alphabet = Alphabet(n=m)
    columns = list(alphabet.columns())
    words = list(alphabet.words(6 if m <= 3 else 5))

    def left_right() -> Iterator[Witness]:
        for word in words:
            for gamma in columns:
                dual = alphabet.theta_column(
                    left_act(alphabet.theta_word(word), alphabet.theta_column(gamma))
                )
                yield None if right_act_word(gamma, word) == dual else (
                    f"γ={alphabet.column_name(gamma)}, w={alphabet.word_name(word)}"
                )

    def frank_height() -> Iterator[Witness]:
        for gamma in columns:
            for c in alphabet.letters():
                if is_frank(gamma, c):
                    target = right_act(gamma, c)[0]
                    ok = column_height(target) == column_height(gamma) and column_weight(target) > column_weight(gamma)
                    yield None if ok else f"γ={alphabet.column_name(gamma)}, c={alphabet.letter_name(c)}"

    def height_monotone() -> Iterator[Witness]:
        for word in words:
            for gamma in columns:
                ok = (
                    column_height(left_act(word, gamma)) >= column_height(gamma)
                    and column_height(right_act_word(gamma, word)) >= column_height(gamma)
                )
                yield None if ok else f"γ={alphabet.column_name(gamma)}, w={alphabet.word_name(word)}"

    def theta_involution() -> Iterator[Witness]:
        for gamma in columns:
            yield None if alphabet.theta_column(alphabet.theta_column(gamma)) == gamma else alphabet.column_name(gamma)
        for u in words[: 1 + m + m * m]:
            for v in words[: 1 + m + m * m]:
                ok = (
                    alphabet.theta_word(alphabet.theta_word(u)) == u
                    and alphabet.theta_word(u + v) == alphabet.theta_word(v) + alphabet.theta_word(u)
                )
                yield None if ok else f"u={alphabet.word_name(u)}, v={alphabet.word_name(v)}"

    return [
        _check("core.left_right_action", m, _left_right_action_cases(alphabet)),
        _check("core.left_right", m, left_right()),
        _check("core.frank_height", m, frank_height()),
        _check("core.height_monotone", m, height_monotone()),
        _check("core.theta_involution", m, theta_involution()),
    ]


# ---------------------------------------------------------------- tableaux


def check_tableaux(m: int) -> List[CheckResult]:
    alphabet = Alphabet(n=m)
    monoid = get_monoid(m)

    def round_trip() -> Iterator[Witness]:
        for tableau in enumerate_tableaux(m, 6):
            yield None if p_symbol(column_reading_word(tableau)) == tableau else str(tableau)

    def knuth() -> Iterator[Witness]:
        for u, v in knuth_relation_instances(m):
            yield None if plactic_equivalent(u, v) else f"{alphabet.word_name(u)} ≠ {alphabet.word_name(v)}"

    def first_column() -> Iterator[Witness]:
        for word in alphabet.words(6 if m <= 3 else 5):
            tableau = p_symbol(word)
            first = tableau[0] if tableau else 0
            yield None if first == left_act(word, 0) else alphabet.word_name(word)

    def plactic_implies_stylic() -> Iterator[Witness]:
        for u, v in knuth_relation_instances(m):
            yield None if monoid.stylic_equivalent(u, v) else f"{alphabet.word_name(u)} ≢ {alphabet.word_name(v)}"
        a = (1,)
        yield None if monoid.stylic_equivalent(a, a + a) and not plactic_equivalent(a, a + a) else "a, aa"

    results = [
        _check("tableaux.knuth_relations", m, knuth()),
        _check("tableaux.first_column", m, first_column()),
        _check("tableaux.plactic_implies_stylic", m, plactic_implies_stylic()),
    ]
    # таблицы перебираются только при m <= 3
    if m <= 3:
        results.insert(0, _check("tableaux.round_trip", m, round_trip()))
    return results


# ---------------------------------------------------------------- monoid


def check_monoid(m: int) -> List[CheckResult]:
    monoid = get_monoid(m)
    alphabet = monoid.alphabet
    name = alphabet.word_name
    results = []

    expected = KNOWN_SIZES.get(m)
    results.append(_result(
        "monoid.cardinality", m, len(monoid),
        None if expected in (None, len(monoid)) else f"|Styl({m})| = {len(monoid)}, ожидалось {expected}",
    ))

    def antisymmetry() -> Iterator[Witness]:
        for x in monoid.ids():
            for y in monoid.ideal(x):
                if y != x and monoid.j_leq(x, y):
                    yield f"{name(monoid.rep_words[x])} ~J {name(monoid.rep_words[y])}"
                    return
            yield None

    def axa() -> Iterator[Witness]:
        for x in monoid.ids():
            word = monoid.rep_words[x]
            low = min(word) if word else m
            for a in range(1, low + 1):
                ga = monoid.generator_ids[a - 1]
                yield None if monoid.mul(monoid.mul(ga, x), ga) == monoid.mul(x, ga) else (
                    f"a={alphabet.letter_name(a)}, x={name(word)}"
                )

    def decreasing_idempotent() -> Iterator[Witness]:
        for word in _decreasing_words(alphabet):
            yield None if monoid.is_idempotent(monoid.id_of_word(word)) else name(word)

    def relations_factor() -> Iterator[Witness]:
        for u, v in knuth_relation_instances(m):
            yield None if monoid.stylic_equivalent(u, v) else f"{name(u)}, {name(v)}"
        for a in alphabet.letters():
            yield None if monoid.stylic_equivalent((a,), (a, a)) else name((a, a))

    def superplax() -> Iterator[Witness]:
        for xs, zs, y in _superplax_instances(m):
            first = monoid.stylic_equivalent(xs + zs + y, zs + xs + y)
            second = monoid.stylic_equivalent(y + xs + zs, y + zs + xs)
            yield None if first and second else f"x={name(xs)}, z={name(zs)}, y={name(y)}"

    results += [
        _check("monoid.j_antisymmetry", m, antisymmetry()),
        _check("monoid.axa", m, axa()),
        _check("monoid.decreasing_idempotent", m, decreasing_idempotent()),
        _check("monoid.relations_factor", m, relations_factor()),
        _check("monoid.superplax", m, superplax()),
    ]
    if m >= 2:
        witness = restriction_embedding_check(monoid, get_monoid(m - 1))
        results.append(_result("monoid.restriction_embedding", m, len(monoid), witness))
    return results


# ---------------------------------------------------------------- algebra


def check_algebra(m: int, search_length: Optional[int] = None) -> List[CheckResult]:
    monoid = get_monoid(m)
    alphabet = monoid.alphabet
    results = verify_idempotent_system(monoid)

    def egammagamma() -> Iterator[Witness]:
        for gamma in alphabet.columns():
            e = idempotent(monoid, gamma)
            ok = e * AlgebraElement.basis(monoid, monoid.id_of_column(gamma)) == e
            yield None if ok else alphabet.column_name(gamma)

    def axa() -> Iterator[Witness]:
        for x in monoid.ids():
            word = monoid.rep_words[x]
            for a in range(1, (min(word) if word else m) + 1):
                yield _algebra_axa_witness(monoid, x, a)

    def corner_sum() -> Iterator[Witness]:
        total = sum(
            corner_dimension(monoid, g, d) for g in alphabet.columns() for d in alphabet.columns()
        )
        yield None if total == len(monoid) else f"Σ dim = {total} != {len(monoid)}"

    try:
        triangular_basis(monoid)
        witness = None
    except StylicError as e:
        witness = str(e)
    results += [
        _check("algebra.e_gamma_gamma", m, egammagamma()),
        _check("algebra.axa", m, axa()),
        _result("algebra.triangular_basis", m, len(monoid), witness),
        basis_realization_check(monoid, search_length or default_search_length(m)),
        _check("algebra.corner_sum", m, corner_sum()),
    ]
    return results


# ---------------------------------------------------------------- quiver


def check_quiver(m: int, search_length: Optional[int] = None) -> List[CheckResult]:
    monoid = get_monoid(m)
    alphabet = monoid.alphabet
    quiver = build_quiver(m)
    extended = build_extended(m)
    paths = enumerate_paths(quiver)
    name = alphabet.column_name

    def path_count() -> Iterator[Witness]:
        expected = KNOWN_PATH_COUNTS.get(m)
        yield None if expected in (None, len(paths)) else f"{len(paths)} путей, ожидалось {expected}"

    def surjective() -> Iterator[Witness]:
        rank = phi_rank(monoid, quiver)
        yield None if rank == len(monoid) else f"rank φ = {rank}, |Styl| = {len(monoid)}"

    def determinism() -> Iterator[Witness]:
        yield None if extended.is_deterministic() else "Q' не детерминирован"
        for gamma in alphabet.columns():
            low = column_min(gamma)
            for c in alphabet.letters():
                has_edge = extended.successor(gamma, c) is not None
                yield None if has_edge == (low is not None and c >= low) else f"{name(gamma)}, {alphabet.letter_name(c)}"

    def loops() -> Iterator[Witness]:
        for gamma in alphabet.columns():
            gamma_word = column_word(gamma)
            for word in _q_prime_words(gamma, m, 4):
                reduced = loops_removal(alphabet, gamma, word)
                ok = (
                    right_act_word(gamma, reduced) == right_act_word(gamma, word)
                    and monoid.stylic_equivalent(gamma_word + reduced, gamma_word + word)
                )
                try:
                    quiver.path(gamma, reduced)
                except StylicError:
                    ok = False
                yield None if ok else f"γ={name(gamma)}, w={alphabet.word_name(word)}"

    def gammau() -> Iterator[Witness]:
        for gamma in alphabet.columns():
            actions: Dict[int, Column] = {}
            for word in alphabet.words(4 if m <= 3 else 3):
                x = monoid.id_of_word(column_word(gamma) + word)
                action = right_act_word(gamma, word)
                previous = actions.setdefault(x, action)
                yield None if previous == action else f"γ={name(gamma)}, u={alphabet.word_name(word)}"

    def complement() -> Iterator[Witness]:
        for gamma in alphabet.columns():
            for word in alphabet.words(4 if m <= 3 else 3):
                yield _complement_witness(monoid, gamma, word)

    def surjectivity_paths() -> Iterator[Witness]:
        try:
            n_paths(monoid, search_length)
            yield None
        except StylicError as e:
            yield str(e)

    results = [
        _result("quiver.acyclic", m, 1, None if quiver.is_acyclic() else "Q содержит цикл"),
        _check("quiver.extended_determinism", m, determinism()),
        _check("quiver.edge_identities", m, _edge_identity_cases(monoid, quiver)),
        _check("quiver.phi_image", m, _phi_image_cases(monoid, paths)),
        _check("quiver.path_count", m, path_count()),
        _check("quiver.phi_surjective", m, surjective()),
        _check("quiver.loops_removal", m, loops()),
        _check("quiver.gammau", m, gammau()),
        _check("quiver.complement_word", m, complement()),
        _check("quiver.surjectivity_paths", m, surjectivity_paths()),
    ]
    kernel = kernel_span_check(monoid, quiver)
    results.append(_result("quiver.kernel_span", m, kernel.paths, None if kernel.passed else kernel.witness or "ошибка"))
    admissible = admissibility_check(monoid, quiver)
    results.append(_result(
        "quiver.admissibility", m, kernel.kernel_dimension,
        None if admissible.passed else admissible.witness or "ошибка",
    ))
    return results


def _complement_witness(monoid: StylMonoid, gamma: Column, word: Word) -> Witness:
    alphabet = monoid.alphabet
    u = complement_word(alphabet, gamma, word)
    left = monoid.id_of_word(column_word(gamma) + word)
    right = monoid.id_of_word(u + column_word(right_act_word(gamma, word)))
    return None if left == right else f"γ={alphabet.column_name(gamma)}, w={alphabet.word_name(word)}"


# ---------------------------------------------------------------- cartan


def check_cartan(m: int) -> List[CheckResult]:
    monoid = get_monoid(m)
    alphabet = monoid.alphabet
    linear = cartan_linear(monoid, threads=1)
    combinatorial = cartan_combinatorial(monoid)

    def equal() -> Iterator[Witness]:
        for gamma in linear.order:
            for delta in linear.order:
                a, b = linear.entry(gamma, delta), combinatorial.entry(gamma, delta)
                yield None if a == b else (
                    f"({alphabet.column_name(gamma)}, {alphabet.column_name(delta)}): {a} != {b}"
                )

    def shape() -> Iterator[Witness]:
        yield None if linear.total() == len(monoid) else f"Σ = {linear.total()}"
        for gamma in linear.order:
            yield None if linear.entry(gamma, gamma) >= 1 else f"диагональ {alphabet.column_name(gamma)}"

    def projectives() -> Iterator[Witness]:
        rows, columns = linear.row_sums(), linear.column_sums()
        for index, gamma in enumerate(linear.order):
            try:
                right = len(projective_basis(monoid, gamma, "right"))
                left = len(projective_basis(monoid, gamma, "left"))
            except StylicError as e:
                yield str(e)
                continue
            yield None if (right, left) == (rows[index], columns[index]) else alphabet.column_name(gamma)

    return [
        _check("cartan.linear_equals_combinatorial", m, equal()),
        _check("cartan.entries", m, shape()),
        _check("cartan.projective_bases", m, projectives()),
        fix_cross_check(monoid),
    ]


# ---------------------------------------------------------------- randomized


def check_randomized(n: int, seed: int, cases: int = RANDOM_CASES) -> List[CheckResult]:
    """
    Проверки для n >= 5. Утверждения, индексированные словами, - на случайной выборке;
    действия на столбцах и ребра Q(A) перебираются полностью, пути Q(A) - если их не больше cases.
    """
    rng = random.Random(seed)
    monoid = get_monoid(n)
    alphabet = monoid.alphabet
    name = alphabet.word_name

    def word(max_length: int = 8) -> Word:
        return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_length)))

    def column() -> Column:
        return rng.randrange(1 << n)

    def left_right() -> Iterator[Witness]:
        for _ in range(cases):
            w, gamma = word(), column()
            dual = alphabet.theta_column(left_act(alphabet.theta_word(w), alphabet.theta_column(gamma)))
            yield None if right_act_word(gamma, w) == dual else f"γ={alphabet.column_name(gamma)}, w={name(w)}"

    def first_column() -> Iterator[Witness]:
        for _ in range(cases):
            w = word()
            tableau = p_symbol(w)
            yield None if (tableau[0] if tableau else 0) == left_act(w, 0) else name(w)

    def axa() -> Iterator[Witness]:
        for _ in range(cases):
            w = word()
            low = min(w) if w else n
            a = (rng.randint(1, low),)
            yield None if monoid.stylic_equivalent(a + w + a, w + a) else f"a={name(a)}, x={name(w)}"

    def superplax() -> Iterator[Witness]:
        instances = list(_superplax_instances(n))
        for _ in range(cases):
            xs, zs, y = rng.choice(instances)
            u = word(3)
            ok = (
                monoid.stylic_equivalent(u + xs + zs + y, u + zs + xs + y)
                and monoid.stylic_equivalent(y + xs + zs + u, y + zs + xs + u)
            )
            yield None if ok else f"x={name(xs)}, z={name(zs)}, y={name(y)}"

    def gammau() -> Iterator[Witness]:
        for _ in range(cases):
            gamma, u, v = column(), word(5), word(5)
            if right_act_word(gamma, u) != right_act_word(gamma, v):
                same = monoid.stylic_equivalent(column_word(gamma) + u, column_word(gamma) + v)
                yield f"γ={alphabet.column_name(gamma)}, u={name(u)}, v={name(v)}" if same else None
            else:
                yield None

    def loops() -> Iterator[Witness]:
        for _ in range(cases):
            gamma = column() or 1
            w: List[int] = []
            current = gamma
            for _ in range(rng.randint(0, 8)):
                letter = rng.randint(column_min(current), n)
                w.append(letter)
                current = right_act(current, letter)[0]
            reduced = loops_removal(alphabet, gamma, w)
            ok = right_act_word(gamma, reduced) == current and monoid.stylic_equivalent(
                column_word(gamma) + reduced, column_word(gamma) + tuple(w)
            )
            yield None if ok else f"γ={alphabet.column_name(gamma)}, w={name(tuple(w))}"

    def complement() -> Iterator[Witness]:
        for _ in range(cases):
            yield _complement_witness(monoid, column(), word(6))

    def knuth() -> Iterator[Witness]:
        for u, v in knuth_relation_instances(n):
            ok = plactic_equivalent(u, v) and monoid.stylic_equivalent(u, v)
            yield None if ok else f"{name(u)}, {name(v)}"

    def algebra_axa() -> Iterator[Witness]:
        for _ in range(cases):
            x = rng.randrange(len(monoid))
            word_x = monoid.rep_words[x]
            yield _algebra_axa_witness(monoid, x, rng.randint(1, min(word_x) if word_x else n))

    quiver = build_quiver(n)
    paths = enumerate_paths(quiver)
    if len(paths) > cases:
        paths = rng.sample(paths, cases)

    expected = KNOWN_SIZES.get(n)
    return [
        _result("monoid.cardinality", n, len(monoid),
                None if expected in (None, len(monoid)) else f"|Styl({n})| = {len(monoid)}, ожидалось {expected}"),
        _check("random.left_right", n, left_right()),
        _check("random.first_column", n, first_column()),
        _check("random.axa", n, axa()),
        _check("random.algebra_axa", n, algebra_axa()),
        _check("random.left_right_action", n, _left_right_action_cases(alphabet)),
        _check("random.edge_identities", n, _edge_identity_cases(monoid, quiver)),
        _check("random.phi_image", n, _phi_image_cases(monoid, paths)),
        _check("random.superplax", n, superplax()),
        _check("random.gammau", n, gammau()),
        _check("random.loops_removal", n, loops()),
        _check("random.complement_word", n, complement()),
        _check("tableaux.knuth_relations", n, knuth()),
    ]


GROUPS: Tuple[Tuple[str, Callable[..., List[CheckResult]]], ...] = (
    ("core", check_core),
    ("tableaux", check_tableaux),
    ("monoid", check_monoid),
    ("algebra", check_algebra),
    ("quiver", check_quiver),
    ("cartan", check_cartan),
)
SEARCH_GROUPS = ("algebra", "quiver")


def _guarded(group: str, m: int, run: Callable[[], List[CheckResult]]) -> List[CheckResult]:
    """Исключение внутри группы превращается в проваленную проверку."""
    try:
        results = run()
    except StylicError as e:
        logger.error(f"Группа {group} (n={m}) прервана: {e}")
        return [_result(f"{group}.error", m, 0, str(e))]
    failed = [r for r in results if not r.passed]
    if failed:
        logger.error(f"Группа {group} (n={m}): {len(failed)} проверок не прошли")
    else:
        logger.info(f"Группа {group} (n={m}): {len(results)} проверок пройдено")
    return results


def run_suite(
    n: int,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
    max_word_search_length: Optional[int] = None,
) -> VerificationReport:
    """
    Запускает все группы проверок.

    Аргументы:
        n (int): Размер алфавита.
        seed (Optional[int]): Зерно выборки; по умолчанию STYLIC_SEED.
        threads (Optional[int]): Число потоков; по умолчанию STYLIC_THREADS.
        max_word_search_length (Optional[int]): Предел длины слов в поиске путей.

    Возвращает:
        VerificationReport: Результаты, отсортированные по (имя, n).
    """
    settings = get_settings()
    seed = settings.STYLIC_SEED if seed is None else seed
    workers = threads or resolve_threads(settings)
    Alphabet(n=n)

    # перечисление до запуска потоков
    for m in range(1, min(n, EXHAUSTIVE_LIMIT) + 1):
        get_monoid(m)

    tasks: List[Tuple[str, int, Callable[[], List[CheckResult]]]] = [
        (group, m, (lambda check=check, m=m, group=group: (
            check(m, max_word_search_length) if group in SEARCH_GROUPS else check(m)
        )))
        for m in range(1, min(n, EXHAUSTIVE_LIMIT) + 1)
        for group, check in GROUPS
    ]
    tasks += [
        ("random", m, lambda m=m: check_randomized(m, seed))
        for m in range(EXHAUSTIVE_LIMIT + 1, n + 1)
    ]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        chunks = list(executor.map(lambda task: _guarded(*task), tasks))
    checks = sorted((r for chunk in chunks for r in chunk), key=lambda r: (r.name, r.n))
    report = VerificationReport(n=n, seed=seed, checks=checks)
    log = logger.info if report.passed else logger.error
    log(f"Проверка для n={n}: {sum(c.passed for c in checks)}/{len(checks)} пройдено")
    return report


def format_report(report: VerificationReport) -> str:
    """Таблица результатов для вывода в консоль."""
    width = max((len(c.name) for c in report.checks), default=4)
    lines = [f"seed = {report.seed}", f"{'check'.ljust(width)}  n  {'cases':>7}  result"]
    for check in report.checks:
        status = "PASS" if check.passed else f"FAIL  {check.witness}"
        lines.append(f"{check.name.ljust(width)}  {check.n}  {check.cases:>7}  {status}")
    return "\n".join(lines)
