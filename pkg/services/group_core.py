"""Точная арифметика в π₁(F), π₁(STF), π₁(PTF) и в модели π₁(CSTF)."""
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

import config
from services.errors import (
    AmbientMismatch,
    InvalidElement,
    TrivialElement,
    UnsupportedSurface,
)
from services.surfaces import FIBER, HALF_FIBER, KLEIN_BOTTLE, Letter, SurfaceKind, SurfaceSpec

logger = logging.getLogger(__name__)

Word = Tuple[Letter, ...]

# слово базы хранится побуквенно, показатель слоя - числом
MAX_LETTER_EXPONENT = 10_000

_ABELIAN = {
    SurfaceKind.PLANE,
    SurfaceKind.SPHERE,
    SurfaceKind.TORUS,
    SurfaceKind.PROJECTIVE_PLANE,
}


class Ambient(str, Enum):
    BASE = "BaseF"
    STF = "STF"
    PTF = "PTF"
    CSTF = "CSTFModel"


@dataclass(frozen=True, eq=False)
class GroupElem:
    """Элемент группы: редуцированное слово базы и показатель слоя.

    Для STF показатель считается в единицах f₂, для PTF в единицах
    полуслоя h (h² = f₂). Для модели CSTF дополнительно хранится
    целая координата `cst_exp`.
    """

    surface: SurfaceSpec
    ambient: Ambient
    word: Word = ()
    fiber_exp: int = 0
    cst_exp: int = 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElem):
            return NotImplemented
        if self.surface != other.surface or self.ambient != other.ambient:
            return False
        if (self.word, self.fiber_exp, self.cst_exp) == (other.word, other.fiber_exp, other.cst_exp):
            return True
        if self.surface.kind != SurfaceKind.CLOSED:
            return False
        return is_identity(compose(self, inverse(other)))

    def __hash__(self) -> int:
        return hash((self.surface, self.ambient) + _hash_invariant(self))

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        return compose(self, other)

    def __invert__(self) -> "GroupElem":
        return inverse(self)

    def __pow__(self, n: int) -> "GroupElem":
        return power(self, n)

    def __repr__(self) -> str:
        return f"GroupElem({self.surface.describe()}, {self.ambient.value}, {format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    def sort_key(self) -> Tuple:
        order = self.surface.letter_order()
        return (
            len(self.word),
            tuple(order[letter] for letter in self.word),
            abs(self.fiber_exp),
            self.fiber_exp < 0,
            self.cst_exp,
        )


@dataclass(frozen=True)
class ConjugacyWitness:
    conjugator: GroupElem


@dataclass(frozen=True)
class Inconclusive:
    """Ограниченный поиск не дал ответа."""

    radius: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class ConjugacyNormalForm:
    rep: GroupElem
    conjugator: GroupElem
    certified: bool


@dataclass(frozen=True)
class CentralizerInfo:
    generators: Tuple[GroupElem, ...]
    iso_type: str
    case: str
    whole_group: bool = False


# --- буквы и слова -------------------------------------------------------


def _fiber_unit(ambient: Ambient) -> int:
    if ambient == Ambient.BASE:
        return 0
    if ambient == Ambient.PTF:
        return 2
    return 1


def _check_surface(surface: SurfaceSpec) -> None:
    if surface.kind == SurfaceKind.NONORIENTABLE:
        raise UnsupportedSurface(
            f"группа расслоения для {surface.describe()} не моделируется"
        )


def invert_word(word: Sequence[Letter]) -> Word:
    return tuple((name, -exp) for name, exp in reversed(word))


def free_reduce(word: Sequence[Letter]) -> Word:
    stack: List[Letter] = []
    for letter in word:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def word_parity(surface: SurfaceSpec, word: Sequence[Letter]) -> int:
    reversing = surface.reversing_generators
    count = sum(1 for name, _ in word if name in reversing)
    return -1 if count % 2 else 1


def _power_word(name: str, n: int) -> Word:
    sign = 1 if n > 0 else -1
    return tuple((name, sign) for _ in range(abs(n)))


def exponent_sums(surface: SurfaceSpec, word: Sequence[Letter]) -> Tuple[int, ...]:
    """Абелианизация базовой части слова."""
    gens = surface.base_generators
    sums = dict.fromkeys(gens, 0)
    for name, exp in word:
        sums[name] += exp
    return tuple(sums[g] for g in gens)


# --- соотношение поверхности рода g ----------------------------------------


@lru_cache(maxsize=None)
def _relator_tables(surface: SurfaceSpec) -> Tuple[Dict[Word, Tuple[Word, int]], Dict[Word, Tuple[Word, int]]]:
    """Подслова циклических перестановок R^{±1}: u -> (v⁻¹, знак).

    Если ρ = uv - циклическая перестановка R^s, то u = f^{s(2g−2)} v⁻¹.
    Первая таблица - подслова длиннее половины, вторая - ровно половина.
    """
    relator = surface.relator
    n = len(relator)
    half = n // 2
    long_table: Dict[Word, Tuple[Word, int]] = {}
    half_table: Dict[Word, Tuple[Word, int]] = {}
    for sign, base in ((1, relator), (-1, invert_word(relator))):
        for shift in range(n):
            rho = base[shift:] + base[:shift]
            for length in range(half, n + 1):
                u, v = rho[:length], rho[length:]
                target = long_table if length > half else half_table
                target.setdefault(u, (invert_word(v), sign))
    return long_table, half_table


def _dehn_reduce(surface: SurfaceSpec, word: Word, fiber: int, unit: int) -> Tuple[Word, int]:
    """Алгоритм Дена с учетом слоя и shortlex-заменами половин соотношения."""
    long_table, half_table = _relator_tables(surface)
    n = len(surface.relator)
    half = n // 2
    order = surface.letter_order()
    euler = surface.euler_increment * unit

    current = list(free_reduce(word))
    while True:
        replaced = False
        for length in range(n, half, -1):
            for i in range(len(current) - length + 1):
                hit = long_table.get(tuple(current[i:i + length]))
                if hit is not None:
                    current[i:i + length] = hit[0]
                    fiber += hit[1] * euler
                    replaced = True
                    break
            if replaced:
                break
        if not replaced:
            for i in range(len(current) - half + 1):
                u = tuple(current[i:i + half])
                hit = half_table.get(u)
                if hit is None:
                    continue
                if [order[x] for x in hit[0]] < [order[x] for x in u]:
                    current[i:i + half] = hit[0]
                    fiber += hit[1] * euler
                    replaced = True
                    break
        if not replaced:
            return tuple(current), fiber
        current = list(free_reduce(current))


# --- группа Клейна в координатах c^i d^j f^k --------------------------------


def _klein_mul(x: Tuple[int, int, int], y: Tuple[int, int, int]) -> Tuple[int, int, int]:
    i, j, k = x
    i2, j2, k2 = y
    sign_j = -1 if j % 2 else 1
    sign_j2 = -1 if j2 % 2 else 1
    return (i + sign_j * i2, j + j2, sign_j2 * k + k2)


def klein_coordinates(e: GroupElem) -> Tuple[int, int, int]:
    """Координаты (i, j, k) нормальной формы c^i d^j f^k."""
    acc = (0, 0, 0)
    for name, exp in e.word:
        step = (exp, 0, 0) if name == "c" else (0, exp, 0)
        acc = _klein_mul(acc, step)
    return _klein_mul(acc, (0, 0, e.fiber_exp))


def klein_element(i: int, j: int, k: int = 0, ambient: Ambient = Ambient.STF) -> GroupElem:
    word = _power_word("c", i) + _power_word("d", j)
    return GroupElem(KLEIN_BOTTLE, ambient, word, k if ambient != Ambient.BASE else 0)


# --- нормальная форма --------------------------------------------------------


def reduce(e: GroupElem) -> GroupElem:
    """Нормальная форма элемента; идемпотентна."""
    surface = e.surface
    _check_surface(surface)
    kind = surface.kind
    unit = _fiber_unit(e.ambient)
    allowed = set(surface.base_generators)
    for name, _ in e.word:
        if name not in allowed:
            raise InvalidElement(f"образующая '{name}' не принадлежит π₁({surface.describe()})")

    fiber = e.fiber_exp if unit else 0
    if e.ambient == Ambient.PTF and not surface.orientable:
        raise UnsupportedSurface("π₁(PTF) моделируется только для ориентируемых поверхностей")

    if kind == SurfaceKind.PLANE:
        word: Word = ()
    elif kind == SurfaceKind.SPHERE:
        word = ()
        if e.ambient == Ambient.STF or e.ambient == Ambient.CSTF:
            fiber %= 2
        elif e.ambient == Ambient.PTF:
            fiber %= 4
    elif kind == SurfaceKind.TORUS:
        i, j = exponent_sums(surface, e.word)
        word = _power_word("a1", i) + _power_word("b1", j)
    elif kind == SurfaceKind.FREE:
        word = free_reduce(e.word)
    elif kind == SurfaceKind.CLOSED:
        word, fiber = _dehn_reduce(surface, free_reduce(e.word), fiber, unit)
    elif kind == SurfaceKind.PROJECTIVE_PLANE:
        (p,) = exponent_sums(surface, e.word)
        if e.ambient == Ambient.BASE:
            word = _power_word("p", p % 2)
        else:
            value = (p + 2 * fiber) % 4
            word = _power_word("p", value % 2)
            fiber = value // 2
    elif kind == SurfaceKind.KLEIN_BOTTLE:
        i, j, k = klein_coordinates(GroupElem(surface, e.ambient, e.word, fiber))
        word = _power_word("c", i) + _power_word("d", j)
        fiber = k if unit else 0
    else:  # pragma: no cover - отсечено _check_surface
        raise UnsupportedSurface(surface.describe())

    return GroupElem(surface, e.ambient, word, fiber, e.cst_exp)


def identity(surface: SurfaceSpec, ambient: Ambient = Ambient.STF) -> GroupElem:
    _check_surface(surface)
    return GroupElem(surface, ambient)


def generator(surface: SurfaceSpec, name: str, ambient: Ambient = Ambient.STF) -> GroupElem:
    """Образующая по имени; `f` - слой f₂, `h` - полуслой PTF."""
    _check_surface(surface)
    if name == FIBER:
        if ambient == Ambient.BASE:
            raise InvalidElement("в π₁(F) нет слоя f")
        return reduce(GroupElem(surface, ambient, (), 2 if ambient == Ambient.PTF else 1))
    if name == HALF_FIBER:
        if ambient != Ambient.PTF:
            raise InvalidElement("полуслой h есть только в π₁(PTF)")
        return reduce(GroupElem(surface, ambient, (), 1))
    if name not in surface.base_generators:
        raise InvalidElement(f"образующая '{name}' не принадлежит π₁({surface.describe()})")
    return reduce(GroupElem(surface, ambient, ((name, 1),)))


def fiber(surface: SurfaceSpec, k: int = 1, ambient: Ambient = Ambient.STF) -> GroupElem:
    return power(generator(surface, FIBER, ambient), k)


def _check_same(a: GroupElem, b: GroupElem) -> None:
    if a.surface != b.surface or a.ambient != b.ambient:
        raise AmbientMismatch(
            f"{a.ambient.value}({a.surface.describe()}) и {b.ambient.value}({b.surface.describe()})"
        )


def compose(a: GroupElem, b: GroupElem, *rest: GroupElem) -> GroupElem:
    """Произведение a·b (и далее слева направо)."""
    _check_same(a, b)
    # f^k · w = w · f^{±k} в зависимости от ориентации w
    parity = word_parity(b.surface, b.word)
    result = reduce(
        GroupElem(
            a.surface,
            a.ambient,
            a.word + b.word,
            parity * a.fiber_exp + b.fiber_exp,
            a.cst_exp + b.cst_exp,
        )
    )
    for item in rest:
        result = compose(result, item)
    return result


def inverse(a: GroupElem) -> GroupElem:
    parity = word_parity(a.surface, a.word)
    return reduce(
        GroupElem(a.surface, a.ambient, invert_word(a.word), -parity * a.fiber_exp, -a.cst_exp)
    )


def power(a: GroupElem, n: int) -> GroupElem:
    result = identity(a.surface, a.ambient)
    base = a if n >= 0 else inverse(a)
    n = abs(n)
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def conjugate(t: GroupElem, x: GroupElem) -> GroupElem:
    """t·x·t⁻¹."""
    return compose(t, x, inverse(t))


def is_identity(e: GroupElem) -> bool:
    r = reduce(e)
    return not r.word and r.fiber_exp == 0 and r.cst_exp == 0


def _hash_invariant(e: GroupElem) -> Tuple:
    if e.surface.kind == SurfaceKind.CLOSED:
        modulus = e.surface.euler_increment * _fiber_unit(e.ambient)
        fib = e.fiber_exp % modulus if modulus else 0
        return (exponent_sums(e.surface, e.word), fib, e.cst_exp)
    return (e.word, e.fiber_exp, e.cst_exp)


def project(e: GroupElem) -> GroupElem:
    """pr²: STF/PTF/CSTF → π₁(F)."""
    return reduce(GroupElem(e.surface, Ambient.BASE, e.word))


def lift(e: GroupElem, ambient: Ambient = Ambient.STF) -> GroupElem:
    """Слово базы как элемент расслоения с нулевым показателем слоя."""
    if ambient == Ambient.CSTF:
        return cstf_element(0 if word_parity(e.surface, e.word) > 0 else 1, lift(e))
    return reduce(GroupElem(e.surface, ambient, e.word))


def lift_to_ptf(e: GroupElem) -> GroupElem:
    """Образ элемента π₁(STF) в π₁(PTF) = ⟨π₁(STF), h | h² = f₂⟩."""
    if e.ambient != Ambient.STF:
        raise AmbientMismatch("ожидается элемент π₁(STF)")
    return reduce(GroupElem(e.surface, Ambient.PTF, e.word, 2 * e.fiber_exp))


def cstf_element(lift_exp: int, s: GroupElem) -> GroupElem:
    """Элемент модели π₁(CSTF): пара (целое, элемент STF) с правилом четности."""
    if s.ambient != Ambient.STF:
        raise AmbientMismatch("вторая координата модели CSTF лежит в π₁(STF)")
    preserving = word_parity(s.surface, s.word) > 0
    if (lift_exp % 2 == 0) != preserving:
        raise InvalidElement(
            "в модели π₁(CSTF) четная координата сочетается только с сохраняющими ориентацию петлями"
        )
    return GroupElem(s.surface, Ambient.CSTF, s.word, s.fiber_exp, lift_exp)


def cstf_fiber(surface: SurfaceSpec) -> GroupElem:
    """Класс слоя f₁ в модели CSTF: (2, 1)."""
    return cstf_element(2, identity(surface))


def orientation_parity(a: GroupElem) -> int:
    """+1, если базовая петля сохраняет ориентацию, иначе −1."""
    return word_parity(a.surface, a.word)


# --- разбор и печать слов ----------------------------------------------------


def parse_word(surface: SurfaceSpec, text: str, ambient: Ambient = Ambient.STF) -> GroupElem:
    """Разбирает `a1 b1^-1 f^2`; `1` - единица."""
    result = identity(surface, ambient)
    tokens = text.split()
    if tokens == ["1"]:
        return result
    for token in tokens:
        name, sep, exp_text = token.partition("^")
        try:
            exp = int(exp_text) if sep else 1
        except ValueError:
            raise InvalidElement(f"некорректный показатель в '{token}'") from None
        if sep and exp == 0:
            raise InvalidElement(f"нулевой показатель в '{token}'")
        if name not in (FIBER, HALF_FIBER) and abs(exp) > MAX_LETTER_EXPONENT:
            raise InvalidElement(f"показатель в '{token}' больше {MAX_LETTER_EXPONENT}")
        result = compose(result, power(generator(surface, name, ambient), exp))
    return result


def format_word(e: GroupElem) -> str:
    tokens: List[str] = []
    run_name: Optional[str] = None
    run_exp = 0
    for name, exp in e.word:
        if name == run_name and (run_exp > 0) == (exp > 0):
            run_exp += exp
            continue
        if run_name is not None:
            tokens.append(_token(run_name, run_exp))
        run_name, run_exp = name, exp
    if run_name is not None:
        tokens.append(_token(run_name, run_exp))
    if e.fiber_exp:
        tokens.append(_token(HALF_FIBER if e.ambient == Ambient.PTF else FIBER, e.fiber_exp))
    text = " ".join(tokens) or "1"
    if e.ambient == Ambient.CSTF:
        return f"({e.cst_exp}; {text})"
    return text


def _token(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


# --- сопряженность -----------------------------------------------------------


def _cyclic_free_reduce(word: Word) -> Tuple[Word, Word]:
    """word = p·c·p⁻¹ с циклически редуцированным c; возвращает (c, p)."""
    word = free_reduce(word)
    n = len(word)
    i = 0
    while i < n - 1 - i and word[i][0] == word[n - 1 - i][0] and word[i][1] == -word[n - 1 - i][1]:
        i += 1
    return word[i:n - i], word[:i]


def _word_key(surface: SurfaceSpec, word: Word) -> Tuple[int, Tuple[int, ...]]:
    order = surface.letter_order()
    return len(word), tuple(order[x] for x in word)


def _free_normal_form(surface: SurfaceSpec, word: Word) -> Tuple[Word, Word]:
    """Минимальный циклический сдвиг; возвращает (rep, conj) с conj·word·conj⁻¹ = rep."""
    core, prefix = _cyclic_free_reduce(word)
    conj = invert_word(prefix)
    best, best_conj = core, conj
    for k in range(1, len(core)):
        rotated = core[k:] + core[:k]
        if _word_key(surface, rotated) < _word_key(surface, best):
            best = rotated
            best_conj = free_reduce(invert_word(core[:k]) + conj)
    return best, best_conj


@dataclass
class _Closure:
    """Слова замыкания: слово -> (показатель слоя, сопрягающее слово)."""

    states: Dict[Word, Tuple[int, Word]]
    certified: bool

    def best(self, surface: SurfaceSpec) -> Word:
        return min(self.states, key=lambda w: _word_key(surface, w))


def _closed_closure(
    surface: SurfaceSpec, word: Word, fiber_value: int, unit: int, radius: int, limit: int
) -> _Closure:
    """Замыкание циклического слова относительно сдвигов и замен половин соотношения.

    Для каждого слова w хранится t с t·x·t⁻¹ = w·f^k. Показатель слоя
    меняется только при заменах по соотношению.
    """
    long_table, half_table = _relator_tables(surface)
    half = len(surface.relator) // 2
    euler = surface.euler_increment * unit

    def shorten(w: Word, k: int, t: Word) -> Tuple[Word, int, Word]:
        # доводим до циклически редуцированного по Дену слова
        while True:
            w, k = _dehn_reduce(surface, w, k, unit)
            core, prefix = _cyclic_free_reduce(w)
            t = free_reduce(invert_word(prefix) + t)
            w = core
            changed = False
            for shift in range(1, len(w)):
                reduced, k2 = _dehn_reduce(surface, w[shift:] + w[:shift], k, unit)
                if len(reduced) < len(w):
                    t = free_reduce(invert_word(w[:shift]) + t)
                    w, k = reduced, k2
                    changed = True
                    break
            if not changed:
                return w, k, t

    start, k0, t0 = shorten(free_reduce(word), fiber_value, ())
    while True:
        certified = True
        restart: Optional[Tuple[Word, int, Word]] = None
        seen: Dict[Word, Tuple[int, Word]] = {start: (k0, t0)}
        queue = deque([(start, 0)])
        while queue and restart is None:
            w, depth = queue.popleft()
            k, t = seen[w]
            if depth >= radius:
                certified = False
                continue
            neighbours: List[Tuple[Word, int, Word]] = []
            for shift in range(1, len(w)):
                neighbours.append((w[shift:] + w[:shift], k, free_reduce(invert_word(w[:shift]) + t)))
            for i in range(len(w) - half + 1):
                hit = half_table.get(w[i:i + half])
                if hit is not None:
                    neighbours.append((w[:i] + hit[0] + w[i + half:], k + hit[1] * euler, t))
            for nw, nk, nt in neighbours:
                reduced, rk, rt = shorten(nw, nk, nt)
                if len(reduced) < len(start):
                    restart = (reduced, rk, rt)
                    break
                if reduced in seen:
                    continue
                if len(seen) >= limit:
                    certified = False
                    continue
                seen[reduced] = (rk, rt)
                queue.append((reduced, depth + 1))
        if restart is None:
            return _Closure(seen, certified)
        # нашлось более короткое циклическое слово
        start, k0, t0 = restart


def _klein_normal_form(e: GroupElem) -> Tuple[GroupElem, GroupElem]:
    surface = e.surface
    i, j, k = klein_coordinates(e)
    ambient = e.ambient
    if j % 2 == 0:
        candidates = [
            (klein_element(i, j, k, ambient), identity(surface, ambient)),
            (klein_element(-i, j, -k, ambient), generator(surface, "d", ambient)),
        ]
        return min(candidates, key=lambda item: item[0].sort_key())
    m = -(i // 2)
    p = k // 2 if ambient != Ambient.BASE else 0
    conj = klein_element(m, 0, p, ambient)
    return klein_element(i % 2, j, k % 2 if ambient != Ambient.BASE else 0, ambient), conj


def conjugacy_normal_form(
    x: GroupElem, radius: Optional[int] = None, limit: Optional[int] = None
) -> ConjugacyNormalForm:
    """Канонический представитель класса сопряженности и сопрягающий элемент."""
    surface = x.surface
    _check_surface(surface)
    radius = config.CONJUGACY_SEARCH_RADIUS if radius is None else radius
    limit = config.CLOSURE_LIMIT if limit is None else limit
    kind = surface.kind

    if x.ambient == Ambient.CSTF:
        stf = GroupElem(surface, Ambient.STF, x.word, x.fiber_exp)
        inner = conjugacy_normal_form(stf, radius, limit)
        conj = lift(project(inner.conjugator), Ambient.CSTF)
        conj = compose(conj, lift_cstf_fiber_part(inner.conjugator))
        rep = conjugate(conj, x)
        return ConjugacyNormalForm(rep, conj, inner.certified)

    if kind in _ABELIAN:
        return ConjugacyNormalForm(reduce(x), identity(surface, x.ambient), True)

    if kind == SurfaceKind.KLEIN_BOTTLE:
        rep, conj = _klein_normal_form(x)
        return ConjugacyNormalForm(conjugate(conj, x), conj, True)

    unit = _fiber_unit(x.ambient)
    if kind == SurfaceKind.FREE:
        _, conj_word = _free_normal_form(surface, x.word)
        certified = True
    else:
        closure = _closed_closure(surface, x.word, x.fiber_exp, unit, radius, limit)
        conj_word = closure.states[closure.best(surface)][1]
        certified = closure.certified
        logger.debug(f"замыкание {format_word(x)}: {len(closure.states)} слов, certified={certified}")
        if not certified:
            logger.warning(f"поиск нормальной формы для {format_word(x)} не завершен (радиус {radius})")
    conj = reduce(GroupElem(surface, x.ambient, conj_word))
    return ConjugacyNormalForm(conjugate(conj, x), conj, certified)


def lift_cstf_fiber_part(t: GroupElem) -> GroupElem:
    """Слоевая часть STF-элемента как элемент модели CSTF (четная координата 0)."""
    return cstf_element(0, reduce(GroupElem(t.surface, Ambient.STF, (), t.fiber_exp)))


def is_conjugate(
    a: GroupElem, b: GroupElem, radius: Optional[int] = None
) -> Union[ConjugacyWitness, Inconclusive, None]:
    """Свидетель t с t·a·t⁻¹ = b, None (точно нет) или Inconclusive."""
    _check_same(a, b)
    radius = config.CONJUGACY_SEARCH_RADIUS if radius is None else radius
    surface = a.surface
    if a.cst_exp != b.cst_exp:
        return None
    if surface.kind in _ABELIAN:
        return ConjugacyWitness(identity(surface, a.ambient)) if a == b else None
    if surface.kind != SurfaceKind.KLEIN_BOTTLE and exponent_sums(surface, a.word) != exponent_sums(
        surface, b.word
    ):
        return None

    nf_a = conjugacy_normal_form(a, radius)
    nf_b = conjugacy_normal_form(b, radius)
    if nf_a.rep == nf_b.rep:
        t = compose(inverse(nf_b.conjugator), nf_a.conjugator)
        if conjugate(t, a) != b:  # pragma: no cover - страховка от ошибки в нормальной форме
            logger.error(f"свидетель сопряженности не прошел проверку: {format_word(t)}")
            return Inconclusive(radius)
        return ConjugacyWitness(t)
    if surface.kind in (SurfaceKind.FREE, SurfaceKind.KLEIN_BOTTLE):
        return None
    # closed: оба замыкания полны или базы совпали - ответ точный
    if nf_a.certified and nf_b.certified:
        return None
    if project(nf_a.rep) == project(nf_b.rep):
        return None
    return Inconclusive(radius)


def fiber_shift_index(
    a: GroupElem, b: GroupElem, radius: Optional[int] = None
) -> Union[int, Inconclusive, None]:
    """Единственное i, для которого a сопряжен с b·f₂ⁱ."""
    _check_same(a, b)
    surface = a.surface
    if a.ambient != Ambient.STF:
        raise AmbientMismatch("fiber_shift_index определен на π₁(STF)")
    if not surface.orientable or surface.kind == SurfaceKind.SPHERE:
        raise UnsupportedSurface(f"fiber_shift_index не определен для {surface.describe()}")
    found = is_conjugate(project(a), project(b), radius)
    if found is None or isinstance(found, Inconclusive):
        return found
    t = lift(found.conjugator)
    rest = compose(conjugate(t, a), inverse(b))
    if rest.word:  # pragma: no cover - база уже сопряжена
        raise AssertionError("базовые проекции не совпали после сопряжения")
    return rest.fiber_exp


# --- корни и централизаторы --------------------------------------------------


def _smallest_period(word: Word) -> int:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return d
    return n


def primitive_root(a: GroupElem, radius: Optional[int] = None) -> Tuple[GroupElem, int]:
    """(r, n) с rⁿ = a и r, порождающим максимальную циклическую подгруппу."""
    surface = a.surface
    base = project(a)
    if not base.word:
        raise TrivialElement("корень единичного элемента не определен")
    kind = surface.kind
    if kind == SurfaceKind.TORUS:
        i, j = exponent_sums(surface, base.word)
        g = gcd(i, j)
        root = reduce(GroupElem(surface, Ambient.BASE, _power_word("a1", i // g) + _power_word("b1", j // g)))
        return root, g
    if kind not in (SurfaceKind.FREE, SurfaceKind.CLOSED):
        raise UnsupportedSurface(f"primitive_root не определен для {surface.describe()}")

    radius = config.CONJUGACY_SEARCH_RADIUS if radius is None else radius
    if kind == SurfaceKind.FREE:
        core, prefix = _cyclic_free_reduce(base.word)
        states = {core: (0, invert_word(prefix))}
    else:
        states = _closed_closure(surface, base.word, 0, 0, radius, config.CLOSURE_LIMIT).states

    # у слова из замыкания ищем наименьший период: w = sᵖ
    best_word, best_power, best_conj = base.word, 1, ()
    for state, (_, conj) in states.items():
        period = _smallest_period(state)
        n = len(state) // period
        if n > best_power:
            best_word, best_power, best_conj = state[:period], n, conj
    if best_power == 1:
        return base, 1
    # conj·base·conj⁻¹ = stateⁿ, значит base = (conj⁻¹·s·conj)ⁿ
    t = reduce(GroupElem(surface, Ambient.BASE, best_conj))
    root = conjugate(inverse(t), reduce(GroupElem(surface, Ambient.BASE, best_word)))
    return root, best_power


def split_root_power(l: GroupElem, radius: Optional[int] = None) -> Tuple[GroupElem, int, int]:
    """Разложение l = l_gⁿ·f₂ᵐ, где l_g - подъем примитивного корня pr(l)."""
    if l.ambient != Ambient.STF:
        raise AmbientMismatch("split_root_power определен на π₁(STF)")
    root, n = primitive_root(l, radius)
    l_g = lift(root)
    rest = compose(l, inverse(power(l_g, n)))
    if rest.word:  # pragma: no cover - проекция уже совпала
        raise AssertionError("остаток разложения не лежит в слое")
    return l_g, n, rest.fiber_exp


def centralizer_descriptor(l: GroupElem, radius: Optional[int] = None) -> CentralizerInfo:
    """Образующие и тип централизатора Z(l) в π₁(STF)."""
    surface = l.surface
    _check_surface(surface)
    if l.ambient != Ambient.STF:
        raise AmbientMismatch("централизатор вычисляется в π₁(STF)")
    kind = surface.kind
    f = fiber(surface)
    if kind == SurfaceKind.PLANE:
        return CentralizerInfo((f,), "Z", "whole", True)
    if kind == SurfaceKind.SPHERE:
        return CentralizerInfo((f,), "Z_2", "whole", True)
    if kind == SurfaceKind.PROJECTIVE_PLANE:
        return CentralizerInfo((generator(surface, "p"),), "Z_4", "whole", True)
    if kind == SurfaceKind.TORUS:
        gens = (generator(surface, "a1"), generator(surface, "b1"), f)
        return CentralizerInfo(gens, "Z^3", "whole", True)
    if kind == SurfaceKind.KLEIN_BOTTLE:
        i, j, k = klein_coordinates(l)
        c, d = generator(surface, "c"), generator(surface, "d")
        if j % 2 == 0 and i == 0 and k == 0:
            return CentralizerInfo((c, d, f), "pi1(STK)", "a", True)
        if j % 2 == 0:
            return CentralizerInfo((c, power(d, 2), f), "Z^3", "b")
        # α = c^i d f^k, α² = d²
        alpha = klein_element(i, 1, k)
        return CentralizerInfo((alpha,), "Z", "c")

    base = project(l)
    if not base.word:
        gens = tuple(generator(surface, name) for name in surface.base_generators) + (f,)
        return CentralizerInfo(gens, "pi1(STF)", "whole", True)
    root, _ = primitive_root(base, radius)
    logger.debug(f"централизатор {format_word(l)}: корень {format_word(root)}")
    return CentralizerInfo((lift(root), f), "Z^2", "root")
