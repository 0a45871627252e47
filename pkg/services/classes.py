"""Канонические ключи классов K⁺, K⁻, T, Π, Λ и их уточнений Kᵢ⁺, Kᵢ⁻, Tᵢ, Πᵢ."""
import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import List, Optional, Sequence, Tuple

import config
from services import group_core as gc
from services.errors import AmbientMismatch, ParityViolation, UnsupportedSurface, WrongParity
from services.group_core import Ambient, GroupElem
from services.surfaces import SurfaceKind, SurfaceSpec

logger = logging.getLogger(__name__)

_ABELIAN = {
    SurfaceKind.PLANE,
    SurfaceKind.SPHERE,
    SurfaceKind.TORUS,
    SurfaceKind.PROJECTIVE_PLANE,
}


class KeyFamily(str, Enum):
    KPLUS = "Kplus"
    KMINUS = "Kminus"
    T = "T"
    PI = "Pi"
    LAMBDA = "Lambda"
    KPLUS_I = "KplusI"
    KMINUS_I = "KminusI"
    T_I = "TI"
    PI_I = "PiI"

    @property
    def refined(self) -> bool:
        return self in (KeyFamily.KPLUS_I, KeyFamily.KMINUS_I, KeyFamily.T_I, KeyFamily.PI_I)

    @property
    def stratum(self) -> str:
        """Имя страта без уточнения: Kplus, Kminus, T, Pi, Lambda."""
        return self.value[:-1] if self.refined else self.value


@dataclass(frozen=True)
class ClassKey:
    """Канонический представитель класса; `certified=False` - поиск был ограничен."""

    family: KeyFamily
    entries: Tuple[GroupElem, ...]
    tag: Optional[int] = None
    maslov: Optional[int] = None
    certified: bool = field(default=True, compare=False)

    @property
    def surface(self) -> SurfaceSpec:
        return self.entries[0].surface

    @property
    def refined(self) -> bool:
        return self.family.refined

    def sort_key(self) -> Tuple:
        return (
            self.family.value,
            tuple(e.sort_key() for e in self.entries),
            self.tag or 0,
            self.maslov or 0,
        )

    def __str__(self) -> str:
        from services.key_format import format_key

        return format_key(self)


@dataclass(frozen=True)
class _BaseCanon:
    words: Tuple[GroupElem, ...]
    conjugator: GroupElem
    reflect: bool
    certified: bool


def _tuple_key(entries: Sequence[GroupElem]) -> Tuple:
    return tuple(e.sort_key() for e in entries)


# --- сопряжение кортежей в π₁(F) --------------------------------------------


def _base_canon(entries: Sequence[GroupElem], radius: Optional[int]) -> _BaseCanon:
    """Минимальный представитель кортежа по одновременному сопряжению в π₁(F).

    `reflect` означает, что в стабилизаторе результата есть обращающий
    ориентацию элемент, который меняет знак у всех показателей слоя.
    """
    surface = entries[0].surface
    ident = gc.identity(surface, Ambient.BASE)
    if surface.kind in _ABELIAN:
        return _BaseCanon(tuple(entries), ident, False, True)
    if surface.kind == SurfaceKind.KLEIN_BOTTLE:
        return _klein_base_canon(entries)
    if surface.kind in (SurfaceKind.FREE, SurfaceKind.CLOSED):
        return _hyperbolic_base_canon(entries, radius)
    raise UnsupportedSurface(f"ключи классов не определены для {surface.describe()}")


def _hyperbolic_base_canon(entries: Sequence[GroupElem], radius: Optional[int]) -> _BaseCanon:
    surface = entries[0].surface
    ident = gc.identity(surface, Ambient.BASE)
    idx = next((n for n, e in enumerate(entries) if e.word), None)
    if idx is None:
        return _BaseCanon(tuple(entries), ident, False, True)

    nf = gc.conjugacy_normal_form(entries[idx])
    t = nf.conjugator
    current = [gc.conjugate(t, e) for e in entries]
    # остаточная свобода - централизатор первого нетривиального элемента
    root, _ = gc.primitive_root(current[idx])
    if [gc.conjugate(root, e) for e in current] == current:
        return _BaseCanon(tuple(current), t, False, nf.certified)

    radius = config.CLASS_SEARCH_RADIUS if radius is None else radius
    best, best_s = current, ident
    lengths = {}
    for n in range(-radius, radius + 1):
        s = gc.power(root, n)
        candidate = [gc.conjugate(s, e) for e in current]
        lengths[n] = sum(len(e.word) for e in candidate)
        if _tuple_key(candidate) < _tuple_key(best):
            best, best_s = candidate, s
    shortest = min(lengths.values())
    certified = nf.certified and lengths[-radius] > shortest and lengths[radius] > shortest
    if not certified:
        words = ", ".join(gc.format_word(e) for e in entries)
        logger.warning(f"ключ кортежа {words} не сертифицирован (радиус {radius})")
    return _BaseCanon(tuple(best), gc.compose(best_s, t), False, certified)


def _klein_base_canon(entries: Sequence[GroupElem]) -> _BaseCanon:
    surface = entries[0].surface
    ident = gc.identity(surface, Ambient.BASE)

    def central(e: GroupElem) -> bool:
        i, j, _ = gc.klein_coordinates(e)
        return i == 0 and j % 2 == 0

    idx = next((n for n, e in enumerate(entries) if not central(e)), None)
    if idx is None:
        # стабилизатор - вся группа, d меняет знак слоя
        return _BaseCanon(tuple(entries), ident, True, True)

    nf = gc.conjugacy_normal_form(entries[idx])
    t = nf.conjugator
    current = [gc.conjugate(t, e) for e in entries]
    i_x, j_x, _ = gc.klein_coordinates(current[idx])

    if j_x % 2 == 0:
        # централизатор ⟨c, d²⟩: c² сдвигает первую координату у элементов с нечетным j
        odd = next((e for e in current if gc.klein_coordinates(e)[1] % 2), None)
        if odd is not None:
            i_y = gc.klein_coordinates(odd)[0]
            s = gc.klein_element(-(i_y // 2), 0, 0, Ambient.BASE)
            current = [gc.conjugate(s, e) for e in current]
            t = gc.compose(s, t)
        return _BaseCanon(tuple(current), t, False, True)

    # централизатор ⟨α⟩, α = c^i d, α² = d² централен
    alpha = gc.klein_element(i_x, 1, 0, Ambient.BASE)
    other = [gc.conjugate(alpha, e) for e in current]
    if other == current:
        return _BaseCanon(tuple(current), t, True, True)
    if _tuple_key(other) < _tuple_key(current):
        current, t = other, gc.compose(alpha, t)
    return _BaseCanon(tuple(current), t, False, True)


# --- показатели слоя ----------------------------------------------------------


def _fiber_order(surface: SurfaceSpec, ambient: Ambient) -> int:
    if surface.kind in (SurfaceKind.SPHERE, SurfaceKind.PROJECTIVE_PLANE):
        return 4 if ambient == Ambient.PTF else 2
    return 0


def _fiber_coordinates(
    entries: Sequence[GroupElem], canon: _BaseCanon, ambient: Ambient
) -> List[int]:
    """Показатели k_n с t·δ_n·t⁻¹ = lift(w_n)·f^{k_n}."""
    t = gc.lift(canon.conjugator, ambient)
    result = []
    for e, w in zip(entries, canon.words):
        rest = gc.compose(gc.inverse(gc.lift(w, ambient)), gc.conjugate(t, e))
        if rest.word:  # pragma: no cover - база уже совпала
            raise AssertionError("сопряженный элемент не лежит над каноническим словом")
        result.append(rest.fiber_exp)
    return result


def _translation(words: Sequence[GroupElem]) -> List[int]:
    """Сдвиг показателей при сопряжении слоем: −2 у обращающих элементов бутылки Клейна."""
    if not words or words[0].surface.kind != SurfaceKind.KLEIN_BOTTLE:
        return [0] * len(words)
    return [-2 if gc.klein_coordinates(w)[1] % 2 else 0 for w in words]


def _int_key(k: int) -> Tuple[int, bool]:
    return abs(k), k < 0


def _normalize_free(ks: Sequence[int], shift: Sequence[int], order: int) -> Tuple[int, ...]:
    ks = [k % order if order else k for k in ks]
    first = next((n for n, s in enumerate(shift) if s), None)
    if first is not None:
        q = ks[first] // 2
        ks = [k + q * s for k, s in zip(ks, shift)]
    return tuple(ks)


def _free_fibers(
    ks: Sequence[int], shift: Sequence[int], reflect: bool, order: int
) -> List[Tuple[Tuple[int, ...], bool]]:
    """Кандидаты (показатели, отражено) без решетки."""
    out = [(_normalize_free(ks, shift, order), False)]
    if reflect:
        out.append((_normalize_free([-k for k in ks], shift, order), True))
    return out


def _pushed_fibers(
    ks: Sequence[int], sigmas: Sequence[int], shift: Sequence[int], reflect: bool, order: int
) -> List[Tuple[int, bool]]:
    """Весь слой переносится в последний элемент; K определен по модулю m."""
    total = 0
    moved = 0
    product = 1
    for k, s, sigma in zip(ks, shift, sigmas):
        total = total * sigma + k
        moved = moved * sigma + s
        product *= sigma
    modulus = gcd(gcd(abs(product - 1), abs(moved)), order)
    candidates = [(total, False)]
    if reflect:
        candidates.append((-total, True))
    return [(k % modulus if modulus else k, flipped) for k, flipped in candidates]


# --- общая канонизация ----------------------------------------------------------


def _check_maslov(family: KeyFamily, entries: Sequence[GroupElem], maslov: Optional[int]) -> None:
    if maslov is None:
        raise ParityViolation(f"для уточненного класса {family.value} нужен индекс Маслова")
    parity = 1
    for e in entries:
        parity *= gc.orientation_parity(e)
    if (maslov % 2 == 0) != (parity > 0):
        raise ParityViolation(
            f"индекс Маслова {maslov} несовместим с ориентацией петли ({'+' if parity > 0 else '-'})"
        )


def _check_ambient(entries: Sequence[GroupElem], ambient: Ambient) -> None:
    first = entries[0]
    for e in entries:
        if e.surface != first.surface:
            raise AmbientMismatch("элементы кортежа над разными поверхностями")
        if e.ambient != ambient:
            raise AmbientMismatch(f"ожидается элемент {ambient.value}, получен {e.ambient.value}")


def _canon_free_tuple(
    entries: Sequence[GroupElem],
    orders: Sequence[Tuple[int, ...]],
    ambient: Ambient,
    radius: Optional[int],
) -> Tuple[Tuple[GroupElem, ...], bool]:
    """Минимум по перестановкам и сопряжению; показатели слоя не смешиваются."""
    surface = entries[0].surface
    order = _fiber_order(surface, ambient)
    best: Optional[Tuple[GroupElem, ...]] = None
    certified = True
    for perm in orders:
        permuted = [entries[n] for n in perm]
        canon = _base_canon([gc.project(e) for e in permuted], radius)
        certified = certified and canon.certified
        ks = _fiber_coordinates(permuted, canon, ambient)
        for fibers, _ in _free_fibers(ks, _translation(canon.words), canon.reflect, order):
            candidate = tuple(
                gc.reduce(GroupElem(surface, ambient, w.word, k)) for w, k in zip(canon.words, fibers)
            )
            if best is None or _tuple_key(candidate) < _tuple_key(best):
                best = candidate
    return best, certified


def _canon_pushed_tuple(
    entries: Sequence[GroupElem],
    orders: Sequence[Tuple[int, ...]],
    tag: Optional[int],
    radius: Optional[int],
) -> Tuple[Tuple[GroupElem, ...], Optional[int], bool]:
    """Канонизация с действием ℤⁿ: весь слой собирается в последнем элементе."""
    surface = entries[0].surface
    order = _fiber_order(surface, Ambient.STF)
    best: Optional[Tuple[Tuple, Tuple[GroupElem, ...], Optional[int]]] = None
    certified = True
    for perm in orders:
        permuted = [entries[n] for n in perm]
        canon = _base_canon([gc.project(e) for e in permuted], radius)
        certified = certified and canon.certified
        ks = _fiber_coordinates(permuted, canon, Ambient.STF)
        sigmas = [gc.orientation_parity(w) for w in canon.words]
        base_tag = tag
        if tag is not None and gc.orientation_parity(canon.conjugator) < 0:
            base_tag = 1 - tag
        for total, flipped in _pushed_fibers(ks, sigmas, _translation(canon.words), canon.reflect, order):
            fibers = [0] * (len(permuted) - 1) + [total]
            candidate = tuple(
                gc.reduce(GroupElem(surface, Ambient.STF, w.word, k)) for w, k in zip(canon.words, fibers)
            )
            cand_tag = base_tag if base_tag is None or not flipped else 1 - base_tag
            rank = (_tuple_key(candidate), cand_tag or 0)
            if best is None or rank < best[0]:
                best = (rank, candidate, cand_tag)
    return best[1], best[2], certified


_SWAP = ((0, 1), (1, 0))
_ROTATIONS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


# --- операции ---------------------------------------------------------------------


def kplus_key(
    pair: Tuple[GroupElem, GroupElem],
    refined: bool = False,
    maslov: Optional[int] = None,
    radius: Optional[int] = None,
) -> ClassKey:
    """Класс пары петель по сопряжению и перестановке."""
    _check_ambient(pair, Ambient.STF)
    family = KeyFamily.KPLUS_I if refined else KeyFamily.KPLUS
    if refined:
        _check_maslov(family, pair, maslov)
    entries, certified = _canon_free_tuple(pair, _SWAP, Ambient.STF, radius)
    return ClassKey(family, entries, None, maslov if refined else None, certified)


def kminus_key(
    pair: Tuple[GroupElem, GroupElem],
    refined: bool = False,
    maslov: Optional[int] = None,
    radius: Optional[int] = None,
) -> ClassKey:
    """Класс пары в π₁⁻(PTF) по действию подгруппы индекса два.

    Полуслой h централен над ориентируемой поверхностью, поэтому сопряжение
    элементом π₁⁻ совпадает с сопряжением элементом π₁⁺, а перестановка
    доступна всегда.
    """
    surface = pair[0].surface
    family = KeyFamily.KMINUS_I if refined else KeyFamily.KMINUS
    if not surface.orientable:
        # пары петель перестают различать компоненты K⁻
        raise UnsupportedSurface(f"классы K⁻ определены только для ориентируемых поверхностей, не {surface.describe()}")

    _check_ambient(pair, Ambient.PTF)
    for e in pair:
        if e.fiber_exp % 2 == 0:
            raise WrongParity(f"элемент {gc.format_word(e)} не лежит в π₁⁻(PTF)")
    if refined:
        _check_maslov(family, pair, maslov)
    entries, certified = _canon_free_tuple(pair, _SWAP, Ambient.PTF, radius)
    return ClassKey(family, entries, None, maslov if refined else None, certified)


def t_key(
    triple: Tuple[GroupElem, GroupElem, GroupElem],
    refined: bool = False,
    maslov: Optional[int] = None,
    radius: Optional[int] = None,
) -> ClassKey:
    """Класс тройки петель: сопряжение, циклический сдвиг и (для Tᵢ) действие ℤ³."""
    if not refined:
        base = tuple(gc.project(e) for e in triple)
        _check_ambient(base, Ambient.BASE)
        best: Optional[Tuple[GroupElem, ...]] = None
        certified = True
        for perm in _ROTATIONS:
            canon = _base_canon([base[n] for n in perm], radius)
            certified = certified and canon.certified
            if best is None or _tuple_key(canon.words) < _tuple_key(best):
                best = canon.words
        return ClassKey(KeyFamily.T, best, None, None, certified)

    _check_ambient(triple, Ambient.STF)
    _check_maslov(KeyFamily.T_I, triple, maslov)
    entries, _, certified = _canon_pushed_tuple(triple, _ROTATIONS, None, radius)
    return ClassKey(KeyFamily.T_I, entries, None, maslov, certified)


def pi_key(
    quad: Tuple[GroupElem, GroupElem, int, int],
    refined: bool = True,
    radius: Optional[int] = None,
) -> ClassKey:
    """Класс Πᵢ четверки (δ₁, δ₂, j, i); без уточнения - T-класс подстановки."""
    d1, d2, tag, maslov = quad
    if not refined:
        surface = d1.surface
        return t_key((gc.project(d1), gc.project(d2), gc.identity(surface, Ambient.BASE)), radius=radius)

    _check_ambient((d1, d2), Ambient.STF)
    _check_maslov(KeyFamily.PI_I, (d1, d2), maslov)
    orders: Tuple[Tuple[int, ...], ...] = ((0, 1),)
    # перестановка разрешена, только если одна из петель тривиальна в π₁(F)
    if not gc.project(d1).word or not gc.project(d2).word:
        orders = _SWAP
    entries, new_tag, certified = _canon_pushed_tuple((d1, d2), orders, tag % 2, radius)
    return ClassKey(KeyFamily.PI_I, entries, new_tag, maslov, certified)


def lambda_key(l: GroupElem, radius: Optional[int] = None) -> ClassKey:
    """Класс Λ-события: сопряженный класс глобальной петли."""
    _check_ambient((l,), Ambient.STF)
    nf = gc.conjugacy_normal_form(l, radius)
    return ClassKey(KeyFamily.LAMBDA, (nf.rep,), None, None, nf.certified)


def g_map(pi_class: ClassKey) -> ClassKey:
    """Πᵢ → Tᵢ: (δ₁, δ₂, j, i) ↦ (δ₁, δ₂, 1, i)."""
    if pi_class.family != KeyFamily.PI_I:
        raise ValueError(f"g_map определен на ключах PiI, получен {pi_class.family.value}")
    d1, d2 = pi_class.entries
    return t_key((d1, d2, gc.identity(d1.surface)), refined=True, maslov=pi_class.maslov)


def order_index(k1: ClassKey, k2: ClassKey) -> Optional[int]:
    """Относительный номер k2 в слое проекции p⁻¹(p(k1))."""
    surface = k1.surface
    if not surface.orientable or surface.kind == SurfaceKind.SPHERE:
        raise UnsupportedSurface(f"упорядочение слоя не определено для {surface.describe()}")
    for key in (k1, k2):
        if key.family.stratum != "Kplus":
            raise ValueError(f"order_index определен на ключах K⁺, получен {key.family.value}")
    if k1.family != k2.family or k1.maslov != k2.maslov or k1.surface != k2.surface:
        return None
    base1 = tuple(gc.project(e) for e in k1.entries)
    base2 = tuple(gc.project(e) for e in k2.entries)
    if base1 != base2:
        return None
    return k2.entries[0].fiber_exp - k1.entries[0].fiber_exp
