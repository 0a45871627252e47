"""Ходы через страты дискриминанта, правила знаков и стандартные петли событий."""
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from services import group_core as gc
from services.classes import ClassKey, KeyFamily, g_map, kminus_key, kplus_key, lambda_key, pi_key, t_key
from services.errors import InconsistentSite, InvalidMove, UnsupportedLoop, UnsupportedSurface
from services.front_code import (
    CrossType,
    Cusp,
    DoublePoint,
    Event,
    FrontCode,
    Slot,
    arc_product,
    global_class,
    indices,
    insert_events,
    loop_pair_at,
    remove_events,
    rotate,
)
from services.group_core import GroupElem
from services.surfaces import SurfaceKind

logger = logging.getLogger(__name__)


class Stratum(str, Enum):
    LAMBDA = "Lambda"
    KPLUS = "Kplus"
    KMINUS = "Kminus"
    T = "T"
    PI = "Pi"


class LoopKind(str, Enum):
    GAMMA1 = "Gamma1"
    GAMMA2 = "Gamma2"
    GAMMA3 = "Gamma3"
    TT = "TT"
    KPI = "KPi"
    KT = "KT"
    KK = "KK"
    TPI = "TPi"
    PI_LAMBDA = "PiLambda"
    PI_PI = "PiPi"
    LAMBDA_LAMBDA = "LambdaLambda"


CODIM_TWO = (
    LoopKind.TT,
    LoopKind.KPI,
    LoopKind.KT,
    LoopKind.KK,
    LoopKind.TPI,
    LoopKind.PI_LAMBDA,
    LoopKind.PI_PI,
    LoopKind.LAMBDA_LAMBDA,
)


@dataclass(frozen=True)
class TriangleData:
    """Для каждой стороны: совпадает ли ее ориентация с циклическим порядком."""

    matches: Tuple[bool, bool, bool]

    def inverted(self) -> "TriangleData":
        return TriangleData(tuple(not m for m in self.matches))


@dataclass(frozen=True)
class PiLocalData:
    triangle: TriangleData


@dataclass(frozen=True)
class MoveSpec:
    stratum: Stratum
    sign: int
    site: Tuple[int, ...]
    witness: Optional[Tuple[GroupElem, ...]] = None
    direct: bool = True
    triangle: Optional[TriangleData] = None
    rotation: int = 1

    @property
    def creates(self) -> bool:
        """Рождает ли ход новые события (для T - всегда False)."""
        if self.stratum == Stratum.T:
            return False
        if self.stratum == Stratum.LAMBDA:
            return self.sign > 0
        return (self.sign > 0) == self.direct

    def reversed(self, site: Tuple[int, ...]) -> "MoveSpec":
        triangle = self.triangle.inverted() if self.triangle is not None else None
        return replace(self, sign=-self.sign, site=site, triangle=triangle)


@dataclass(frozen=True)
class CrossingEvent:
    stratum: Stratum
    sign: int
    key: ClassKey
    weight: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("знак события должен быть ±1")
        if (self.weight == 1) != (self.stratum == Stratum.PI):
            raise ValueError("вес 1 допустим только для страта Pi")

    def negated(self) -> "CrossingEvent":
        return replace(self, sign=-self.sign)


def make_event(stratum: Stratum, sign: int, key: ClassKey) -> CrossingEvent:
    return CrossingEvent(stratum, sign, key, 1 if stratum == Stratum.PI else 2)


# --- знаки ----------------------------------------------------------------------


def triangle_sign(t: TriangleData) -> int:
    """(−1)^q, q - число сторон, ориентированных согласно циклическому порядку."""
    q = sum(1 for m in t.matches if m)
    return -1 if q % 2 else 1


def pi_crossing_sign(p: PiLocalData) -> int:
    return triangle_sign(p.triangle)


# --- ключи событий ----------------------------------------------------------------


def _maslov(code: FrontCode) -> int:
    return indices(code)[0]


def kplus_event_key(code: FrontCode, s1: GroupElem, s2: GroupElem, refined: bool = False) -> ClassKey:
    return kplus_key((s1, s2), refined=refined, maslov=_maslov(code) if refined else None)


def kminus_event_key(code: FrontCode, s1: GroupElem, s2: GroupElem, refined: bool = False) -> ClassKey:
    """Пара петель K⁻ как пара в π₁⁻(PTF): (s₁h, s₂h⁻¹)."""
    maslov = _maslov(code) if refined else None
    if not code.surface.orientable:
        raise UnsupportedSurface(f"K⁻-события не определены на {code.surface.describe()}")
    h =gc.generator(code.surface, "h", gc.Ambient.PTF)
    pair = (
        gc.compose(gc.lift_to_ptf(s1), h),
        gc.compose(gc.lift_to_ptf(s2), gc.inverse(h)),
    )
    return kminus_key(pair, refined=refined, maslov=maslov)


def t_event_key(code: FrontCode, triple: Sequence[GroupElem], refined: bool = False) -> ClassKey:
    return t_key(tuple(triple), refined=refined, maslov=_maslov(code) if refined else None)


def pi_event_key(code: FrontCode, d1: GroupElem, d2: GroupElem, refined: bool = False) -> ClassKey:
    return pi_key((d1, d2, 0, _maslov(code)), refined=refined)


def _site_key(code: FrontCode, stratum: Stratum, data: Sequence[GroupElem], refined: bool) -> ClassKey:
    if stratum == Stratum.KPLUS:
        return kplus_event_key(code, data[0], data[1], refined)
    if stratum == Stratum.KMINUS:
        return kminus_event_key(code, data[0], data[1], refined)
    if stratum == Stratum.T:
        return t_event_key(code, data, refined)
    if stratum == Stratum.PI:
        return pi_event_key(code, data[0], data[1], refined)
    return lambda_key(data[0])


def _check_witness(code: FrontCode, m: MoveSpec, key: ClassKey, refined: bool) -> None:
    if m.witness is None:
        return
    expected = _site_key(code, m.stratum, m.witness, refined)
    if expected != key:
        raise InconsistentSite(
            f"свидетель {expected} не совпадает с классом в месте хода {key}"
        )


# --- вспомогательные проверки места ---------------------------------------------------


def _norm(code: FrontCode, i: int) -> int:
    if not code.events:
        raise InvalidMove("в коде нет событий")
    return i % len(code.events)


def _is_identity(arc: GroupElem) -> bool:
    return gc.is_identity(arc)


def _double_point(code: FrontCode, i: int) -> DoublePoint:
    event = code.events[_norm(code, i)]
    if not isinstance(event, DoublePoint):
        raise InconsistentSite(f"в позиции {i} ожидается двойная точка")
    return event


def _occurrences(code: FrontCode, dp_id: int) -> List[int]:
    return [i for i, e in enumerate(code.events) if isinstance(e, DoublePoint) and e.id == dp_id]


def _next_id(code: FrontCode) -> int:
    return max(code.double_point_ids, default=0) + 1


def _assign_slots(code: FrontCode, ids: Sequence[int]) -> FrontCode:
    """Слот first получает более раннее вхождение новой двойной точки."""
    events = list(code.events)
    for dp_id in ids:
        first, second = _occurrences(code, dp_id)
        events[first] = replace(events[first], slot=Slot.FIRST)
        events[second] = replace(events[second], slot=Slot.SECOND)
    return replace(code, events=tuple(events))


_K_TYPES = {
    (Stratum.KPLUS, True): (CrossType.R1, CrossType.C1),
    (Stratum.KPLUS, False): (CrossType.R2, CrossType.C2),
    (Stratum.KMINUS, True): (CrossType.R1, CrossType.C2),
    (Stratum.KMINUS, False): (CrossType.R2, CrossType.C1),
    (Stratum.PI, True): (CrossType.R1, CrossType.C2),
    (Stratum.PI, False): (CrossType.R2, CrossType.C1),
}


# --- ходы -----------------------------------------------------------------------------


def apply_move(code: FrontCode, m: MoveSpec, refined: bool = False) -> Tuple[FrontCode, CrossingEvent]:
    """Переписывает код и возвращает событие пересечения страта."""
    if m.sign not in (1, -1):
        raise InvalidMove("знак хода должен быть ±1")
    if m.stratum == Stratum.KMINUS and not code.surface.orientable:
        raise UnsupportedSurface(f"ход K⁻ не поддерживается на {code.surface.describe()}")
    handlers = {
        Stratum.KPLUS: _self_tangency,
        Stratum.KMINUS: _self_tangency,
        Stratum.LAMBDA: _lambda_move,
        Stratum.T: _triple_move,
        Stratum.PI: _pi_move,
    }
    new_code, event = handlers[m.stratum](code, m, refined)
    sign = "+" if m.sign > 0 else "-"
    logger.debug(
        f"ход {m.stratum.value}{sign} в {m.site}: "
        f"точек {code.double_point_count}→{new_code.double_point_count}, "
        f"каспов {code.cusp_count}→{new_code.cusp_count}"
    )
    return new_code, event


def _self_tangency(code: FrontCode, m: MoveSpec, refined: bool) -> Tuple[FrontCode, CrossingEvent]:
    type_x, type_y = _K_TYPES[(m.stratum, m.direct)]
    if m.creates:
        if len(m.site) != 2:
            raise InvalidMove("место рождения K-хода: две дуги i,j")
        i, j = (s % max(1, len(code.events)) for s in m.site)
        x_id = _next_id(code)
        y_id = x_id + 1
        x = DoublePoint(x_id, Slot.FIRST, type_x)
        y = DoublePoint(y_id, Slot.FIRST, type_y)
        second_branch = [x, y] if m.direct else [y, x]
        if i == j:
            new_code = insert_events(code, i, [x, y] + second_branch)
        else:
            # сначала вставляем в более позднюю дугу, чтобы индексы не сдвигались
            first, second = ([x, y], second_branch) if i < j else (second_branch, [x, y])
            lo, hi = min(i, j), max(i, j)
            new_code = insert_events(insert_events(code, hi, second), lo, first)
        new_code = _assign_slots(new_code, (x_id, y_id))
        a, b = loop_pair_at(new_code, x_id)
        key = _site_key(new_code, m.stratum, (a, b), refined)
        _check_witness(new_code, m, key, refined)
        return new_code, make_event(m.stratum, m.sign, key)

    if len(m.site) != 2:
        raise InvalidMove("место гибели K-хода: позиции двух пар i,j")
    i, j = (_norm(code, s) for s in m.site)
    i2, j2 = _norm(code, i + 1), _norm(code, j + 1)
    if len({i, i2, j, j2}) != 4:
        raise InconsistentSite("пары в месте хода пересекаются")
    p, q = _double_point(code, i), _double_point(code, i2)
    r, s = _double_point(code, j), _double_point(code, j2)
    if p.id == q.id or {p.id, q.id} != {r.id, s.id}:
        raise InconsistentSite("пары в месте хода должны состоять из одних и тех же двух точек")
    same_order = (p.id, q.id) == (r.id, s.id)
    if same_order != m.direct:
        raise InconsistentSite("порядок точек на ветвях не соответствует direct")
    if {p.xtype, q.xtype} != {type_x, type_y}:
        raise InconsistentSite(f"типы {p.xtype.value},{q.xtype.value} не соответствуют ходу {m.stratum.value}")
    if not (_is_identity(code.arcs[i]) and _is_identity(code.arcs[j])):
        raise InconsistentSite("дуги между точками пары должны быть тривиальны")
    x_id = p.id if p.xtype == type_x else q.id
    a, b = loop_pair_at(code, x_id)
    key = _site_key(code, m.stratum, (a, b), refined)
    _check_witness(code, m, key, refined)
    return remove_events(code, [i, i2, j, j2]), make_event(m.stratum, m.sign, key)


def _lambda_move(code: FrontCode, m: MoveSpec, refined: bool) -> Tuple[FrontCode, CrossingEvent]:
    """Ласточкин хвост: пара каспов и двойная точка с тривиальной малой петлей."""
    if m.rotation not in (1, -1):
        raise InvalidMove("знак вращения должен быть ±1")
    xtype = CrossType.R1 if m.rotation > 0 else CrossType.C1
    if len(m.site) != 1:
        raise InvalidMove("место Λ-хода: одна позиция")
    if m.creates:
        p = m.site[0] % max(1, len(code.events))
        dp_id = _next_id(code)
        tail = [
            DoublePoint(dp_id, Slot.FIRST, xtype),
            Cusp(1, m.rotation),
            Cusp(-1, m.rotation),
            DoublePoint(dp_id, Slot.SECOND, xtype),
        ]
        if code.events:
            new_code = insert_events(code, p, tail)
        else:
            # малая петля тривиальна, метка окружности уходит на последнюю дугу
            one = gc.identity(code.surface)
            new_code = replace(code, events=tuple(tail), arcs=(one, one, one) + code.arcs)
        new_code = _assign_slots(new_code, (dp_id,))
        key = lambda_key(global_class(new_code))
        _check_witness(new_code, m, key, refined)
        return new_code, make_event(Stratum.LAMBDA, m.sign, key)

    p = _norm(code, m.site[0])
    window = [_norm(code, p + k) for k in range(4)]
    if len(set(window)) != 4:
        raise InconsistentSite("для Λ-хода нужно четыре события")
    first, c1, c2, last = (code.events[k] for k in window)
    if not (isinstance(first, DoublePoint) and isinstance(last, DoublePoint) and first.id == last.id):
        raise InconsistentSite("Λ-место должно начинаться и кончаться одной двойной точкой")
    if not (isinstance(c1, Cusp) and isinstance(c2, Cusp)):
        raise InconsistentSite("внутри Λ-места должны быть два каспа")
    if c1.maslov_sign == c2.maslov_sign or c1.rotation_sign != c2.rotation_sign:
        raise InconsistentSite("каспы Λ-места: противоположные знаки Маслова и равные знаки вращения")
    expected = CrossType.R1 if c1.rotation_sign > 0 else CrossType.C1
    if first.xtype != expected:
        raise InconsistentSite(f"тип двойной точки {first.xtype.value} не соответствует каспам")
    if not all(_is_identity(code.arcs[k]) for k in window[:3]):
        raise InconsistentSite("дуги Λ-места должны быть тривиальны")
    key = lambda_key(global_class(code))
    _check_witness(code, m, key, refined)
    return remove_events(code, window), make_event(Stratum.LAMBDA, m.sign, key)


def _triple_move(code: FrontCode, m: MoveSpec, refined: bool) -> Tuple[FrontCode, CrossingEvent]:
    if len(m.site) != 3:
        raise InvalidMove("место T-хода: позиции трех пар")
    if m.triangle is not None and triangle_sign(m.triangle) != m.sign:
        raise InconsistentSite("знак хода не совпадает со знаком исчезающего треугольника")
    starts = sorted(_norm(code, s) for s in m.site)
    slots = [(s, _norm(code, s + 1)) for s in starts]
    flat = [k for pair in slots for k in pair]
    if len(set(flat)) != 6:
        raise InconsistentSite("пары T-места пересекаются")
    ids = []
    for a, b in slots:
        da, db = _double_point(code, a), _double_point(code, b)
        if da.id == db.id:
            raise InconsistentSite("пара T-места содержит одну и ту же точку")
        if not _is_identity(code.arcs[a]):
            raise InconsistentSite("дуги внутри пар T-места должны быть тривиальны")
        ids += [da.id, db.id]
    if len(set(ids)) != 3 or any(ids.count(x) != 2 for x in set(ids)):
        raise InconsistentSite("T-место должно состоять из трех двойных точек")

    (i, _), (j, _), (k, _) = slots
    triple = (
        arc_product(code, i + 1, j),
        arc_product(code, j + 1, k),
        arc_product(code, k + 1, i),
    )
    key = t_event_key(code, triple, refined)
    _check_witness(code, m, key, refined)

    events = list(code.events)
    for a, b in slots:
        events[a], events[b] = events[b], events[a]
    new_code = replace(code, events=tuple(events))
    return new_code, make_event(Stratum.T, m.sign, key)


def _pi_move(code: FrontCode, m: MoveSpec, refined: bool) -> Tuple[FrontCode, CrossingEvent]:
    """Ветвь проходит через касп: две двойные точки с рогами каспа."""
    if m.triangle is not None and pi_crossing_sign(PiLocalData(m.triangle)) != m.sign:
        raise InconsistentSite("знак хода не совпадает со знаком подставленного треугольника")
    if len(m.site) != 2:
        raise InvalidMove("место Π-хода: две позиции")
    type_x, type_y = _K_TYPES[(Stratum.PI, m.direct)]

    if m.creates:
        c = _norm(code, m.site[0])
        if not isinstance(code.events[c], Cusp):
            raise InconsistentSite(f"в позиции {c} ожидается касп")
        n = len(code.events)
        q = (m.site[1] - c) % n
        x_id = _next_id(code)
        y_id = x_id + 1
        # первые проходы X и Y у каспа: тогда пары петель X и Y совпадают
        x1 = DoublePoint(x_id, Slot.FIRST, type_x)
        y1 = DoublePoint(y_id, Slot.FIRST, type_y)
        x2 = DoublePoint(x_id, Slot.SECOND, type_x)
        y2 = DoublePoint(y_id, Slot.SECOND, type_y)
        base = rotate(code, c)
        one = gc.identity(code.surface)
        events: List[Event] = []
        arcs: List[GroupElem] = []
        marker = None
        # касп в позиции 0; метка выходящей из каспа дуги переносится за Y
        for idx in range(n):
            if idx == 0:
                events += [base.events[0], y1]
                arcs += [one, base.arcs[0]]
            else:
                events.append(base.events[idx])
                arcs.append(base.arcs[idx])
            if idx == (n - c) % n:
                marker = len(events) - (2 if idx == 0 else 1)
            if idx == q:
                events += [x2, y2]
                arcs += [one, one]
        events.append(x1)
        arcs.append(one)
        new_code = replace(code, events=tuple(events), arcs=tuple(arcs))
        # исходное событие 0 снова первое
        new_code = rotate(new_code, marker)
        a, b = loop_pair_at(new_code, x_id)
        key = pi_event_key(new_code, a, b, refined)
        _check_witness(new_code, m, key, refined)
        return new_code, make_event(Stratum.PI, m.sign, key)

    x = _norm(code, m.site[0])
    cusp_pos, y = _norm(code, x + 1), _norm(code, x + 2)
    q, q2 = _norm(code, m.site[1]), _norm(code, m.site[1] + 1)
    if len({x, cusp_pos, y, q, q2}) != 5:
        raise InconsistentSite("позиции Π-места пересекаются")
    dx, dy = _double_point(code, x), _double_point(code, y)
    if not isinstance(code.events[cusp_pos], Cusp):
        raise InconsistentSite("между точками Π-места должен стоять касп")
    dq, dq2 = _double_point(code, q), _double_point(code, q2)
    if (dq.id, dq2.id) != (dx.id, dy.id) or dx.id == dy.id:
        raise InconsistentSite("вторая ветвь Π-места должна проходить те же точки в том же порядке")
    if (dx.xtype, dy.xtype) != (type_x, type_y):
        raise InconsistentSite(f"типы {dx.xtype.value},{dy.xtype.value} не соответствуют Π-ходу")
    if not all(_is_identity(code.arcs[k]) for k in (x, cusp_pos, q)):
        raise InconsistentSite("дуги Π-места должны быть тривиальны")
    a, b = loop_pair_at(code, dx.id)
    key = pi_event_key(code, a, b, refined)
    _check_witness(code, m, key, refined)
    return remove_events(code, [x, y, q, q2]), make_event(Stratum.PI, m.sign, key)


# --- стандартные петли ----------------------------------------------------------------


def _rotated_class(code: FrontCode, position: int) -> GroupElem:
    """Глобальный класс, прочитанный от события position."""
    u = arc_product(code, 0, position)
    return gc.conjugate(gc.inverse(u), global_class(code))


def _gamma1(code: FrontCode, refined: bool) -> List[CrossingEvent]:
    """Маленькая петелька обходит фронт: две встречи с каждой двойной точкой и касп."""
    l = global_class(code)
    if gc.orientation_parity(l) < 0:
        raise UnsupportedLoop("γ₁ определена только для фронтов, сохраняющих ориентацию")
    surface = code.surface
    f = gc.fiber(surface)
    f_inv = gc.inverse(f)
    with_kminus = surface.orientable
    events: List[CrossingEvent] = []
    for dp_id in code.double_point_ids:
        a, b = loop_pair_at(code, dp_id)
        first = (gc.compose(a, f), gc.compose(f_inv, b))
        first_triple = (a, f, gc.compose(f_inv, b))
        if gc.orientation_parity(a) > 0:
            second, second_triple, sign = first, first_triple, -1
        else:
            second = (gc.compose(a, f_inv), gc.compose(f, b))
            second_triple = (a, f_inv, gc.compose(f, b))
            sign = 1
        for pair, triple, s in ((first, first_triple, 1), (second, second_triple, sign)):
            events.append(make_event(Stratum.KPLUS, s, kplus_event_key(code, *pair, refined=refined)))
            if with_kminus:
                events.append(make_event(Stratum.KMINUS, s, kminus_event_key(code, *pair, refined=refined)))
            events.append(make_event(Stratum.T, s, t_event_key(code, triple, refined)))
    for position, event in enumerate(code.events):
        if isinstance(event, Cusp):
            l_c = _rotated_class(code, position)
            key = pi_event_key(code, f, gc.compose(f_inv, l_c), refined)
            events += [make_event(Stratum.PI, 1, key), make_event(Stratum.PI, -1, key)]
    return events


def _gamma3(code: FrontCode, refined: bool) -> List[CrossingEvent]:
    """Пара каспов протаскивается вдоль фронта через обе ветви каждой двойной точки."""
    if code.cusp_count == 0:
        return []
    events: List[CrossingEvent] = []
    for dp_id in code.double_point_ids:
        a, b = loop_pair_at(code, dp_id)
        for d1, d2 in ((a, b), (b, a)):
            key = pi_event_key(code, d1, d2, refined)
            events += [make_event(Stratum.PI, 1, key), make_event(Stratum.PI, -1, key)]
    return events


def _k_stratum(key: ClassKey) -> Stratum:
    if key.family.stratum == "Kminus":
        return Stratum.KMINUS
    if key.family.stratum == "Kplus":
        return Stratum.KPLUS
    raise ValueError(f"ключ {key} не является K-классом")


def _codim_two(kind: LoopKind, keys: Sequence[ClassKey]) -> List[CrossingEvent]:
    def need(count: int) -> None:
        if len(keys) != count:
            raise UnsupportedLoop(f"петля {kind.value} требует {count} ключей, получено {len(keys)}")

    if kind == LoopKind.TT:
        need(4)
        return [make_event(Stratum.T, s, k) for s in (1, -1) for k in keys]
    if kind == LoopKind.TPI:
        need(3)
        strata = (Stratum.T, Stratum.PI, Stratum.PI)
        return [make_event(st, s, k) for s in (1, -1) for st, k in zip(strata, keys)]
    if kind == LoopKind.PI_LAMBDA:
        need(1)
        (p,) = keys
        t = g_map(p) if p.family == KeyFamily.PI_I else p
        return [make_event(Stratum.PI, 1, p), make_event(Stratum.PI, 1, p), make_event(Stratum.T, -1, t)]

    need(2)
    x, y = keys
    if kind == LoopKind.KPI:
        strata = (_k_stratum(x), Stratum.PI)
    elif kind == LoopKind.KT:
        strata = (_k_stratum(x), Stratum.T)
    elif kind == LoopKind.KK:
        strata = (_k_stratum(x), _k_stratum(y))
    elif kind == LoopKind.PI_PI:
        strata = (Stratum.PI, Stratum.PI)
    else:
        strata = (Stratum.LAMBDA, Stratum.LAMBDA)
    return [make_event(st, s, k) for s in (1, -1) for st, k in zip(strata, (x, y))]


def canned_loop(
    kind: LoopKind,
    code: Optional[FrontCode] = None,
    keys: Sequence[ClassKey] = (),
    refined: bool = False,
    gamma2_events: Optional[Sequence[CrossingEvent]] = None,
) -> List[CrossingEvent]:
    """События стандартной петли: γ₁, γ₂, γ₃ по коду или шаблон коразмерности два по ключам."""
    if kind in CODIM_TWO:
        return _codim_two(kind, keys)
    if code is None:
        raise UnsupportedLoop(f"петля {kind.value} требует код фронта")
    if kind == LoopKind.GAMMA1:
        return _gamma1(code, refined)
    if kind == LoopKind.GAMMA3:
        return _gamma3(code, refined)
    if code.surface.kind != SurfaceKind.KLEIN_BOTTLE:
        raise UnsupportedLoop("γ₂ определена только на бутылке Клейна")
    if gc.orientation_parity(global_class(code)) < 0:
        raise UnsupportedLoop("γ₂ определена только для фронтов, сохраняющих ориентацию")
    if gamma2_events is None:
        raise UnsupportedLoop("для γ₂ нужен свидетель подъема на тор")
    return list(gamma2_events)
