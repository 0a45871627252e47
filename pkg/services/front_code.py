"""Комбинаторный код фронта: циклическая последовательность событий и метки дуг."""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from services import group_core as gc
from services.errors import UnknownDoublePoint
from services.group_core import Ambient, GroupElem
from services.surfaces import PLANE, SurfaceKind, SurfaceSpec

logger = logging.getLogger(__name__)


class Slot(str, Enum):
    FIRST = "first"
    SECOND = "second"


class CrossType(str, Enum):
    R1 = "R1"
    R2 = "R2"
    C1 = "C1"
    C2 = "C2"


@dataclass(frozen=True)
class DoublePoint:
    id: int
    slot: Slot
    xtype: CrossType


@dataclass(frozen=True)
class Cusp:
    """Касп; знаки ±1 в соглашении Маслова и в соглашении вращения."""

    maslov_sign: int
    rotation_sign: int


Event = Union[DoublePoint, Cusp]


@dataclass(frozen=True)
class FrontCode:
    """arcs[i] - метка дуги от events[i] до events[i+1]; без событий дуга одна."""

    surface: SurfaceSpec
    events: Tuple[Event, ...]
    arcs: Tuple[GroupElem, ...]
    meta: Tuple[Tuple[str, str], ...] = ()

    @property
    def double_point_ids(self) -> List[int]:
        seen: List[int] = []
        for event in self.events:
            if isinstance(event, DoublePoint) and event.id not in seen:
                seen.append(event.id)
        return seen

    @property
    def cusp_count(self) -> int:
        return sum(1 for event in self.events if isinstance(event, Cusp))

    @property
    def double_point_count(self) -> int:
        return len(self.double_point_ids)


@dataclass(frozen=True)
class StandardFrontId:
    omega: int
    k: int

    def __post_init__(self) -> None:
        if self.omega < 0 or self.k < 0:
            raise ValueError("ω и k должны быть неотрицательными")


@dataclass(frozen=True)
class Violation:
    kind: str
    index: Optional[int]
    message: str


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, index: Optional[int], message: str) -> None:
        self.violations.append(Violation(kind, index, message))


# --- производные величины ------------------------------------------------------


def arc_product(code: FrontCode, start: int, stop: int) -> GroupElem:
    """Произведение arcs[start], …, arcs[stop−1] по кругу (start == stop - пустое)."""
    n = len(code.arcs)
    result = gc.identity(code.surface)
    i = start % n
    for _ in range((stop - start) % n):
        result = gc.compose(result, code.arcs[i])
        i = (i + 1) % n
    return result


def global_class(code: FrontCode) -> GroupElem:
    """Глобальный класс l; определен с точностью до сопряжения."""
    result = gc.identity(code.surface)
    for arc in code.arcs:
        result = gc.compose(result, arc)
    return result


def positions(code: FrontCode, dp_id: int) -> Tuple[int, int]:
    """Позиции первого и второго прохода двойной точки."""
    first = second = None
    for i, event in enumerate(code.events):
        if isinstance(event, DoublePoint) and event.id == dp_id:
            if event.slot == Slot.FIRST:
                first = i
            else:
                second = i
    if first is None or second is None:
        raise UnknownDoublePoint(f"двойная точка {dp_id} отсутствует в коде")
    return first, second


def loop_pair_at(code: FrontCode, dp_id: int) -> Tuple[GroupElem, GroupElem]:
    """Пара петель (a, b) в двойной точке; a·b сопряжено глобальному классу."""
    p1, p2 = positions(code, dp_id)
    return arc_product(code, p1, p2), arc_product(code, p2, p1)


def double_point_type(code: FrontCode, dp_id: int) -> CrossType:
    p1, _ = positions(code, dp_id)
    return code.events[p1].xtype


def indices(code: FrontCode) -> Tuple[int, Optional[int]]:
    """(индекс Маслова, индекс Уитни или None вне плоскости)."""
    maslov = sum(e.maslov_sign for e in code.events if isinstance(e, Cusp))
    whitney = None
    if code.surface.kind == SurfaceKind.PLANE:
        whitney = global_class(code).fiber_exp
    return maslov, whitney


def lift_class(code: FrontCode) -> GroupElem:
    """Класс (μ(L), l) в модели π₁(CSTF)."""
    maslov, _ = indices(code)
    return gc.cstf_element(maslov, global_class(code))


# --- проверка -------------------------------------------------------------------


def validate(code: FrontCode) -> ValidationReport:
    report = ValidationReport()
    surface = code.surface
    if surface.kind == SurfaceKind.NONORIENTABLE:
        report.add("UnsupportedSurface", None, f"коды фронтов на {surface.describe()} не поддерживаются")
        return report

    expected_arcs = max(1, len(code.events))
    if len(code.arcs) != expected_arcs:
        report.add("ArcCount", None, f"ожидается {expected_arcs} дуг, получено {len(code.arcs)}")
        return report

    wrong_arc = False
    for i, arc in enumerate(code.arcs):
        if arc.surface != surface or arc.ambient != Ambient.STF:
            report.add("WrongAmbient", i, f"дуга {i} не лежит в π₁(STF) поверхности {surface.describe()}")
            wrong_arc = True
        elif surface.kind == SurfaceKind.PLANE and arc.word:
            report.add("NonPlanarArc", i, f"дуга {i} на плоскости содержит '{gc.format_word(arc)}'")
            wrong_arc = True

    slots: Dict[int, Dict[Slot, List[int]]] = {}
    types: Dict[int, set] = {}
    for i, event in enumerate(code.events):
        if isinstance(event, DoublePoint):
            slots.setdefault(event.id, {Slot.FIRST: [], Slot.SECOND: []})[event.slot].append(i)
            types.setdefault(event.id, set()).add(event.xtype)
        elif event.maslov_sign not in (1, -1) or event.rotation_sign not in (1, -1):
            report.add("BadCuspSign", i, f"знаки каспа в позиции {i} должны быть ±1")

    paired: List[int] = []
    for dp_id, by_slot in slots.items():
        first, second = by_slot[Slot.FIRST], by_slot[Slot.SECOND]
        if len(first) != 1 or len(second) != 1:
            index = (first + second)[0]
            report.add("UnpairedDoublePoint", index, f"двойная точка {dp_id} должна встречаться по разу в каждом слоте")
        elif len(types[dp_id]) != 1:
            report.add("TypeMismatch", first[0], f"у двойной точки {dp_id} разные типы в двух проходах")
        else:
            paired.append(dp_id)

    if wrong_arc:
        return report

    l = global_class(code)
    for dp_id in paired:
        p1, _ = positions(code, dp_id)
        a, b = loop_pair_at(code, dp_id)
        u = arc_product(code, 0, p1)
        if gc.conjugate(gc.inverse(u), l) != gc.compose(a, b):
            report.add("LoopPairMismatch", p1, f"пара петель в точке {dp_id} не согласована с l")

    preserving = gc.orientation_parity(l) > 0
    if preserving != (code.cusp_count % 2 == 0):
        report.add(
            "CuspParity",
            None,
            f"число каспов {code.cusp_count} не согласовано с ориентацией глобальной петли",
        )
    if not report.ok:
        logger.debug(f"код фронта не прошел проверку: {len(report.violations)} нарушений")
    return report


# --- стандартные фронты и преобразования ----------------------------------------


def standard_code(omega: int, k: int) -> FrontCode:
    """Плоский фронт K_{ω,k}: ω−1 петелек (или восьмерка при ω=0) и k пар каспов."""
    front = StandardFrontId(omega, k)
    f = gc.fiber(PLANE)
    one = gc.identity(PLANE)
    events: List[Event] = []
    arcs: List[GroupElem] = []
    if front.omega == 0:
        events += [DoublePoint(1, Slot.FIRST, CrossType.R1), DoublePoint(1, Slot.SECOND, CrossType.R1)]
        arcs += [f, gc.inverse(f)]
    else:
        for dp_id in range(1, front.omega):
            events += [DoublePoint(dp_id, Slot.FIRST, CrossType.R1), DoublePoint(dp_id, Slot.SECOND, CrossType.R1)]
            arcs += [f, one]
    for _ in range(front.k):
        events += [Cusp(1, 1), Cusp(-1, -1)]
        arcs += [one, one]
    if not events:
        return FrontCode(PLANE, (), (f,))
    if front.omega >= 1:
        # последняя дуга замыкает окружность
        arcs[-1] = gc.compose(arcs[-1], f)
    return FrontCode(PLANE, tuple(events), tuple(arcs))


def rotate(code: FrontCode, r: int) -> FrontCode:
    """Сдвиг базовой точки на r событий."""
    if not code.events:
        return code
    r %= len(code.events)
    return replace(code, events=code.events[r:] + code.events[:r], arcs=code.arcs[r:] + code.arcs[:r])


def normalized(code: FrontCode) -> FrontCode:
    """Перенумерация двойных точек по порядку первого появления."""
    mapping = {old: new for new, old in enumerate(code.double_point_ids, start=1)}
    events = tuple(
        replace(e, id=mapping[e.id]) if isinstance(e, DoublePoint) else e for e in code.events
    )
    return replace(code, events=events, meta=tuple(sorted(code.meta)))


def insert_events(code: FrontCode, after: int, new_events: Sequence[Event]) -> FrontCode:
    """Вставка событий после events[after]; метка исходной дуги остается перед ними."""
    if not new_events:
        return code
    one = gc.identity(code.surface)
    fresh = (one,) * (len(new_events) - 1)
    if not code.events:
        return replace(code, events=tuple(new_events), arcs=(code.arcs[0],) + fresh)
    pos = after + 1
    events = code.events[:pos] + tuple(new_events) + code.events[pos:]
    arcs = code.arcs[:pos] + (one,) + fresh + code.arcs[pos:]
    return replace(code, events=events, arcs=arcs)


def remove_events(code: FrontCode, drop: Sequence[int]) -> FrontCode:
    """Удаление событий; дуга удаленного события приклеивается к предыдущей."""
    n = len(code.events)
    dropped = {i % n for i in drop}
    if len(dropped) == n:
        return replace(code, events=(), arcs=(global_class(code),))
    # первое сохраняемое событие: склейка идет по кругу слева направо
    start = min(i for i in range(n) if i not in dropped)
    events: List[Event] = []
    arcs: List[GroupElem] = []
    for step in range(n):
        i = (start + step) % n
        if i in dropped:
            arcs[-1] = gc.compose(arcs[-1], code.arcs[i])
        else:
            events.append(code.events[i])
            arcs.append(code.arcs[i])
    return replace(code, events=tuple(events), arcs=tuple(arcs))
