"""Общие фикстуры и стратегии hypothesis: слова, коды фронтов, ходы."""
from pathlib import Path
from typing import Callable, Sequence

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from services import group_core as gc
from services.front_code import CrossType, Cusp, DoublePoint, FrontCode, Slot
from services.group_core import Ambient, GroupElem
from services.strata_moves import MoveSpec, Stratum, apply_move
from services.surfaces import TORUS, SurfaceSpec

FIXTURES = Path(__file__).parent / "fixtures"

# Профиль: без дедлайнов, воспроизводимые примеры
settings.register_profile(
    "frontwave",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("frontwave")

GROWING = (Stratum.KPLUS, Stratum.KMINUS, Stratum.LAMBDA)

signs = st.sampled_from((1, -1))


@pytest.fixture
def fixture_path() -> Callable[[str], str]:
    return lambda name: str(FIXTURES / name)


@st.composite
def elements(
    draw,
    surface: SurfaceSpec,
    max_length: int = 6,
    ambient: Ambient = Ambient.STF,
    fiber_range: int = 2,
) -> GroupElem:
    """Произведение случайных букв базы и степени слоя."""
    result = gc.identity(surface, ambient)
    if surface.base_generators:
        letters = st.tuples(st.sampled_from(surface.base_generators), signs)
        for name, exp in draw(st.lists(letters, max_size=max_length)):
            result = gc.compose(result, gc.power(gc.generator(surface, name, ambient), exp))
    if ambient != Ambient.BASE and fiber_range:
        k = draw(st.integers(-fiber_range, fiber_range))
        result = gc.compose(result, gc.fiber(surface, k, ambient))
    return result


def circle_code(l: GroupElem) -> FrontCode:
    """Фронт без двойных точек; для обращающей ориентацию петли - с одним каспом."""
    if gc.orientation_parity(l) > 0:
        return FrontCode(l.surface, (), (l,))
    return FrontCode(l.surface, (Cusp(1, 1),), (l,))


def eight_code(a: GroupElem, b: GroupElem, xtype: CrossType = CrossType.R1) -> FrontCode:
    """Восьмерка: одна двойная точка с парой петель (a, b)."""
    events = (DoublePoint(1, Slot.FIRST, xtype), DoublePoint(1, Slot.SECOND, xtype))
    return FrontCode(a.surface, events, (a, b))


def torus_word(text: str) -> GroupElem:
    return gc.parse_word(TORUS, text)


def triple_code(x: GroupElem, y: GroupElem, z: GroupElem) -> FrontCode:
    """Три попарно соседние двойные точки: место T-хода в позициях 0, 2, 4."""
    one = gc.identity(x.surface)
    events = (
        DoublePoint(1, Slot.FIRST, CrossType.R1),
        DoublePoint(2, Slot.FIRST, CrossType.R1),
        DoublePoint(1, Slot.SECOND, CrossType.R1),
        DoublePoint(3, Slot.FIRST, CrossType.R1),
        DoublePoint(2, Slot.SECOND, CrossType.R1),
        DoublePoint(3, Slot.SECOND, CrossType.R1),
    )
    return FrontCode(x.surface, events, (one, x, one, y, one, z))


@st.composite
def eight_codes(draw, surface: SurfaceSpec, max_length: int = 3) -> FrontCode:
    a = draw(elements(surface, max_length))
    b = draw(elements(surface, max_length))
    return eight_code(a, b)


def _move_strata(code: FrontCode, strata: Sequence[Stratum]) -> list:
    has_cusps = any(isinstance(e, Cusp) for e in code.events)
    return [s for s in strata if s != Stratum.PI or has_cusps]


@st.composite
def creation_moves(draw, code: FrontCode, strata: Sequence[Stratum]) -> MoveSpec:
    """Рождающий ход в допустимом месте кода."""
    n = max(1, len(code.events))
    stratum = draw(st.sampled_from(_move_strata(code, strata)))
    if stratum == Stratum.LAMBDA:
        return MoveSpec(stratum, 1, (draw(st.integers(0, n - 1)),), rotation=draw(signs))
    direct = draw(st.booleans())
    sign = 1 if direct else -1
    if stratum == Stratum.PI:
        cusps = [i for i, e in enumerate(code.events) if isinstance(e, Cusp)]
        c = draw(st.sampled_from(cusps))
        branch = draw(st.sampled_from([i for i in range(len(code.events)) if i != c]))
        return MoveSpec(stratum, sign, (c, branch), direct=direct)
    site = (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)))
    return MoveSpec(stratum, sign, site, direct=direct)


@st.composite
def grown_codes(
    draw, start: st.SearchStrategy, max_steps: int = 3, strata: Sequence[Stratum] = GROWING
) -> FrontCode:
    """Код, выращенный из start случайными рождениями."""
    code = draw(start)
    for _ in range(draw(st.integers(0, max_steps))):
        if not _move_strata(code, strata):
            break
        code, _ = apply_move(code, draw(creation_moves(code, strata)))
    return code
