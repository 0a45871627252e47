"""Плоские инварианты J⁺, J⁻, St′ и обобщенный инвариант I⁺ для ориентируемых поверхностей."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from services import group_core as gc
from services.classes import ClassKey, kplus_key
from services.errors import UnsupportedSurface
from services.front_code import CrossType, Cusp, FrontCode, StandardFrontId, double_point_type, global_class, loop_pair_at
from services.group_core import GroupElem
from services.integrator import WeightFn, delta_along
from services.strata_moves import CrossingEvent, Stratum

logger = logging.getLogger(__name__)


class Invariant(str, Enum):
    STP = "Stp"
    JPLUS = "Jplus"
    JMINUS = "Jminus"


@dataclass
class ModuleVector:
    """Элемент ℤ[𝒦⁺] с удвоенными коэффициентами."""

    terms: Dict[ClassKey, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {k: c for k, c in self.terms.items() if c}

    def add_term(self, key: ClassKey, doubled: int) -> None:
        value = self.terms.get(key, 0) + doubled
        if value:
            self.terms[key] = value
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        result = ModuleVector(dict(self.terms))
        for key, c in other.terms.items():
            result.add_term(key, c)
        return result

    def __neg__(self) -> "ModuleVector":
        return ModuleVector({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.terms == other.terms

    def scaled(self, n: int) -> "ModuleVector":
        return ModuleVector({k: n * c for k, c in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def coefficient(self, key: ClassKey) -> Fraction:
        return Fraction(self.terms.get(key, 0), 2)

    def items(self) -> List[Tuple[ClassKey, Fraction]]:
        return [(k, Fraction(self.terms[k], 2)) for k in sorted(self.terms, key=ClassKey.sort_key)]

    def lines(self) -> List[str]:
        return [f"{coeff} * {key}" for key, coeff in self.items()]


# --- плоские инварианты -------------------------------------------------------------


def planar_base_value(inv: Invariant, front: StandardFrontId) -> int:
    """Удвоенное значение инварианта на стандартном фронте K_{ω,k}."""
    omega, k = front.omega, front.k
    if inv == Invariant.STP:
        return k if omega == 0 else 2 * (omega - 1) + k
    if inv == Invariant.JPLUS:
        return 2 * (-k if omega == 0 else -2 * (omega - 1) - k)
    return 2 * (-1 if omega == 0 else -3 * (omega - 1))


_PLANAR_WEIGHTS = {
    Invariant.STP: {Stratum.T: (1,), Stratum.PI: (1,)},
    Invariant.JPLUS: {Stratum.KPLUS: (2,)},
    Invariant.JMINUS: {Stratum.KMINUS: (2,)},
}


def planar_weight(inv: Invariant) -> WeightFn:
    """Аксиомы Арнольда: St′ растет на 1 (T) и ½ (Π), J± - на 2 (K±)."""
    return WeightFn(defaults=dict(_PLANAR_WEIGHTS[inv]))


def planar_invariant(inv: Invariant, front: StandardFrontId, path: Sequence[CrossingEvent]) -> int:
    return planar_base_value(inv, front) + delta_along(path, planar_weight(inv)).doubled[0]


# --- I⁺ -------------------------------------------------------------------------------


def _pair_key(a: GroupElem, b: GroupElem) -> ClassKey:
    return kplus_key((a, b))


def _twisted(a: GroupElem, b: GroupElem, n: int) -> ClassKey:
    """[a·fⁿ, b·f⁻ⁿ]."""
    f = gc.fiber(a.surface, n)
    return _pair_key(gc.compose(a, f), gc.compose(b, gc.inverse(f)))


# (класс [L^r_d] − класс [L^l_d]) через сдвиг по слою
_TWIST_TABLE = {
    CrossType.R1: (0, 1),
    CrossType.R2: (-1, 0),
    CrossType.C1: (0, -1),
    CrossType.C2: (1, 0),
}


def iplus(code: FrontCode) -> ModuleVector:
    """I⁺(L) = Σ_d ([L^r_d] − [L^l_d]) − C⁻([l,1] − [lf, f⁻¹]) − C⁺([l,1] − [lf⁻¹, f])."""
    surface = code.surface
    if not surface.orientable:
        raise UnsupportedSurface(f"I⁺ определен только для ориентируемых поверхностей, получено {surface.describe()}")
    result = ModuleVector()
    for dp_id in code.double_point_ids:
        a, b = loop_pair_at(code, dp_id)
        right, left = _TWIST_TABLE[double_point_type(code, dp_id)]
        result.add_term(_twisted(a, b, right), 2)
        result.add_term(_twisted(a, b, left), -2)

    rotations = Counter(e.rotation_sign for e in code.events if isinstance(e, Cusp))
    negative, positive = rotations[-1], rotations[1]
    if negative or positive:
        l = global_class(code)
        one = gc.identity(surface)
        result.add_term(_pair_key(l, one), -(negative + positive))
        result.add_term(_twisted(l, one, 1), negative)
        result.add_term(_twisted(l, one, -1), positive)
    logger.debug(f"I⁺: {len(result.terms)} слагаемых")
    return result


def iplus_delta(s1: GroupElem, s2: GroupElem) -> ModuleVector:
    """Скачок I⁺ при положительном K⁺-ходе: 2[s₁,s₂] − [s₁f, s₂f⁻¹] − [s₁f⁻¹, s₂f]."""
    if not s1.surface.orientable:
        raise UnsupportedSurface("скачок I⁺ определен только для ориентируемых поверхностей")
    result = ModuleVector()
    result.add_term(_pair_key(s1, s2), 4)
    result.add_term(_twisted(s1, s2, 1), -2)
    result.add_term(_twisted(s1, s2, -1), -2)
    return result


@dataclass(frozen=True)
class OrderOneCheck:
    kplus_cancel: bool
    predicted_matches: bool
    equal: bool

    @property
    def ok(self) -> bool:
        return self.predicted_matches and (self.equal or not self.kplus_cancel)


def order_one_check(path: Sequence[CrossingEvent], before: FrontCode, after: FrontCode) -> OrderOneCheck:
    """Сверка I⁺ на концах пути: сумма скачков по K⁺-событиям и совпадение при их сокращении."""
    balance: Counter = Counter()
    predicted = iplus(before)
    for event in path:
        if event.stratum != Stratum.KPLUS:
            continue
        balance[event.key] += event.sign
        s1, s2 = event.key.entries
        jump = iplus_delta(s1, s2)
        predicted = predicted + (jump if event.sign > 0 else -jump)
    final = iplus(after)
    return OrderOneCheck(
        kplus_cancel=not any(balance.values()),
        predicted_matches=predicted == final,
        equal=iplus(before) == final,
    )
