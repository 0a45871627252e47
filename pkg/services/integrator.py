"""Исчисление Δ: интегрирование весовых функций вдоль последовательностей событий."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from services import group_core as gc
from services.classes import ClassKey, KeyFamily, g_map
from services.errors import FlagMismatch, KeySpaceMismatch, UnsupportedSurface
from services.front_code import FrontCode, global_class
from services.strata_moves import CODIM_TWO, CrossingEvent, LoopKind, Stratum, canned_loop
from services.surfaces import SurfaceKind, SurfaceSpec

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class DeltaValue:
    """Удвоенное значение: половинные веса Π остаются целыми."""

    doubled: Vector

    @classmethod
    def zero(cls, dim: int = 1) -> "DeltaValue":
        return cls((0,) * dim)

    @property
    def is_zero(self) -> bool:
        return not any(self.doubled)

    def halves(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def __add__(self, other: "DeltaValue") -> "DeltaValue":
        if len(self.doubled) != len(other.doubled):
            raise ValueError("размерности значений не совпадают")
        return DeltaValue(tuple(x + y for x, y in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "DeltaValue":
        return DeltaValue(tuple(-x for x in self.doubled))

    def __sub__(self, other: "DeltaValue") -> "DeltaValue":
        return self + (-other)


@dataclass
class WeightFn:
    """ψ: ключ класса → вектор ℤᵏ; для отсутствующих ключей - значение по страту или 0."""

    table: Dict[ClassKey, Vector] = field(default_factory=dict)
    defaults: Dict[Stratum, Vector] = field(default_factory=dict)
    dim: int = 1
    pi_through_t: bool = True

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("размерность ψ должна быть положительной")
        for vector in list(self.table.values()) + list(self.defaults.values()):
            if len(vector) != self.dim:
                raise ValueError(f"вектор {vector} не имеет размерности {self.dim}")
        surfaces = {key.surface for key in self.table}
        if len(surfaces) > 1:
            raise KeySpaceMismatch("ключи ψ относятся к разным поверхностям")
        refinements = {key.refined for key in self.table if key.family != KeyFamily.LAMBDA}
        if len(refinements) > 1:
            raise KeySpaceMismatch("ψ смешивает уточненные и неуточненные ключи")

    @property
    def surface(self) -> Optional[SurfaceSpec]:
        return next(iter(self.table)).surface if self.table else None

    @property
    def refined(self) -> Optional[bool]:
        for key in self.table:
            if key.family != KeyFamily.LAMBDA:
                return key.refined
        return None

    def check_event(self, event: CrossingEvent) -> None:
        surface, refined = self.surface, self.refined
        if surface is not None and event.key.surface != surface:
            raise KeySpaceMismatch(
                f"ключ события на {event.key.surface.describe()}, ψ задана на {surface.describe()}"
            )
        if refined is not None and event.key.family != KeyFamily.LAMBDA and event.key.refined != refined:
            raise KeySpaceMismatch("уточнение ключа события не совпадает с ψ")

    def value(self, event: CrossingEvent) -> Vector:
        key = event.key
        if key in self.table:
            return self.table[key]
        if self.pi_through_t and key.family == KeyFamily.PI_I:
            t = g_map(key)
            if t in self.table:
                return self.table[t]
        return self.defaults.get(event.stratum, (0,) * self.dim)

    def __add__(self, other: "WeightFn") -> "WeightFn":
        if self.dim != other.dim:
            raise ValueError("размерности ψ не совпадают")

        def add(x: Vector, y: Vector) -> Vector:
            return tuple(a + b for a, b in zip(x, y))

        zero = (0,) * self.dim
        table = {k: add(self.table.get(k, zero), other.table.get(k, zero)) for k in set(self.table) | set(other.table)}
        defaults = {
            s: add(self.defaults.get(s, zero), other.defaults.get(s, zero))
            for s in set(self.defaults) | set(other.defaults)
        }
        return WeightFn(table, defaults, self.dim, self.pi_through_t and other.pi_through_t)

    def scaled(self, n: int) -> "WeightFn":
        return WeightFn(
            {k: tuple(n * x for x in v) for k, v in self.table.items()},
            {s: tuple(n * x for x in v) for s, v in self.defaults.items()},
            self.dim,
            self.pi_through_t,
        )


@dataclass(frozen=True)
class ComponentInfo:
    """Компонента пространства фронтов: сохраняет ли глобальная петля ориентацию."""

    preserving: bool
    refined: bool = False


@dataclass
class LocalIntegrabilityReport:
    checked: Dict[LoopKind, int] = field(default_factory=dict)
    failures: List[Tuple[LoopKind, Tuple[ClassKey, ...], DeltaValue]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class Verdict:
    case: str
    integrable: Optional[bool]
    deltas: Dict[str, DeltaValue] = field(default_factory=dict)
    failed_loop: Optional[str] = None

    @property
    def label(self) -> str:
        if self.integrable is None:
            return "Conditional(gamma2-unchecked)"
        if self.integrable:
            return "Integrable"
        return f"NotIntegrable({self.failed_loop})"


@dataclass
class DerivativeVerdict:
    local: LocalIntegrabilityReport
    verdict: Verdict
    gamma3: Optional[DeltaValue] = None

    @property
    def ok(self) -> bool:
        gamma3_ok = self.gamma3 is None or self.gamma3.is_zero
        return self.local.ok and self.verdict.integrable is not False and gamma3_ok


# --- операции -----------------------------------------------------------------------


def delta_along(events: Sequence[CrossingEvent], psi: WeightFn) -> DeltaValue:
    """Удвоенная сумма Σ σ·w·ψ(key): вес 2 для T, K±, Λ и 1 для Π."""
    total = [0] * psi.dim
    for event in events:
        psi.check_event(event)
        vector = psi.value(event)
        for n, x in enumerate(vector):
            total[n] += event.sign * event.weight * x
    return DeltaValue(tuple(total))


def integrate_along(path: Sequence[CrossingEvent], psi: WeightFn, base: DeltaValue) -> DeltaValue:
    return base + delta_along(path, psi)


def _pools(keys: Sequence[ClassKey]) -> Dict[str, List[ClassKey]]:
    pools: Dict[str, List[ClassKey]] = {"K": [], "T": [], "Pi": [], "Lambda": []}
    for key in sorted(set(keys), key=ClassKey.sort_key):
        stratum = key.family.stratum
        if stratum in ("Kplus", "Kminus"):
            pools["K"].append(key)
        elif stratum == "T":
            pools["T"].append(key)
            # неуточненный Π-класс - это T-класс подставленного фронта
            if not key.refined:
                pools["Pi"].append(key)
        elif stratum == "Pi":
            pools["Pi"].append(key)
        else:
            pools["Lambda"].append(key)
    return pools


_TEMPLATE_SLOTS = {
    LoopKind.TT: ("T", "T", "T", "T"),
    LoopKind.KPI: ("K", "Pi"),
    LoopKind.KT: ("K", "T"),
    LoopKind.KK: ("K", "K"),
    LoopKind.TPI: ("T", "Pi", "Pi"),
    LoopKind.PI_LAMBDA: ("Pi",),
    LoopKind.PI_PI: ("Pi", "Pi"),
    LoopKind.LAMBDA_LAMBDA: ("Lambda", "Lambda"),
}


def _instances(slots: Sequence[str], pools: Dict[str, List[ClassKey]]) -> List[Tuple[ClassKey, ...]]:
    """Для каждого ключа пула - набор, начинающийся с него (циклически)."""
    if any(not pools[s] for s in slots):
        return []
    length = max(len(pools[s]) for s in slots)
    result = []
    for start in range(length):
        offsets: Dict[str, int] = {}
        chosen = []
        for s in slots:
            pool = pools[s]
            n = offsets.get(s, 0)
            chosen.append(pool[(start + n) % len(pool)])
            offsets[s] = n + 1
        result.append(tuple(chosen))
    return result


def check_local_integrability(
    chi: WeightFn, witnesses: Sequence[ClassKey] = ()
) -> LocalIntegrabilityReport:
    """Δ на восьми петлях вокруг стратов коразмерности два для ключей χ′ и свидетелей."""
    pools = _pools(list(chi.table) + list(witnesses))
    report = LocalIntegrabilityReport()
    for kind in CODIM_TWO:
        instances = _instances(_TEMPLATE_SLOTS[kind], pools)
        report.checked[kind] = len(instances)
        for keys in instances:
            delta = delta_along(canned_loop(kind, keys=keys), chi)
            if not delta.is_zero:
                report.failures.append((kind, keys, delta))
    if report.failures:
        logger.info(f"локальная интегрируемость нарушена на {len(report.failures)} петлях")
    return report


def component_of(code: FrontCode, refined: bool = False) -> ComponentInfo:
    return ComponentInfo(gc.orientation_parity(global_class(code)) > 0, refined)


def integrability_verdict(
    surface: SurfaceSpec,
    component: ComponentInfo,
    psi: WeightFn,
    sample: FrontCode,
    gamma2: Optional[Sequence[CrossingEvent]] = None,
) -> Verdict:
    """Вердикт по случаям I (обращает ориентацию), II (Δ(γ₁)) и III (бутылка Клейна, γ₁ и γ₂)."""
    if surface.kind == SurfaceKind.NONORIENTABLE:
        raise UnsupportedSurface(f"коды фронтов на {surface.describe()} не поддерживаются")
    if sample.surface != surface:
        raise KeySpaceMismatch("образец фронта лежит на другой поверхности")
    if component_of(sample).preserving != component.preserving:
        raise FlagMismatch("образец не лежит в заявленной компоненте")

    if not component.preserving:
        return Verdict("I", True)

    gamma1 = delta_along(canned_loop(LoopKind.GAMMA1, sample, refined=component.refined), psi)
    klein = surface.kind == SurfaceKind.KLEIN_BOTTLE
    verdict = Verdict("III" if klein else "II", gamma1.is_zero, {"gamma1": gamma1})
    if not gamma1.is_zero:
        verdict.failed_loop = "gamma1"
        return verdict
    if not klein:
        return verdict

    if gamma2 is None:
        logger.warning("нет свидетеля подъема для γ₂: вердикт условный")
        verdict.integrable = None
        return verdict
    delta2 = delta_along(canned_loop(LoopKind.GAMMA2, sample, gamma2_events=gamma2), psi)
    verdict.deltas["gamma2"] = delta2
    if not delta2.is_zero:
        verdict.integrable = False
        verdict.failed_loop = "gamma2"
    return verdict


def derivative_verdict(
    chi: WeightFn,
    sample: FrontCode,
    gamma2: Optional[Sequence[CrossingEvent]] = None,
    refined: bool = False,
    witnesses: Sequence[ClassKey] = (),
) -> DerivativeVerdict:
    """Является ли χ′ производной инварианта: локальная интегрируемость и Δ на γ₁, γ₂, γ₃."""
    component = component_of(sample, refined)
    keys: List[ClassKey] = list(witnesses)
    if component.preserving:
        keys += [e.key for e in canned_loop(LoopKind.GAMMA1, sample, refined=refined)]
    local = check_local_integrability(chi, keys)
    verdict = integrability_verdict(sample.surface, component, chi, sample, gamma2)
    gamma3 = None
    if sample.cusp_count:
        gamma3 = delta_along(canned_loop(LoopKind.GAMMA3, sample, refined=refined), chi)
    return DerivativeVerdict(local, verdict, gamma3)
