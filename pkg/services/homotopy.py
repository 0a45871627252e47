"""Дескрипторы π₁ и πₙ пространства фронтов по теоремам классификации."""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from services import group_core as gc
from services.errors import FlagMismatch, UnsupportedSurface
from services.front_code import FrontCode, global_class
from services.group_core import Ambient, GroupElem
from services.surfaces import SurfaceKind, SurfaceSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Free:
    rank: int

    def __str__(self) -> str:
        if self.rank == 0:
            return "0"
        return "Z" if self.rank == 1 else f"Z^{self.rank}"


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SymbolicPiN:
    """πₙ(S²), значение не вычисляется."""

    n: int

    def __str__(self) -> str:
        return f"pi{self.n}(S2)"


@dataclass(frozen=True)
class DirectSum:
    parts: Tuple["GroupDescriptor", ...]

    def __str__(self) -> str:
        return " (+) ".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class IndexTwo:
    """Подгруппа индекса два: (четное, сохраняющее) ∪ (нечетное, обращающее)."""

    inner: "GroupDescriptor"
    rule: str = "parity"

    def __str__(self) -> str:
        return f"Idx2({self.inner})"


GroupDescriptor = Union[Free, Atom, SymbolicPiN, DirectSum, IndexTwo]

Z2 = Atom("Z_2")
Z4 = Atom("Z_4")
PI1_STF = Atom("pi1STF")
PI1_STK = Atom("pi1STK")
PI1_K = Atom("pi1K")
PI1_PRES_STF = Atom("pi1presSTF")


def direct_sum(*parts: GroupDescriptor) -> GroupDescriptor:
    """Нормализованная прямая сумма: слагаемые Zᵃ⊕Zᵇ сливаются в Z^{a+b}."""
    flat = []
    for part in parts:
        flat.extend(part.parts if isinstance(part, DirectSum) else (part,))
    rank = sum(p.rank for p in flat if isinstance(p, Free))
    rest = tuple(p for p in flat if not isinstance(p, Free))
    if rank:
        rest = (Free(rank),) + rest
    if not rest:
        return Free(0)
    return rest[0] if len(rest) == 1 else DirectSum(rest)


def free_rank(d: GroupDescriptor) -> Optional[int]:
    """Ранг свободной абелевой части; None для неабелевых атомов."""
    if isinstance(d, Free):
        return d.rank
    if isinstance(d, Atom):
        return 0 if d.name in ("Z_2", "Z_4") else None
    if isinstance(d, DirectSum):
        ranks = [free_rank(p) for p in d.parts]
        return None if None in ranks else sum(ranks)
    if isinstance(d, IndexTwo):
        return free_rank(d.inner)
    return None


# --- данные класса фронта --------------------------------------------------------------


@dataclass(frozen=True)
class FrontClassData:
    """Флаги класса фронта; None - флаг неизвестен."""

    preserving: bool
    base_trivial: bool
    stf_trivial: Optional[bool] = None
    klein_square: Optional[bool] = None
    root_square: Optional[bool] = None


def _klein_square(l: GroupElem) -> bool:
    """l = b^{2k} для некоторого обращающего ориентацию b: координаты (0, 2n, 0)."""
    i, j, k = gc.klein_coordinates(l)
    return i == 0 and k == 0 and j % 2 == 0


def front_class_data(
    source: Union[FrontCode, GroupElem], asserted: Optional[FrontClassData] = None
) -> FrontClassData:
    """Флаги по коду или по l ∈ π₁(STF); заявленные флаги сверяются с вычисленными."""
    l = global_class(source) if isinstance(source, FrontCode) else source
    surface = l.surface
    if surface.kind == SurfaceKind.NONORIENTABLE:
        if asserted is None:
            raise UnsupportedSurface(f"флаги для {surface.describe()} задаются только явно")
        return asserted
    if l.ambient != Ambient.STF:
        raise ValueError("глобальный класс должен лежать в π₁(STF)")

    preserving = gc.orientation_parity(l) > 0
    computed = FrontClassData(
        preserving=preserving,
        base_trivial=not gc.project(l).word,
        stf_trivial=gc.is_identity(l),
        klein_square=_klein_square(l) if surface.kind == SurfaceKind.KLEIN_BOTTLE and preserving else None,
    )
    if asserted is not None:
        for name in ("preserving", "base_trivial", "stf_trivial", "klein_square"):
            claimed, actual = getattr(asserted, name), getattr(computed, name)
            if claimed is not None and actual is not None and claimed != actual:
                raise FlagMismatch(f"флаг {name}: заявлено {claimed}, вычислено {actual}")
    return computed


# --- дескрипторы ---------------------------------------------------------------------


def _require(flag: Optional[bool], name: str, surface: SurfaceSpec) -> bool:
    if flag is None:
        raise UnsupportedSurface(f"для {surface.describe()} нужен явный флаг {name}")
    return flag


def pi1_front_space(surface: SurfaceSpec, front: FrontClassData) -> GroupDescriptor:
    kind = surface.kind
    if kind in (SurfaceKind.SPHERE, SurfaceKind.PROJECTIVE_PLANE):
        return direct_sum(Free(1), Z2)
    if kind == SurfaceKind.TORUS:
        return Free(4)
    if surface.orientable:
        if not front.base_trivial:
            return Free(3)
        return direct_sum(Free(1), _stf_descriptor(surface))
    if not front.preserving:
        return Free(2)
    if kind == SurfaceKind.KLEIN_BOTTLE:
        if _require(front.klein_square, "klein_square", surface):
            return direct_sum(Free(1), PI1_STK)
        return Free(4)
    # неориентируемый род ≥ 3: только по заявленным флагам
    if not front.base_trivial:
        if _require(front.root_square, "root_square", surface):
            return direct_sum(Free(1), PI1_K)
        return Free(3)
    if not _require(front.stf_trivial, "stf_trivial", surface):
        return direct_sum(Free(1), PI1_PRES_STF)
    return IndexTwo(direct_sum(Free(1), PI1_STF))


def pi_n_front_space(surface: SurfaceSpec, n: int) -> GroupDescriptor:
    if n < 2:
        raise ValueError("n должно быть не меньше 2")
    if surface.kind not in (SurfaceKind.SPHERE, SurfaceKind.PROJECTIVE_PLANE):
        return Free(0)
    if n == 2:
        return Free(1)
    return DirectSum((SymbolicPiN(n), SymbolicPiN(n + 1)))


def _stf_descriptor(surface: SurfaceSpec) -> GroupDescriptor:
    kind = surface.kind
    if kind == SurfaceKind.PLANE:
        return Free(1)
    if kind == SurfaceKind.SPHERE:
        return Z2
    if kind == SurfaceKind.PROJECTIVE_PLANE:
        return Z4
    if kind == SurfaceKind.TORUS:
        return Free(3)
    if kind == SurfaceKind.KLEIN_BOTTLE:
        return PI1_STK
    return PI1_STF


def pi1_cstf_descriptor(surface: SurfaceSpec) -> GroupDescriptor:
    """π₁(CSTF) как подгруппа индекса два в ℤ ⊕ π₁(STF)."""
    if surface.kind == SurfaceKind.NONORIENTABLE:
        raise UnsupportedSurface(f"π₁(CSTF) для {surface.describe()} не моделируется")
    return IndexTwo(direct_sum(Free(1), _stf_descriptor(surface)))


_CENTRALIZER_ATOMS = {
    "Z": Free(1),
    "Z^2": Free(2),
    "Z^3": Free(3),
    "Z_2": Z2,
    "Z_4": Z4,
    "pi1(STK)": PI1_STK,
    "pi1(STF)": PI1_STF,
}


@dataclass(frozen=True)
class CentralizerConsistency:
    descriptor: GroupDescriptor
    centralizer: GroupDescriptor
    consistent: bool


def centralizer_consistency(surface: SurfaceSpec, l: GroupElem) -> CentralizerConsistency:
    """Сверка π₁(𝓛, L) с ℤ ⊕ Z(l): совпадение или равенство рангов (подгруппа четности)."""
    if l.surface != surface:
        raise ValueError("элемент l лежит на другой поверхности")
    descriptor = pi1_front_space(surface, front_class_data(l))
    info = gc.centralizer_descriptor(l)
    expected = direct_sum(Free(1), _CENTRALIZER_ATOMS[info.iso_type])
    consistent = expected == descriptor
    if not consistent:
        ranks = (free_rank(expected), free_rank(descriptor))
        consistent = None not in ranks and ranks[0] == ranks[1]
    if not consistent:
        logger.warning(f"дескриптор {descriptor} не согласован с ℤ ⊕ Z(l) = {expected}")
    return CentralizerConsistency(descriptor, expected, consistent)
