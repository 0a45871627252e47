"""Поверхности и образующие их групп."""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

# Буква слова: (имя образующей, показатель ±1)
Letter = Tuple[str, int]

FIBER = "f"
HALF_FIBER = "h"


class SurfaceKind(str, Enum):
    PLANE = "plane"
    SPHERE = "sphere"
    TORUS = "torus"
    CLOSED = "closed"
    FREE = "free"
    PROJECTIVE_PLANE = "rp2"
    KLEIN_BOTTLE = "klein"
    NONORIENTABLE = "nonorientable"


_ORIENTABLE = {
    SurfaceKind.PLANE,
    SurfaceKind.SPHERE,
    SurfaceKind.TORUS,
    SurfaceKind.CLOSED,
    SurfaceKind.FREE,
}


@dataclass(frozen=True)
class SurfaceSpec:
    """Поверхность F; вид задает копредставления π₁(F) и π₁(STF)."""

    kind: SurfaceKind
    genus: int = 0
    rank: int = 0

    def __post_init__(self) -> None:
        if self.kind == SurfaceKind.CLOSED and self.genus < 2:
            raise ValueError("для closed нужен genus >= 2")
        if self.kind == SurfaceKind.FREE and self.rank < 1:
            raise ValueError("для free нужен rank >= 1")
        if self.kind == SurfaceKind.NONORIENTABLE and self.genus < 3:
            raise ValueError("для nonorientable нужен genus >= 3")

    @property
    def orientable(self) -> bool:
        return self.kind in _ORIENTABLE

    @property
    def base_generators(self) -> Tuple[str, ...]:
        if self.kind == SurfaceKind.TORUS:
            return ("a1", "b1")
        if self.kind == SurfaceKind.CLOSED:
            names = []
            for i in range(1, self.genus + 1):
                names.extend([f"a{i}", f"b{i}"])
            return tuple(names)
        if self.kind == SurfaceKind.FREE:
            return tuple(f"x{i}" for i in range(1, self.rank + 1))
        if self.kind == SurfaceKind.KLEIN_BOTTLE:
            return ("c", "d")
        if self.kind == SurfaceKind.PROJECTIVE_PLANE:
            return ("p",)
        return ()

    @property
    def reversing_generators(self) -> FrozenSet[str]:
        # c сохраняет ориентацию, d обращает
        if self.kind == SurfaceKind.KLEIN_BOTTLE:
            return frozenset({"d"})
        if self.kind == SurfaceKind.PROJECTIVE_PLANE:
            return frozenset({"p"})
        return frozenset()

    @property
    def euler_increment(self) -> int:
        """Показатель слоя в соотношении ∏[aᵢ,bᵢ] = f^{2g−2}."""
        if self.kind == SurfaceKind.CLOSED:
            return 2 * self.genus - 2
        return 0

    @property
    def relator(self) -> Tuple[Letter, ...]:
        """Соотношение ∏[aᵢ,bᵢ] (только для closed)."""
        if self.kind != SurfaceKind.CLOSED:
            return ()
        letters = []
        for i in range(1, self.genus + 1):
            a, b = f"a{i}", f"b{i}"
            letters.extend([(a, 1), (b, 1), (a, -1), (b, -1)])
        return tuple(letters)

    def letter_order(self) -> Dict[Letter, int]:
        """Порядок a₁ < a₁⁻¹ < b₁ < … < f < f⁻¹ < h < h⁻¹ для shortlex."""
        order: Dict[Letter, int] = {}
        for idx, name in enumerate(self.base_generators + (FIBER, HALF_FIBER)):
            order[(name, 1)] = 2 * idx
            order[(name, -1)] = 2 * idx + 1
        return order

    def describe(self) -> str:
        if self.kind in (SurfaceKind.CLOSED, SurfaceKind.NONORIENTABLE):
            return f"{self.kind.value} genus={self.genus}"
        if self.kind == SurfaceKind.FREE:
            return f"{self.kind.value} rank={self.rank}"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "SurfaceSpec":
        """Разбирает `torus`, `closed genus=2`, `free rank=3` и т.п."""
        parts = text.split()
        if not parts:
            raise ValueError("пустое описание поверхности")
        try:
            kind = SurfaceKind(parts[0].lower())
        except ValueError:
            raise ValueError(f"неизвестный вид поверхности '{parts[0]}'") from None

        params: Dict[str, int] = {}
        for item in parts[1:]:
            key, sep, value = item.partition("=")
            if not sep or key not in ("genus", "rank"):
                raise ValueError(f"неизвестный параметр '{item}'")
            try:
                params[key] = int(value)
            except ValueError:
                raise ValueError(f"параметр '{key}' должен быть целым") from None

        genus: Optional[int] = params.get("genus")
        rank: Optional[int] = params.get("rank")
        if kind in (SurfaceKind.CLOSED, SurfaceKind.NONORIENTABLE) and genus is None:
            raise ValueError(f"для {kind.value} нужен genus=")
        if kind == SurfaceKind.FREE and rank is None:
            raise ValueError("для free нужен rank=")
        return cls(kind, genus or 0, rank or 0)


PLANE = SurfaceSpec(SurfaceKind.PLANE)
SPHERE = SurfaceSpec(SurfaceKind.SPHERE)
TORUS = SurfaceSpec(SurfaceKind.TORUS)
PROJECTIVE_PLANE = SurfaceSpec(SurfaceKind.PROJECTIVE_PLANE)
KLEIN_BOTTLE = SurfaceSpec(SurfaceKind.KLEIN_BOTTLE)


def closed_surface(genus: int) -> SurfaceSpec:
    return SurfaceSpec(SurfaceKind.CLOSED, genus=genus)


def free_surface(rank: int) -> SurfaceSpec:
    return SurfaceSpec(SurfaceKind.FREE, rank=rank)
