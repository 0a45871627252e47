"""Таблицы весов ψ и списки событий в текстовом виде."""
import logging
from typing import Dict, List, Tuple

from services.classes import ClassKey
from services.errors import FrontSyntaxError, FrontwaveError
from services.integrator import WeightFn
from services.key_format import parse_key
from services.move_script import parse_sign, parse_stratum
from services.strata_moves import CrossingEvent, Stratum, make_event
from services.surfaces import SurfaceSpec

logger = logging.getLogger(__name__)


def _lines(text: str) -> List[Tuple[int, str]]:
    result = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            result.append((line_no, line))
    return result


def _vector(text: str, line_no: int, col: int) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise FrontSyntaxError(line_no, col, f"вектор '{text}' должен состоять из целых через запятую") from None


def _key(surface: SurfaceSpec, text: str, line_no: int, col: int) -> ClassKey:
    try:
        return parse_key(surface, text)
    except (ValueError, FrontwaveError) as exc:
        raise FrontSyntaxError(line_no, col, str(exc)) from None


def parse_psi_table(surface: SurfaceSpec, text: str) -> WeightFn:
    """`dim k`, строки `<ключ> <вектор>` и `default <страт> <вектор>`."""
    dim = 1
    table: Dict[ClassKey, Tuple[int, ...]] = {}
    defaults: Dict[Stratum, Tuple[int, ...]] = {}
    for n, (line_no, line) in enumerate(_lines(text)):
        stripped = line.strip()
        indent = len(line) - len(line.lstrip())
        if stripped.startswith("dim "):
            if n:
                raise FrontSyntaxError(line_no, indent + 1, "dim допустим только в первой строке")
            value = stripped[4:].strip()
            if not value.isdigit() or int(value) < 1:
                raise FrontSyntaxError(line_no, indent + 5, "dim должен быть положительным целым")
            dim = int(value)
            continue
        head, _, vector_text = stripped.rpartition(" ")
        vector_col = len(line) - len(vector_text) + 1
        if not head:
            raise FrontSyntaxError(line_no, indent + 1, "ожидается '<ключ> <вектор>'")
        vector = _vector(vector_text, line_no, vector_col)
        if len(vector) != dim:
            raise FrontSyntaxError(line_no, vector_col, f"вектор должен иметь размерность {dim}")
        if head.startswith("default "):
            name = head[len("default "):].strip()
            stratum = parse_stratum(name, line_no, indent + len("default ") + 1)
            defaults[stratum] = vector
            continue
        key = _key(surface, head.strip(), line_no, indent + 1)
        if key in table:
            raise FrontSyntaxError(line_no, indent + 1, f"ключ {key} задан дважды")
        table[key] = vector
    try:
        return WeightFn(table, defaults, dim)
    except FrontwaveError:
        raise
    except ValueError as exc:  # pragma: no cover - размерности проверены выше
        raise FrontSyntaxError(1, 1, str(exc)) from None


def parse_event_list(surface: SurfaceSpec, text: str) -> List[CrossingEvent]:
    """Строки `<страт> <+|-> <ключ>`; используется как свидетель подъема γ₂."""
    events: List[CrossingEvent] = []
    for line_no, line in _lines(text):
        parts = line.split(None, 2)
        if len(parts) != 3:
            raise FrontSyntaxError(line_no, 1, "ожидается '<страт> <+|-> <ключ>'")
        stratum = parse_stratum(parts[0], line_no, line.index(parts[0]) + 1)
        sign = parse_sign(parts[1], line_no, line.index(parts[1], len(parts[0])) + 1)
        key = _key(surface, parts[2], line_no, line.index(parts[2]) + 1)
        events.append(make_event(stratum, sign, key))
    return events
