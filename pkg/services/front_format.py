"""Текстовый формат файла фронта `frontcode v1`: разбор с позициями ошибок и печать."""
import logging
import re
from typing import List, Optional, Tuple

from services import group_core as gc
from services.errors import FrontSyntaxError, FrontwaveError, SemanticError
from services.front_code import CrossType, Cusp, DoublePoint, Event, FrontCode, Slot, validate
from services.group_core import Ambient, GroupElem
from services.surfaces import SurfaceKind, SurfaceSpec

logger = logging.getLogger(__name__)

HEADER = "frontcode v1"

_EVENT = re.compile(r"^event\s+(\S+?):\s*(.*)$")
_ARC = re.compile(r"^arc\s+(\S+?):\s*(.*)$")
_META = re.compile(r"^meta\s+([^=\s]+)=(\S*)$")
_TOKEN = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _tokens(text: str, offset: int) -> List[Tuple[str, int]]:
    """Токены с 1-based номерами столбцов."""
    return [(m.group(0), offset + m.start() + 1) for m in _TOKEN.finditer(text)]


def _index(text: str, expected: int, line_no: int, col: int) -> None:
    try:
        value = int(text)
    except ValueError:
        raise FrontSyntaxError(line_no, col, f"номер '{text}' должен быть целым") from None
    if value != expected:
        raise FrontSyntaxError(line_no, col, f"ожидается номер {expected}, получено {value}")


def _sign(token: str, line_no: int, col: int) -> int:
    if token == "+":
        return 1
    if token == "-":
        return -1
    raise FrontSyntaxError(line_no, col, f"знак должен быть + или -, получено '{token}'")


def parse_word_at(surface: SurfaceSpec, text: str, line_no: int, col: int) -> GroupElem:
    """Слово π₁(STF) с ошибкой в позиции первого неверного токена."""
    tokens = _tokens(text, col - 1)
    if not tokens:
        raise FrontSyntaxError(line_no, col, "пустое слово")
    if [t for t, _ in tokens] == ["1"]:
        return gc.identity(surface)
    result = gc.identity(surface)
    for token, token_col in tokens:
        try:
            result = gc.compose(result, gc.parse_word(surface, token, Ambient.STF))
        except FrontwaveError as exc:
            raise FrontSyntaxError(line_no, token_col, str(exc)) from None
    return result


def _parse_event(surface: SurfaceSpec, body: str, line_no: int, col: int) -> Event:
    tokens = _tokens(body, col - 1)
    if not tokens:
        raise FrontSyntaxError(line_no, col, "пустое событие")
    head, head_col = tokens[0]
    if head == "D":
        if len(tokens) != 4:
            raise FrontSyntaxError(line_no, head_col, "ожидается 'D <id> <first|second> <R1|R2|C1|C2>'")
        (id_text, id_col), (slot_text, slot_col), (type_text, type_col) = tokens[1:]
        try:
            dp_id = int(id_text)
        except ValueError:
            raise FrontSyntaxError(line_no, id_col, f"идентификатор '{id_text}' должен быть целым") from None
        try:
            slot = Slot(slot_text)
        except ValueError:
            raise FrontSyntaxError(line_no, slot_col, f"слот должен быть first или second, получено '{slot_text}'") from None
        try:
            xtype = CrossType(type_text)
        except ValueError:
            raise FrontSyntaxError(line_no, type_col, f"неизвестный тип '{type_text}'") from None
        return DoublePoint(dp_id, slot, xtype)
    if head == "C":
        if len(tokens) != 3:
            raise FrontSyntaxError(line_no, head_col, "ожидается 'C <+|-> <+|->'")
        (m_text, m_col), (r_text, r_col) = tokens[1:]
        return Cusp(_sign(m_text, line_no, m_col), _sign(r_text, line_no, r_col))
    raise FrontSyntaxError(line_no, head_col, f"событие должно начинаться с D или C, получено '{head}'")


def parse_front_file(text: str, check: bool = True) -> FrontCode:
    """Разбор файла фронта; при check=True код дополнительно проходит validate."""
    lines = [(n, _strip_comment(raw)) for n, raw in enumerate(text.splitlines(), start=1)]
    lines = [(n, line) for n, line in lines if line.strip()]
    if not lines or lines[0][1].strip() != HEADER:
        where = lines[0][0] if lines else 1
        raise FrontSyntaxError(where, 1, f"первая строка должна быть '{HEADER}'")
    if len(lines) < 2 or not lines[1][1].startswith("surface"):
        where = lines[1][0] if len(lines) > 1 else lines[0][0] + 1
        raise FrontSyntaxError(where, 1, "вторая строка должна задавать поверхность")

    surface_no, surface_line = lines[1]
    try:
        surface = SurfaceSpec.parse(surface_line[len("surface"):])
    except ValueError as exc:
        raise FrontSyntaxError(surface_no, len("surface") + 2, str(exc)) from None
    if surface.kind == SurfaceKind.NONORIENTABLE:
        raise SemanticError(f"коды фронтов на {surface.describe()} не поддерживаются")

    events: List[Event] = []
    arcs: List[GroupElem] = []
    meta: List[Tuple[str, str]] = []
    section = "event"
    for line_no, line in lines[2:]:
        event_match = _EVENT.match(line)
        arc_match = _ARC.match(line)
        meta_match = _META.match(line)
        if event_match:
            if section != "event":
                raise FrontSyntaxError(line_no, 1, "события должны предшествовать дугам")
            _index(event_match.group(1), len(events), line_no, event_match.start(1) + 1)
            events.append(_parse_event(surface, event_match.group(2), line_no, event_match.start(2) + 1))
        elif arc_match:
            if section == "meta":
                raise FrontSyntaxError(line_no, 1, "дуги должны предшествовать метаданным")
            section = "arc"
            _index(arc_match.group(1), len(arcs), line_no, arc_match.start(1) + 1)
            arcs.append(parse_word_at(surface, arc_match.group(2), line_no, arc_match.start(2) + 1))
        elif meta_match:
            section = "meta"
            meta.append((meta_match.group(1), meta_match.group(2)))
        else:
            raise FrontSyntaxError(line_no, 1, f"нераспознанная строка '{line.strip()}'")

    code = FrontCode(surface, tuple(events), tuple(arcs), tuple(sorted(meta)))
    if check:
        report = validate(code)
        if not report.ok:
            first = report.violations[0]
            raise SemanticError(f"{first.kind}: {first.message}", report)
    logger.debug(f"разобран фронт на {surface.describe()}: {len(events)} событий")
    return code


def _format_event(event: Event) -> str:
    if isinstance(event, DoublePoint):
        return f"D {event.id} {event.slot.value} {event.xtype.value}"
    signs = {1: "+", -1: "-"}
    return f"C {signs[event.maslov_sign]} {signs[event.rotation_sign]}"


def serialize_front(code: FrontCode) -> str:
    lines = [HEADER, f"surface {code.surface.describe()}"]
    lines += [f"event {i}: {_format_event(e)}" for i, e in enumerate(code.events)]
    lines += [f"arc {i}: {gc.format_word(a)}" for i, a in enumerate(code.arcs)]
    lines += [f"meta {k}={v}" for k, v in sorted(code.meta)]
    return "\n".join(lines) + "\n"


def read_front_file(path: str, check: bool = True) -> FrontCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_front_file(fh.read(), check)
