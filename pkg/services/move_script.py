"""Сценарии ходов: `<страт> <+|-> site=<i,j,...> [witness=..] [direct=..] [triangle=..] [rotation=..]`."""
import logging
import re
from typing import Dict, List, Sequence, Tuple

from services import group_core as gc
from services.errors import FrontSyntaxError, FrontwaveError
from services.front_code import FrontCode
from services.strata_moves import CrossingEvent, MoveSpec, Stratum, TriangleData, apply_move
from services.surfaces import SurfaceSpec

logger = logging.getLogger(__name__)

STRATUM_ALIASES = {
    "Lambda": Stratum.LAMBDA,
    "L": Stratum.LAMBDA,
    "Kplus": Stratum.KPLUS,
    "K+": Stratum.KPLUS,
    "Kminus": Stratum.KMINUS,
    "K-": Stratum.KMINUS,
    "T": Stratum.T,
    "Pi": Stratum.PI,
}

_OPTION = re.compile(r"(\w+)=")
_KNOWN = {"site", "witness", "direct", "triangle", "rotation"}


def parse_stratum(token: str, line_no: int, col: int) -> Stratum:
    try:
        return STRATUM_ALIASES[token]
    except KeyError:
        raise FrontSyntaxError(line_no, col, f"неизвестный страт '{token}'") from None


def parse_sign(token: str, line_no: int, col: int) -> int:
    if token in ("+", "-"):
        return 1 if token == "+" else -1
    raise FrontSyntaxError(line_no, col, f"знак должен быть + или -, получено '{token}'")


def _options(text: str, offset: int, line_no: int) -> Dict[str, Tuple[str, int]]:
    """name=value; значение тянется до следующего name=."""
    found = list(_OPTION.finditer(text))
    if found and text[: found[0].start()].strip():
        raise FrontSyntaxError(line_no, offset + 1, f"ожидается name=value, получено '{text.strip()}'")
    if not found and text.strip():
        raise FrontSyntaxError(line_no, offset + 1, f"ожидается name=value, получено '{text.strip()}'")
    options: Dict[str, Tuple[str, int]] = {}
    for n, match in enumerate(found):
        name = match.group(1)
        col = offset + match.start() + 1
        if name not in _KNOWN:
            raise FrontSyntaxError(line_no, col, f"неизвестный параметр '{name}'")
        if name in options:
            raise FrontSyntaxError(line_no, col, f"параметр '{name}' повторяется")
        end = found[n + 1].start() if n + 1 < len(found) else len(text)
        options[name] = (text[match.end() : end].strip(), offset + match.end() + 1)
    return options


def parse_move_line(surface: SurfaceSpec, line: str, line_no: int) -> MoveSpec:
    parts = line.split(None, 2)
    if len(parts) < 2:
        raise FrontSyntaxError(line_no, 1, "ожидается '<страт> <+|-> site=...'")
    stratum = parse_stratum(parts[0], line_no, line.index(parts[0]) + 1)
    sign_col = line.index(parts[1], len(parts[0])) + 1
    sign = parse_sign(parts[1], line_no, sign_col)
    rest_start = sign_col + len(parts[1]) - 1
    options = _options(line[rest_start:], rest_start, line_no)

    if "site" not in options:
        raise FrontSyntaxError(line_no, 1, "параметр site= обязателен")
    site_text, site_col = options["site"]
    try:
        site = tuple(int(x) for x in site_text.split(","))
    except ValueError:
        raise FrontSyntaxError(line_no, site_col, f"site должен быть списком целых, получено '{site_text}'") from None

    witness = None
    if "witness" in options:
        text, col = options["witness"]
        try:
            witness = tuple(gc.parse_word(surface, w.strip(), gc.Ambient.STF) for w in text.split("|"))
        except FrontwaveError as exc:
            raise FrontSyntaxError(line_no, col, str(exc)) from None

    direct = True
    if "direct" in options:
        text, col = options["direct"]
        if text not in ("yes", "no"):
            raise FrontSyntaxError(line_no, col, "direct должен быть yes или no")
        direct = text == "yes"

    triangle = None
    if "triangle" in options:
        text, col = options["triangle"]
        if len(text) != 3 or set(text) - {"m", "x"}:
            raise FrontSyntaxError(line_no, col, "triangle - три символа из {m, x}")
        triangle = TriangleData(tuple(ch == "m" for ch in text))

    rotation = 1
    if "rotation" in options:
        text, col = options["rotation"]
        rotation = parse_sign(text, line_no, col)

    return MoveSpec(stratum, sign, site, witness, direct, triangle, rotation)


def parse_move_script(surface: SurfaceSpec, text: str) -> List[MoveSpec]:
    moves: List[MoveSpec] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            moves.append(parse_move_line(surface, line, line_no))
    return moves


def run_script(code: FrontCode, moves: Sequence[MoveSpec], refined: bool = False) -> Tuple[FrontCode, List[CrossingEvent]]:
    """Последовательно применяет ходы; возвращает итоговый код и путь событий."""
    events: List[CrossingEvent] = []
    for n, move in enumerate(moves, start=1):
        try:
            code, event = apply_move(code, move, refined=refined)
        except FrontwaveError:
            logger.info(f"ход {n} сценария не применим")
            raise
        events.append(event)
    return code, events
