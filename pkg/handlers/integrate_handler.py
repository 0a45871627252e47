"""Команда integrate: значение инварианта вдоль пути событий по таблице ψ."""
import argparse
import logging
from fractions import Fraction

from handlers.report import Report, delta_text, event_text
from services.errors import FrontSyntaxError
from services.front_format import read_front_file
from services.integrator import DeltaValue, delta_along, integrate_along
from services.move_script import parse_move_script, run_script
from services.psi_table import parse_psi_table

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("integrate", help="интегрировать ψ вдоль сценария ходов")
    parser.add_argument("front", help="начальный фронт")
    parser.add_argument("--moves", required=True, help="сценарий ходов")
    parser.add_argument("--psi", required=True, help="таблица весов ψ")
    parser.add_argument("--base", help="значение на начальном фронте, например 1/2 или 1,0")
    parser.add_argument("--refined", action="store_true", help="уточненные ключи событий")
    parser.set_defaults(handler=handle)


def parse_base(text: str, dim: int) -> DeltaValue:
    if text is None:
        return DeltaValue.zero(dim)
    try:
        values = [Fraction(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise FrontSyntaxError(1, 1, f"--base: некорректное значение '{text}'") from None
    doubled = [2 * v for v in values]
    if len(doubled) != dim or any(d.denominator != 1 for d in doubled):
        raise FrontSyntaxError(1, 1, f"--base должно иметь размерность {dim} и знаменатель 1 или 2")
    return DeltaValue(tuple(int(d) for d in doubled))


def handle(args: argparse.Namespace) -> Report:
    code = read_front_file(args.front)
    with open(args.psi, "r", encoding="utf-8") as fh:
        psi = parse_psi_table(code.surface, fh.read())
    with open(args.moves, "r", encoding="utf-8") as fh:
        moves = parse_move_script(code.surface, fh.read())
    base = parse_base(args.base, psi.dim)

    _, path = run_script(code, moves, refined=args.refined)
    report = Report("integrate")
    report.data["path"] = [event_text(e) for e in path]
    report.lines.append("path:")
    report.lines += [f"  {event_text(e)}" for e in path]
    report.add("base", delta_text(base))
    report.add("delta", delta_text(delta_along(path, psi)))
    report.add("value", delta_text(integrate_along(path, psi, base)))
    logger.info(f"Путь из {len(path)} событий проинтегрирован")
    return report
