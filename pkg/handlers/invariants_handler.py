"""Команда invariants: плоские St′, J⁺, J⁻ на стандартных фронтах и вдоль ходов."""
import argparse
import logging
from typing import Tuple

from handlers.report import Report, event_text, half
from services.errors import FrontSyntaxError
from services.front_code import StandardFrontId, standard_code
from services.invariants import Invariant, planar_base_value, planar_invariant
from services.move_script import parse_move_script, run_script

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("invariants", help="плоские инварианты Арнольда")
    parser.add_argument("--inv", required=True, choices=[i.value for i in Invariant])
    parser.add_argument("--base", required=True, help="стандартный фронт K_{ω,k} в виде ω,k")
    parser.add_argument("--moves", help="сценарий ходов от стандартного фронта")
    parser.set_defaults(handler=handle)


def parse_base(text: str) -> Tuple[int, int]:
    try:
        omega, k = (int(x) for x in text.split(","))
    except ValueError:
        raise FrontSyntaxError(1, 1, f"--base ожидает ω,k, получено '{text}'") from None
    return omega, k


def handle(args: argparse.Namespace) -> Report:
    omega, k = parse_base(args.base)
    try:
        front = StandardFrontId(omega, k)
    except ValueError as e:
        raise FrontSyntaxError(1, 1, str(e)) from None
    inv = Invariant(args.inv)
    report = Report("invariants")
    report.add("invariant", inv.value)
    report.add("base", f"K_{{{omega},{k}}}")
    report.add("base_value", half(planar_base_value(inv, front)))

    path = []
    if args.moves:
        code = standard_code(omega, k)
        with open(args.moves, "r", encoding="utf-8") as fh:
            moves = parse_move_script(code.surface, fh.read())
        _, path = run_script(code, moves)
        report.data["path"] = [event_text(e) for e in path]
        report.lines += [f"  {event_text(e)}" for e in path]
    report.add("value", half(planar_invariant(inv, front, path)))
    logger.info(f"Вычислен {inv.value} для K_{omega},{k}")
    return report
