"""Команда iplus: инвариант I⁺ и его изменение вдоль сценария ходов."""
import argparse
import logging

from handlers.report import EXIT_DOMAIN, Report, event_text
from services.front_format import read_front_file
from services.invariants import iplus, order_one_check
from services.move_script import parse_move_script, run_script

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("iplus", help="инвариант I⁺ фронта")
    parser.add_argument("front", help="файл frontcode v1")
    parser.add_argument("--moves", help="сценарий ходов; печатается I⁺ до и после")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> Report:
    code = read_front_file(args.front)
    report = Report("iplus")
    before = iplus(code)
    report.data["iplus"] = before.lines()
    report.lines.append("iplus:")
    report.lines += [f"  {line}" for line in before.lines()] or ["  0"]
    if not args.moves:
        return report

    with open(args.moves, "r", encoding="utf-8") as fh:
        moves = parse_move_script(code.surface, fh.read())
    after_code, path = run_script(code, moves)
    after = iplus(after_code)
    check = order_one_check(path, code, after_code)
    report.data["path"] = [event_text(e) for e in path]
    report.data["iplus_after"] = after.lines()
    report.data["difference"] = (after - before).lines()
    report.data["jump_law"] = check.predicted_matches
    report.lines.append("path:")
    report.lines += [f"  {event_text(e)}" for e in path]
    report.lines.append("iplus after:")
    report.lines += [f"  {line}" for line in after.lines()] or ["  0"]
    report.lines.append("difference:")
    report.lines += [f"  {line}" for line in (after - before).lines()] or ["  0"]
    report.lines.append(f"jump law: {'ok' if check.predicted_matches else 'violated'}")
    if not check.ok:
        logger.warning("I⁺ не согласован со скачками вдоль сценария")
        report.status = EXIT_DOMAIN
    return report
