"""Команда classes: канонизация литералов ключей и классы двойных точек фронта."""
import argparse
import logging

from handlers.report import Report
from services.classes import KeyFamily, g_map, order_index
from services.errors import FrontSyntaxError, KeySpaceMismatch
from services.front_code import indices, loop_pair_at
from services.front_format import read_front_file
from services.key_format import parse_key
from services.strata_moves import kminus_event_key, kplus_event_key
from services.surfaces import SurfaceSpec

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("classes", help="ключи классов K±, T, Π")
    parser.add_argument("front", nargs="?", help="файл frontcode v1: классы двойных точек")
    parser.add_argument("--surface", help="поверхность для --key, например 'closed genus=2'")
    parser.add_argument("--key", help="литерал ключа для канонизации")
    parser.add_argument("--g-map", dest="g_map", action="store_true", help="образ Πᵢ-ключа в Tᵢ")
    parser.add_argument("--order-with", dest="order_with", help="второй K⁺-ключ для номера в слое")
    parser.add_argument("--refined", action="store_true", help="уточненные ключи для фронта")
    parser.set_defaults(handler=handle)


def _literal(surface: SurfaceSpec, text: str):
    try:
        return parse_key(surface, text)
    except ValueError as e:
        raise FrontSyntaxError(1, 1, str(e)) from None


def handle(args: argparse.Namespace) -> Report:
    report = Report("classes")
    if args.key:
        if not args.surface:
            raise FrontSyntaxError(1, 1, "для --key нужен --surface")
        try:
            surface = SurfaceSpec.parse(args.surface)
        except ValueError as e:
            raise FrontSyntaxError(1, 1, str(e)) from None
        key = _literal(surface, args.key)
        report.add("key", str(key))
        if not key.certified:
            logger.warning(f"Ключ {key} не сертифицирован: поиск ограничен радиусом")
        if args.g_map:
            if key.family != KeyFamily.PI_I:
                raise KeySpaceMismatch("--g-map применим только к ключам Pi")
            report.add("g_map", str(g_map(key)))
        if args.order_with:
            other = _literal(surface, args.order_with)
            index = order_index(key, other)
            report.add("order_index", index, "-" if index is None else str(index))
        return report

    if not args.front:
        raise FrontSyntaxError(1, 1, "нужен файл фронта или --key")
    code = read_front_file(args.front)
    report.add("maslov", indices(code)[0])
    for dp_id in code.double_point_ids:
        a, b = loop_pair_at(code, dp_id)
        plus = kplus_event_key(code, a, b, refined=args.refined)
        report.data[f"D{dp_id}"] = {"Kplus": str(plus)}
        report.lines.append(f"D{dp_id}: {plus}")
        if code.surface.orientable:
            minus = kminus_event_key(code, a, b, refined=args.refined)
            report.data[f"D{dp_id}"]["Kminus"] = str(minus)
            report.lines.append(f"D{dp_id}: {minus}")
    return report
