"""Команда homotopy: π₁ и πₙ пространства фронтов, π₁(CSTF) и сверка с централизатором."""
import argparse
import logging
from typing import Dict, Optional

from handlers.report import EXIT_DOMAIN, Report
from services import group_core as gc
from services.errors import FrontSyntaxError, FrontwaveError, SemanticError
from services.front_code import global_class
from services.front_format import read_front_file
from services.homotopy import (
    FrontClassData,
    centralizer_consistency,
    front_class_data,
    pi1_cstf_descriptor,
    pi1_front_space,
    pi_n_front_space,
)
from services.surfaces import SurfaceKind, SurfaceSpec

logger = logging.getLogger(__name__)

_FLAG_NAMES = ("preserving", "base_trivial", "stf_trivial", "klein_square", "root_square")

# для этих поверхностей ответ не зависит от фронта
_FRONT_FREE = {SurfaceKind.SPHERE, SurfaceKind.PROJECTIVE_PLANE, SurfaceKind.TORUS}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("homotopy", help="гомотопические группы пространства фронтов")
    parser.add_argument("--surface", required=True, help="поверхность, например 'klein'")
    parser.add_argument("query", choices=["pi1", "pin", "cstf", "centralizer"])
    parser.add_argument("--n", type=int, default=2, help="размерность для pin")
    parser.add_argument("--front", help="файл фронта")
    parser.add_argument("--word", help="глобальный класс l в π₁(STF)")
    parser.add_argument("--flags", help="флаги класса: preserving=yes,base_trivial=no,...")
    parser.set_defaults(handler=handle)


def parse_flags(text: Optional[str]) -> Optional[FrontClassData]:
    if not text:
        return None
    values: Dict[str, bool] = {}
    for item in text.split(","):
        name, sep, value = item.strip().partition("=")
        if not sep or name not in _FLAG_NAMES or value not in ("yes", "no"):
            raise FrontSyntaxError(1, 1, f"некорректный флаг '{item.strip()}'")
        values[name] = value == "yes"
    if "preserving" not in values or "base_trivial" not in values:
        raise FrontSyntaxError(1, 1, "флаги preserving и base_trivial обязательны")
    return FrontClassData(**values)


def handle(args: argparse.Namespace) -> Report:
    try:
        surface = SurfaceSpec.parse(args.surface)
    except ValueError as e:
        raise FrontSyntaxError(1, 1, str(e)) from None
    report = Report("homotopy")
    report.add("surface", surface.describe())

    if args.query == "pin":
        if args.n < 2:
            raise FrontSyntaxError(1, 1, "--n должно быть не меньше 2")
        report.add(f"pi{args.n}", str(pi_n_front_space(surface, args.n)))
        return report
    if args.query == "cstf":
        report.add("pi1_cstf", str(pi1_cstf_descriptor(surface)))
        return report

    source = None
    if args.front:
        source = read_front_file(args.front)
        if source.surface != surface:
            raise SemanticError("поверхность файла не совпадает с --surface")
    elif args.word:
        try:
            source = gc.parse_word(surface, args.word)
        except FrontwaveError as e:
            raise FrontSyntaxError(1, 1, str(e)) from None
    asserted = parse_flags(args.flags)

    if args.query == "centralizer":
        if source is None:
            raise SemanticError("для centralizer нужен --front или --word")
        l = source if isinstance(source, gc.GroupElem) else global_class(source)
        result = centralizer_consistency(surface, l)
        report.add("pi1", str(result.descriptor))
        report.add("z_plus_centralizer", str(result.centralizer))
        report.add("consistent", result.consistent, "yes" if result.consistent else "no")
        if not result.consistent:
            report.status = EXIT_DOMAIN
        return report

    if source is not None:
        data = front_class_data(source, asserted)
    elif asserted is not None:
        data = asserted
    elif surface.kind in _FRONT_FREE:
        data = FrontClassData(preserving=True, base_trivial=True)
    else:
        raise SemanticError("нужен --front, --word или --flags")
    report.add("pi1", str(pi1_front_space(surface, data)))
    logger.info(f"π₁ пространства фронтов на {surface.describe()} вычислена")
    return report
