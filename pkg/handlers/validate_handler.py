"""Команда validate: проверка файлов фронтов, в том числе пакетом."""
import argparse
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Tuple

from handlers.report import EXIT_DOMAIN, EXIT_FORMAT, Report
from services import group_core as gc
from services.errors import FormatError
from services.front_code import global_class, indices, normalized, validate
from services.front_format import read_front_file, serialize_front

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("validate", help="проверить файлы фронтов")
    parser.add_argument("files", nargs="+", help="файлы frontcode v1")
    parser.add_argument("--jobs", type=int, default=1, help="число параллельных задач")
    parser.add_argument("--print", dest="show", action="store_true", help="напечатать нормализованный код")
    parser.set_defaults(handler=handle)


def check_file(path: str, show: bool = False) -> Tuple[int, Dict[str, Any]]:
    """Проверяет один файл; возвращает (код выхода, данные отчета)."""
    try:
        code = read_front_file(path, check=False)
    except FormatError as e:
        logger.info(f"Файл {path} не разобран: {e}")
        return EXIT_FORMAT, {"error": str(e)}

    result = validate(code)
    data: Dict[str, Any] = {
        "ok": result.ok,
        "violations": [f"{v.kind}@{v.index}: {v.message}" if v.index is not None else f"{v.kind}: {v.message}" for v in result.violations],
        "double_points": code.double_point_count,
        "cusps": code.cusp_count,
    }
    if result.ok:
        maslov, whitney = indices(code)
        data["maslov"] = maslov
        data["whitney"] = whitney
        data["global_class"] = gc.format_word(global_class(code))
        if show:
            data["code"] = serialize_front(normalized(code))
    return (0 if result.ok else EXIT_DOMAIN), data


def handle(args: argparse.Namespace) -> Report:
    report = Report("validate")
    jobs = max(1, args.jobs)
    # порядок результатов совпадает с порядком файлов
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(lambda p: check_file(p, args.show), args.files))

    for path, (status, data) in zip(args.files, results):
        report.data[path] = data
        report.status = max(report.status, status)
        if "error" in data:
            report.lines.append(f"{path}: error {data['error']}")
            continue
        verdict = "ok" if data["ok"] else "invalid"
        report.lines.append(
            f"{path}: {verdict} (double points {data['double_points']}, cusps {data['cusps']})"
        )
        report.lines += [f"  {v}" for v in data["violations"]]
        if data["ok"]:
            whitney = "-" if data["whitney"] is None else data["whitney"]
            report.lines.append(f"  maslov {data['maslov']}, whitney {whitney}, l = {data['global_class']}")
        if "code" in data:
            report.lines += ["  " + line for line in data["code"].splitlines()]
    logger.info(f"Проверено файлов: {len(args.files)}")
    return report
