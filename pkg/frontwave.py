"""Точка входа командной строки frontwave."""
import argparse
import logging
import sys
from typing import List, Optional

import config
from handlers import (
    classes_handler,
    homotopy_handler,
    integrability_handler,
    integrate_handler,
    invariants_handler,
    iplus_handler,
    validate_handler,
)
from handlers.report import EXIT_DOMAIN, EXIT_FORMAT, render
from services.errors import FormatError, FrontwaveError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging() -> None:
    """stdout занят отчетами, поэтому журнал идет в stderr и, если задан, в файл."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.LOG_FILE:
        handlers.append(logging.FileHandler(config.LOG_FILE, encoding="utf-8"))
    logging.basicConfig(level=config.LOG_LEVEL, format=LOG_FORMAT, handlers=handlers)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frontwave",
        description="Инварианты Арнольда для фронтов на поверхностях",
    )
    parser.add_argument("--json", action="store_true", help="отчет в формате JSON")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Регистрация команд
    validate_handler.register(subparsers)
    invariants_handler.register(subparsers)
    iplus_handler.register(subparsers)
    classes_handler.register(subparsers)
    integrate_handler.register(subparsers)
    integrability_handler.register(subparsers)
    homotopy_handler.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_FORMAT if e.code else 0

    try:
        report = args.handler(args)
    except FormatError as e:
        logger.error(f"Ошибка формата: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FORMAT
    except FrontwaveError as e:
        logger.error(f"Ошибка вычисления: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        logger.error(f"Не удалось прочитать файл: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FORMAT
    except Exception as e:
        logger.error(f"Непредвиденная ошибка: {e}", exc_info=True)
        return EXIT_DOMAIN

    sys.stdout.write(render(report, args.json))
    return report.status


if __name__ == "__main__":
    setup_logging()
    sys.exit(main())
