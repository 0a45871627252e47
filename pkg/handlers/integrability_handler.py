"""Команда check-integrability: локальная интегрируемость χ′ и вердикт по компоненте."""
import argparse
import logging

from handlers.report import EXIT_DOMAIN, Report, delta_text
from services.errors import FrontSyntaxError
from services.front_format import read_front_file
from services.integrator import check_local_integrability, derivative_verdict
from services.key_format import parse_key
from services.psi_table import parse_event_list, parse_psi_table
from services.surfaces import SurfaceSpec

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("check-integrability", help="проверить, что χ′ - производная инварианта")
    parser.add_argument("--psi", required=True, help="таблица χ′")
    parser.add_argument("--surface", help="поверхность, если образец не задан")
    parser.add_argument("--sample", help="фронт из проверяемой компоненты")
    parser.add_argument("--gamma2", help="список событий подъема γ₂ (бутылка Клейна)")
    parser.add_argument("--witness", action="append", default=[], help="дополнительный ключ-свидетель")
    parser.add_argument("--refined", action="store_true", help="уточненные ключи событий")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> Report:
    sample = read_front_file(args.sample) if args.sample else None
    if sample is not None:
        surface = sample.surface
    elif args.surface:
        try:
            surface = SurfaceSpec.parse(args.surface)
        except ValueError as e:
            raise FrontSyntaxError(1, 1, str(e)) from None
    else:
        raise FrontSyntaxError(1, 1, "нужен --sample или --surface")

    with open(args.psi, "r", encoding="utf-8") as fh:
        chi = parse_psi_table(surface, fh.read())
    try:
        witnesses = [parse_key(surface, w) for w in args.witness]
    except ValueError as e:
        raise FrontSyntaxError(1, 1, str(e)) from None
    gamma2 = None
    if args.gamma2:
        with open(args.gamma2, "r", encoding="utf-8") as fh:
            gamma2 = parse_event_list(surface, fh.read())

    report = Report("check-integrability")
    if sample is None:
        local = check_local_integrability(chi, witnesses)
        ok = local.ok
    else:
        result = derivative_verdict(chi, sample, gamma2, refined=args.refined, witnesses=witnesses)
        local, ok = result.local, result.ok
        verdict = result.verdict
        report.add("case", verdict.case)
        report.add("verdict", verdict.label)
        for name, value in sorted(verdict.deltas.items()):
            report.add(f"delta_{name}", delta_text(value))
        if result.gamma3 is not None:
            report.add("delta_gamma3", delta_text(result.gamma3))

    report.data["checked"] = {kind.value: n for kind, n in local.checked.items()}
    report.lines += [f"checked {kind.value}: {n}" for kind, n in local.checked.items()]
    failures = []
    for kind, keys, delta in local.failures:
        text = f"{kind.value} [{', '.join(str(k) for k in keys)}] delta {delta_text(delta)}"
        failures.append(text)
        report.lines.append(f"fail {text}")
    report.data["failures"] = failures
    report.add("result", "pass" if ok else "fail")
    if not ok:
        report.status = EXIT_DOMAIN
        logger.info("χ′ не прошла проверку интегрируемости")
    return report
