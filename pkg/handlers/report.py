"""Отчеты команд: текстовый вид и JSON."""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from services.integrator import DeltaValue
from services.strata_moves import CrossingEvent

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_FORMAT = 2


@dataclass
class Report:
    command: str
    data: Dict[str, Any] = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)
    status: int = EXIT_OK

    def add(self, key: str, value: Any, text: Optional[str] = None) -> None:
        self.data[key] = value
        self.lines.append(f"{key}: {value if text is None else text}")


def half(doubled: int) -> str:
    """Удвоенное целое как точная дробь: 3 → 3/2."""
    return str(Fraction(doubled, 2))


def delta_text(value: DeltaValue) -> str:
    return ",".join(half(x) for x in value.doubled)


def event_text(event: CrossingEvent) -> str:
    sign = "+" if event.sign > 0 else "-"
    return f"{event.stratum.value} {sign} {event.key}"


def events_data(events: Sequence[CrossingEvent]) -> List[str]:
    return [event_text(e) for e in events]


def render(report: Report, as_json: bool = False) -> str:
    if as_json:
        payload = {"command": report.command, "status": report.status, **report.data}
        return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n"
    return "\n".join([f"# {report.command}"] + report.lines) + "\n"
