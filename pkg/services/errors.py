"""Исключения доменного слоя."""
from typing import Optional


class FrontwaveError(Exception):
    """Базовая ошибка вычислений (код выхода 1)."""


class AmbientMismatch(FrontwaveError):
    """Элементы лежат в разных группах или над разными поверхностями."""


class UnsupportedSurface(FrontwaveError):
    """Для поверхности нет реализованной процедуры."""


class TrivialElement(FrontwaveError):
    """Операция не определена для единичного элемента."""


class InvalidElement(FrontwaveError):
    """Слово содержит образующую, которой нет в группе."""


class UnknownDoublePoint(FrontwaveError):
    """Двойной точки с таким идентификатором нет в коде фронта."""


class InconsistentSite(FrontwaveError):
    """Свидетель хода не совпадает с метками дуг в месте хода."""


class InvalidMove(FrontwaveError):
    """Ход нельзя применить к данному коду."""


class UnsupportedLoop(FrontwaveError):
    """Петля не определена для данной компоненты."""


class KeySpaceMismatch(FrontwaveError):
    """Ключи событий и таблица весов из разных пространств классов."""


class ParityViolation(FrontwaveError):
    """Индекс Маслова нарушает правило четности уточненного класса."""


class WrongParity(FrontwaveError):
    """Элемент π₁(PTF) не лежит в π₁⁻(PTF)."""


class FlagMismatch(FrontwaveError):
    """Явно заданные флаги противоречат вычисленным по классу."""


class FormatError(Exception):
    """Базовая ошибка разбора текстовых форматов (код выхода 2)."""


class FrontSyntaxError(FormatError):
    """Синтаксическая ошибка с позицией."""

    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"строка {line}, столбец {col}: {message}")


class SemanticError(FormatError):
    """Файл разобран, но код фронта не прошел проверку."""

    def __init__(self, message: str, report: Optional[object] = None):
        self.report = report
        super().__init__(message)
