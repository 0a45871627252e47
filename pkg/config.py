"""Конфигурация вычислений frontwave."""
import os
from typing import Optional

from dotenv import load_dotenv

# Загружаем переменные окружения из .env файла
load_dotenv()


def _int_env(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} должна быть целым числом, получено '{raw}'.") from None


# Общий радиус поиска переопределяет оба радиуса ниже; пустое значение - не задан
SEARCH_RADIUS: Optional[int] = _int_env("FRONTWAVE_SEARCH_RADIUS", None)

# Глубина замыкания циклических слов при проверке сопряженности
CONJUGACY_SEARCH_RADIUS: int = SEARCH_RADIUS if SEARCH_RADIUS is not None else 12

# Окно степеней корня при канонизации ключей классов
CLASS_SEARCH_RADIUS: int = SEARCH_RADIUS if SEARCH_RADIUS is not None else 16

# Максимальное число слов в замыкании
CLOSURE_LIMIT: int = _int_env("FRONTWAVE_CLOSURE_LIMIT", 4000)

# Логирование: уровень и необязательный файл
LOG_LEVEL: str = os.getenv("FRONTWAVE_LOG_LEVEL", "WARNING").upper()
LOG_FILE: str = os.getenv("FRONTWAVE_LOG_FILE", "")

# Проверка значений
if CONJUGACY_SEARCH_RADIUS < 1 or CLASS_SEARCH_RADIUS < 1:
    raise ValueError("FRONTWAVE_SEARCH_RADIUS должен быть положительным.")

if CLOSURE_LIMIT < 1:
    raise ValueError("FRONTWAVE_CLOSURE_LIMIT должен быть положительным.")

if LOG_LEVEL not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
    raise ValueError("FRONTWAVE_LOG_LEVEL должен быть одним из DEBUG, INFO, WARNING, ERROR, CRITICAL.")
