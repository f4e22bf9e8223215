"""
Модуль для вспомогательных функций и настройки логирования.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

from stylic.config import get_settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: Optional[str] = None, log_file: Optional[Path] = None) -> None:
    """
    Настраивает корневой логгер: консоль (stderr) и, если задан, файл.
    Повторный вызов не добавляет обработчики повторно, а только меняет уровень.

    Аргументы:
        level (Optional[str]): Уровень логирования; по умолчанию STYLIC_LOG_LEVEL.
        log_file (Optional[Path]): Файл логов; по умолчанию STYLIC_LOG_FILE.
    """
    settings = get_settings()
    level = (level or settings.STYLIC_LOG_LEVEL).upper()
    if log_file is None and settings.STYLIC_LOG_FILE:
        log_file = Path(settings.STYLIC_LOG_FILE)

    logger = logging.getLogger()
    logger.setLevel(level)
    formatter = logging.Formatter(LOG_FORMAT)

    # Консольный хендлер
    if not any(getattr(h, "_stylic_console", False) for h in logger.handlers):
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        console_handler._stylic_console = True  # type: ignore[attr-defined]
        logger.addHandler(console_handler)

    # Файловый хендлер
    if log_file is not None:
        target = str(Path(log_file).resolve())
        known = [h for h in logger.handlers if isinstance(h, logging.FileHandler)]
        if not any(h.baseFilename == target for h in known):
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    for handler in logger.handlers:
        handler.setLevel(level)
    logger.debug("Логирование настроено.")
