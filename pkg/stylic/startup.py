"""
Модуль для выполнения проверок при запуске приложения.
"""
import logging
import sys

from stylic.monoid import get_monoid
from stylic.quiver import Edge, build_quiver

logger = logging.getLogger(__name__)

EXPECTED_SIZES = {1: 2, 2: 5}


def self_check() -> None:
    """
    Проверяет |Styl(1)| = 2, |Styl(2)| = 5 и единственное ребро a -b-> b колчана Q(2).

    При неудаче выводит критическую ошибку и завершает работу с кодом 1.
    """
    logger.info("Самопроверка при запуске...")
    problems = []
    for n, expected in EXPECTED_SIZES.items():
        size = len(get_monoid(n))
        if size != expected:
            problems.append(f"|Styl({n})| = {size}, ожидалось {expected}")
    edges = build_quiver(2).edges
    if edges != [Edge(0b01, 2, 0b10)]:
        problems.append(f"Колчан Q(2) имеет ребра {edges}")

    if not problems:
        logger.info("Самопроверка пройдена.")
        return

    logger.critical("=" * 80)
    logger.critical("!!! КРИТИЧЕСКАЯ ОШИБКА ПРИ ЗАПУСКЕ !!!")
    for problem in problems:
        logger.critical(f"Ошибка: {problem}")
    logger.critical("Приложение будет остановлено.")
    logger.critical("=" * 80)
    # Завершаем работу приложения с кодом ошибки
    sys.exit(1)
