"""
Исключения проекта. Каждый слой выбрасывает собственный подкласс `StylicError`.
"""


class StylicError(Exception):
    """Базовое исключение проекта."""
    pass


class AlphabetError(StylicError):
    """Буква или столбец вне алфавита."""
    pass


class TableauError(StylicError):
    """Последовательность столбцов не является таблицей."""
    pass


class MonoidError(StylicError):
    """Ошибка при работе с элементами моноида."""
    pass


class AlgebraError(StylicError):
    """Нарушение треугольности, унимодулярности или смешение разных моноидов."""
    pass


class QuiverError(StylicError):
    """Слово не задает путь в колчане или путь некорректен."""
    pass


class CartanError(StylicError):
    """Несовпадение рангов при проверке базисов проективных модулей."""
    pass
