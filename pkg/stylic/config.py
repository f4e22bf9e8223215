"""
Модуль для загрузки и валидации конфигурации проекта.
Использует Pydantic для чтения переменных окружения и файла .env.
"""
from typing import ClassVar, Optional
from functools import lru_cache

from pydantic import Field, field_validator, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class Settings(BaseSettings):
    """
    Класс для хранения и валидации настроек.
    Загружает переменные из окружения и .env файла.

    Атрибуты:
        STYLIC_THREADS (int): Ограничение числа потоков (0 - автоматически).
        STYLIC_MULT_TABLE_BUDGET (int): Максимальное число ячеек таблицы умножения,
            которую разрешено хранить в памяти.
        STYLIC_SEED (int): Зерно для рандомизированных проверок.
        STYLIC_LOG_LEVEL (str): Уровень логирования.
        STYLIC_LOG_FILE (Optional[str]): Путь к файлу логов.
        STYLIC_API_MAX_N (int): Наибольший размер алфавита, доступный через HTTP API.
    """
    model_config: ClassVar[SettingsConfigDict] = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    STYLIC_THREADS: int = Field(0, description="Число потоков, 0 - автоматически")
    STYLIC_MULT_TABLE_BUDGET: int = Field(1_000_000, description="Лимит ячеек таблицы умножения")
    STYLIC_SEED: int = Field(20240611, description="Зерно для рандомизированных проверок")
    STYLIC_LOG_LEVEL: str = Field("INFO", description="Уровень логирования")
    STYLIC_LOG_FILE: Optional[str] = Field(None, description="Путь к файлу логов")
    STYLIC_API_MAX_N: int = Field(4, description="Наибольшее n для HTTP API")

    @field_validator("STYLIC_THREADS")
    def validate_threads(cls, value: int) -> int:
        if value < 0:
            raise ValueError("Число потоков не может быть отрицательным")
        return value

    @field_validator("STYLIC_MULT_TABLE_BUDGET")
    def validate_budget(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("Лимит таблицы умножения должен быть положительным")
        return value

    @field_validator("STYLIC_LOG_LEVEL")
    def validate_log_level(cls, value: str) -> str:
        """
        Валидирует уровень логирования.

        Исключения:
            ValueError: Если уровень не входит в DEBUG, INFO, WARNING, ERROR.
        """
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Уровень логирования должен быть одним из {', '.join(LOG_LEVELS)}")
        return level

    @field_validator("STYLIC_API_MAX_N")
    def validate_api_max_n(cls, value: int) -> int:
        if not 1 <= value <= 6:
            raise ValueError("STYLIC_API_MAX_N должен лежать в диапазоне 1..6")
        return value

@lru_cache()
def get_settings() -> Settings:
    """
    Фабричная функция для создания и получения экземпляра настроек.
    Использует кэширование, чтобы избежать многократного чтения .env файла.

    Возвращает:
        Settings: Экземпляр настроек.

    Исключения:
        ValueError: При ошибке валидации переменных окружения, с перечнем всех ошибок.
    """
    try:
        return Settings()

    except ValidationError as e:
        # Формируем более читабельное сообщение об ошибке
        error_messages = []
        for error in e.errors():
            field = ".".join(map(str, error["loc"]))
            message = error["msg"]
            error_messages.append(f"  - Переменная '{field}': {message}")

        raise ValueError(
            "Ошибка валидации конфигурации:\n" + "\n".join(error_messages)
        ) from e


def resolve_threads(settings: Settings) -> Optional[int]:
    """Число рабочих потоков для пула; None означает выбор по числу ядер."""
    return settings.STYLIC_THREADS or None
