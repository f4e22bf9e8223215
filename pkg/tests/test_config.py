"""
Тесты для модуля конфигурации `stylic.config`.
"""
import os
import pytest
from typing import Generator

ENV_KEYS = [
    "STYLIC_THREADS",
    "STYLIC_MULT_TABLE_BUDGET",
    "STYLIC_SEED",
    "STYLIC_LOG_LEVEL",
    "STYLIC_LOG_FILE",
    "STYLIC_API_MAX_N",
]


@pytest.fixture(autouse=True)
def clear_env_vars(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """
    Фикстура для очистки переменных окружения, используемых в тестах,
    до и после каждого теста. Это обеспечивает изоляцию тестов.
    """
    original_values = {key: os.environ.get(key) for key in ENV_KEYS}

    # Очищаем переменные перед тестом
    for key in ENV_KEYS:
        if key in os.environ:
            del os.environ[key]

    # Очищаем кэш get_settings перед каждым тестом и не читаем .env
    from stylic import config
    monkeypatch.setitem(config.Settings.model_config, "env_file", None)
    config.get_settings.cache_clear()

    yield

    # Восстанавливаем исходные значения после теста
    for key, value in original_values.items():
        if value is not None:
            os.environ[key] = value
        elif key in os.environ:
            del os.environ[key]

    config.get_settings.cache_clear()


def test_default_settings() -> None:
    """
    Проверяет значения по умолчанию, если переменные окружения не заданы.
    """
    from stylic import config

    settings = config.get_settings()

    assert settings.STYLIC_THREADS == 0
    assert settings.STYLIC_MULT_TABLE_BUDGET == 1_000_000
    assert settings.STYLIC_SEED == 20240611
    assert settings.STYLIC_LOG_LEVEL == "INFO"
    assert settings.STYLIC_LOG_FILE is None
    assert settings.STYLIC_API_MAX_N == 4
    assert config.resolve_threads(settings) is None


def test_successful_config_loading(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    Проверяет успешную загрузку конфигурации при корректно
    заданных переменных окружения.

    Аргументы:
        monkeypatch (pytest.MonkeyPatch): Фикстура для установки переменных окружения.
    """
    monkeypatch.setenv("STYLIC_THREADS", "3")
    monkeypatch.setenv("STYLIC_SEED", "7")
    monkeypatch.setenv("STYLIC_LOG_LEVEL", "debug")
    monkeypatch.setenv("STYLIC_LOG_FILE", "/tmp/stylic.log")
    monkeypatch.setenv("STYLIC_API_MAX_N", "5")

    from stylic import config

    settings = config.get_settings()

    assert settings.STYLIC_THREADS == 3
    assert settings.STYLIC_SEED == 7
    assert settings.STYLIC_LOG_LEVEL == "DEBUG"
    assert settings.STYLIC_LOG_FILE == "/tmp/stylic.log"
    assert settings.STYLIC_API_MAX_N == 5
    assert config.resolve_threads(settings) == 3


@pytest.mark.parametrize(
    "key, value, error_message",
    [
        ("STYLIC_THREADS", "-1", "Переменная 'STYLIC_THREADS'"),
        ("STYLIC_MULT_TABLE_BUDGET", "0", "Лимит таблицы умножения должен быть положительным"),
        ("STYLIC_LOG_LEVEL", "verbose", "Уровень логирования должен быть одним из"),
        ("STYLIC_API_MAX_N", "7", "STYLIC_API_MAX_N должен лежать в диапазоне 1..6"),
        ("STYLIC_SEED", "not-a-number", "Переменная 'STYLIC_SEED'"),
    ],
)
def test_invalid_value_raises_error(
    monkeypatch: pytest.MonkeyPatch, key: str, value: str, error_message: str
) -> None:
    """
    Проверяет, что при некорректном значении выбрасывается ValueError
    с понятным сообщением.

    Аргументы:
        monkeypatch (pytest.MonkeyPatch): Фикстура для установки переменных окружения.
        key (str): Имя переменной.
        value (str): Некорректное значение.
        error_message (str): Ожидаемый фрагмент сообщения об ошибке.
    """
    monkeypatch.setenv(key, value)

    with pytest.raises(ValueError, match=error_message):
        from stylic import config
        config.get_settings()


def test_settings_are_cached() -> None:
    from stylic import config

    assert config.get_settings() is config.get_settings()
