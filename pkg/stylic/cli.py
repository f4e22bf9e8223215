"""
Модуль командной строки: перечисление моноида, идемпотенты, колчан,
матрица Картана и полный набор проверок.

Коды возврата: 0 - успех, 1 - проверка не прошла, 2 - неверная конфигурация.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import ClassVar, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from sympy import isprime

from stylic import __version__
from stylic.algebra import export_idempotents, idempotent, verify_idempotent_system
from stylic.cartan import cartan_combinatorial, cartan_linear
from stylic.config import get_settings
from stylic.models import CartanComparison, CheckResult
from stylic.monoid import get_monoid
from stylic.quiver import build_extended, build_quiver
from stylic.tableaux import p_symbol, render_french
from stylic.utils import setup_logging
from stylic.verify import format_report, run_suite

logger = logging.getLogger(__name__)

Command = Literal["enumerate", "idempotents", "quiver", "cartan", "verify"]
Format = Literal["dot", "json", "csv", "text"]

FORMATS: Dict[str, Tuple[str, ...]] = {
    "enumerate": ("json", "text"),
    "idempotents": ("json", "text"),
    "quiver": ("dot", "json"),
    "cartan": ("text", "csv", "json"),
    "verify": ("text", "json"),
}
GUARDED_COMMANDS = ("verify", "cartan")
GUARD_LIMIT = 6

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


class RunConfig(BaseModel):
    """
    Параметры одного запуска.

    Атрибуты:
        n (int): Размер алфавита.
        command (str): Команда.
        format (Optional[str]): Формат вывода; по умолчанию первый допустимый для команды.
        output (Optional[Path]): Файл результата; по умолчанию stdout.
        extended (bool): Строить расширенный колчан Q'(A).
        memoize_mult (bool): Хранить таблицу умножения.
        max_word_search_length (Optional[int]): Предел длины слов в поиске.
        seed (Optional[int]): Зерно случайных проверок; по умолчанию STYLIC_SEED.
        force (bool): Разрешить n > 6 для verify и cartan.
        characteristic (int): 0 или простое p для вычисления рангов.
    """
    model_config: ClassVar[ConfigDict] = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, le=16)
    command: Command
    format: Optional[Format] = None
    output: Optional[Path] = None
    extended: bool = False
    memoize_mult: bool = True
    max_word_search_length: Optional[int] = Field(None, ge=1)
    seed: Optional[int] = None
    force: bool = False
    characteristic: int = Field(0, ge=0)

    @field_validator("characteristic")
    def validate_characteristic(cls, value: int) -> int:
        if value != 0 and not isprime(value):
            raise ValueError("Характеристика должна быть 0 или простым числом")
        return value

    @model_validator(mode="after")
    def validate_command(self) -> "RunConfig":
        if self.command in GUARDED_COMMANDS and self.n > GUARD_LIMIT and not self.force:
            raise ValueError(f"n > {GUARD_LIMIT} для {self.command} требует --force")
        if self.format is not None and self.format not in FORMATS[self.command]:
            raise ValueError(
                f"Формат {self.format} не поддерживается командой {self.command}: "
                f"допустимы {', '.join(FORMATS[self.command])}"
            )
        return self

    @property
    def resolved_format(self) -> str:
        return self.format or FORMATS[self.command][0]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stylic",
        description="Стилический моноид: перечисление, идемпотенты, колчан, матрица Картана, проверки.",
    )
    parser.add_argument("command", choices=list(FORMATS), help="Команда")
    parser.add_argument("--n", type=int, required=True, help="Размер алфавита")
    parser.add_argument("--format", choices=["dot", "json", "csv", "text"], default=None)
    parser.add_argument("--output", type=Path, default=None, help="Файл результата (по умолчанию stdout)")
    parser.add_argument("--extended", action="store_true", help="Расширенный колчан Q'(A)")
    parser.add_argument("--memoize-mult", action=argparse.BooleanOptionalAction, default=True,
                        help="Хранить таблицу умножения")
    parser.add_argument("--max-word-search-length", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--force", action="store_true", help="Разрешить n > 6 для verify и cartan")
    parser.add_argument("--characteristic", type=int, default=0, help="0 или простое p")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _emit(config: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if config.output is None:
        sys.stdout.write(text)
    else:
        config.output.write_text(text, encoding="utf-8")
        logger.info(f"Результат записан в {config.output}")


def _report_table(checks: List[CheckResult]) -> str:
    width = max(len(c.name) for c in checks)
    return "\n".join(
        f"{c.name.ljust(width)}  {'PASS' if c.passed else 'FAIL  ' + str(c.witness)}" for c in checks
    )


def _print_failure(check: CheckResult) -> None:
    print(f"Контрпример в {check.name} (n={check.n}): {check.witness}", file=sys.stderr)


def run_enumerate(config: RunConfig) -> int:
    monoid = get_monoid(config.n, config.memoize_mult)
    if config.resolved_format == "json":
        _emit(config, monoid.to_export().model_dump_json(indent=2))
    else:
        # после строки "id<TAB>слово" - P-символ слова во французской нотации
        alphabet = monoid.alphabet
        blocks = [
            f"{x}\t{alphabet.word_name(word)}\n{render_french(p_symbol(word), alphabet)}"
            for x, word in enumerate(monoid.rep_words)
        ]
        _emit(config, "\n\n".join(blocks))
    print(f"|Styl({config.n})| = {len(monoid)}", file=sys.stderr)
    return EXIT_OK


def run_idempotents(config: RunConfig) -> int:
    monoid = get_monoid(config.n, config.memoize_mult)
    checks = verify_idempotent_system(monoid)
    if config.resolved_format == "json":
        payload = [item.model_dump() for item in export_idempotents(monoid)]
        _emit(config, json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        lines = [
            f"e_{monoid.alphabet.column_name(gamma)} = {idempotent(monoid, gamma)!r}"
            for gamma in monoid.alphabet.columns()
        ]
        _emit(config, "\n".join(lines))
    print(_report_table(checks), file=sys.stderr)
    failure = next((c for c in checks if not c.passed), None)
    if failure is not None:
        _print_failure(failure)
        return EXIT_FAILED
    return EXIT_OK


def run_quiver(config: RunConfig) -> int:
    quiver = build_extended(config.n) if config.extended else build_quiver(config.n)
    if config.resolved_format == "dot":
        _emit(config, quiver.to_dot())
    else:
        _emit(config, quiver.to_export().model_dump_json(indent=2))
    return EXIT_OK


def run_cartan(config: RunConfig) -> int:
    monoid = get_monoid(config.n, config.memoize_mult)
    linear = cartan_linear(monoid, config.characteristic)
    combinatorial = cartan_combinatorial(monoid)
    equal = linear.entries == combinatorial.entries
    fmt = config.resolved_format
    if fmt == "csv":
        _emit(config, linear.to_csv())
    elif fmt == "json":
        comparison = CartanComparison(
            linear=linear.to_export(), combinatorial=combinatorial.to_export(), equal=equal
        )
        _emit(config, comparison.model_dump_json(indent=2))
    else:
        _emit(config, "\n".join([
            "dim e_γ K e_δ:",
            linear.to_text(),
            "",
            "#{x : η(x) = γ, rfix(x) = δ}:",
            combinatorial.to_text(),
            "",
            f"equal: {equal}",
        ]))
    if not equal:
        print("Матрицы Картана различаются", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def run_verify(config: RunConfig) -> int:
    report = run_suite(config.n, config.seed, max_word_search_length=config.max_word_search_length)
    if config.resolved_format == "json":
        _emit(config, report.model_dump_json(indent=2))
    else:
        _emit(config, format_report(report))
    failure = report.first_failure()
    if failure is not None:
        _print_failure(failure)
        return EXIT_FAILED
    return EXIT_OK


COMMANDS = {
    "enumerate": run_enumerate,
    "idempotents": run_idempotents,
    "quiver": run_quiver,
    "cartan": run_cartan,
    "verify": run_verify,
}


def run(config: RunConfig) -> int:
    """Выполняет команду и возвращает код возврата."""
    logger.info(f"Команда {config.command} для n={config.n}")
    return COMMANDS[config.command](config)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
        setup_logging(settings.STYLIC_LOG_LEVEL)
        config = RunConfig(
            n=args.n,
            command=args.command,
            format=args.format,
            output=args.output,
            extended=args.extended,
            memoize_mult=args.memoize_mult,
            max_word_search_length=args.max_word_search_length,
            seed=args.seed,
            force=args.force,
            characteristic=args.characteristic,
        )
    except ValidationError as e:
        for error in e.errors():
            field = ".".join(map(str, error["loc"])) or "config"
            print(f"  - {field}: {error['msg']}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_INVALID
    return run(config)
