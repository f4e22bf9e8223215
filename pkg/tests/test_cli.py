"""
Тесты для командной строки `stylic.cli`.
"""
import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from stylic import cli
from stylic.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, RunConfig, main


@pytest.fixture(autouse=True)
def quiet_logging(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    Не перенастраиваем корневой логгер из тестов: capsys подменяет потоки.
    """
    monkeypatch.setattr(cli, "setup_logging", lambda *args, **kwargs: None)


def test_verify_small_alphabet(capsys: pytest.CaptureFixture) -> None:
    assert main(["verify", "--n", "2", "--seed", "3"]) == EXIT_OK

    out = capsys.readouterr().out
    assert out.startswith("seed = 3\n")
    assert "FAIL" not in out


def test_verify_reports_counterexample(capsys: pytest.CaptureFixture) -> None:
    assert main(["verify", "--n", "3", "--max-word-search-length", "1"]) == EXIT_FAILED

    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "Контрпример" in captured.err


def test_quiver_dot(capsys: pytest.CaptureFixture) -> None:
    assert main(["quiver", "--n", "3", "--format", "dot"]) == EXIT_OK

    out = capsys.readouterr().out
    assert out.startswith("digraph Q {")
    assert out.count("->") == 5


def test_extended_quiver_json(tmp_path: Path) -> None:
    target = tmp_path / "quiver.json"

    assert main(["quiver", "--n", "2", "--extended", "--format", "json", "--output", str(target)]) == EXIT_OK
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["extended"] is True
    assert len(data["edges"]) == 5


def test_cartan_csv(capsys: pytest.CaptureFixture) -> None:
    assert main(["cartan", "--n", "1", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out == ",ε,a\nε,1,0\na,0,1\n"


def test_cartan_text_over_prime_field(capsys: pytest.CaptureFixture) -> None:
    assert main(["cartan", "--n", "2", "--characteristic", "3"]) == EXIT_OK
    assert "equal: True" in capsys.readouterr().out


def test_enumerate_json(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    target = tmp_path / "styl3.json"

    assert main(["enumerate", "--n", "3", "--format", "json", "--output", str(target)]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == "|Styl(3)| = 15\n"
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["size"] == 15
    assert data["elements"][0]["rep_word"] == "ε"


def test_enumerate_is_deterministic(tmp_path: Path) -> None:
    first, second = tmp_path / "first.json", tmp_path / "second.json"

    main(["enumerate", "--n", "3", "--no-memoize-mult", "--output", str(first)])
    main(["enumerate", "--n", "3", "--output", str(second)])
    assert first.read_bytes() == second.read_bytes()


def test_idempotents_text(capsys: pytest.CaptureFixture) -> None:
    assert main(["idempotents", "--n", "1", "--format", "text"]) == EXIT_OK

    captured = capsys.readouterr()
    assert "e_ε = 1*ε + -1*a" in captured.out
    assert "idempotents.orthogonal" not in captured.out
    assert "idempotents.orthogonal" in captured.err


def test_json_on_stdout_is_parseable(capsys: pytest.CaptureFixture) -> None:
    assert main(["enumerate", "--n", "2", "--format", "json"]) == EXIT_OK
    captured = capsys.readouterr()
    assert json.loads(captured.out)["size"] == 5
    assert "|Styl(2)| = 5" in captured.err

    assert main(["idempotents", "--n", "2", "--format", "json"]) == EXIT_OK
    assert len(json.loads(capsys.readouterr().out)) == 4


def test_enumerate_text_draws_tableaux(capsys: pytest.CaptureFixture) -> None:
    assert main(["enumerate", "--n", "2", "--format", "text"]) == EXIT_OK

    blocks = capsys.readouterr().out.rstrip("\n").split("\n\n")
    assert blocks[0] == "0\tε\nε"
    assert blocks[3] == "3\tab\na b"
    assert blocks[4] == "4\tba\nb\na"


@pytest.mark.parametrize(
    "argv",
    [
        ["cartan", "--n", "7"],
        ["verify", "--n", "7"],
        ["quiver", "--n", "3", "--format", "csv"],
        ["cartan", "--n", "2", "--characteristic", "4"],
        ["enumerate", "--n", "0"],
        ["verify", "--n", "2", "--max-word-search-length", "0"],
    ],
)
def test_invalid_configuration(argv: list, capsys: pytest.CaptureFixture) -> None:
    assert main(argv) == EXIT_INVALID
    assert capsys.readouterr().err


def test_unknown_command_exits_with_usage_error() -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["tableaux", "--n", "2"])
    assert exc_info.value.code == 2


def test_run_config() -> None:
    config = RunConfig(n=8, command="cartan", force=True)

    assert config.resolved_format == "text"
    assert RunConfig(n=3, command="quiver").resolved_format == "dot"
    with pytest.raises(ValidationError):
        RunConfig(n=3, command="enumerate", format="dot")
    with pytest.raises(ValidationError):
        config.n = 2
