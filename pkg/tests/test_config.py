from pathlib import Path

import pytest
from pydantic import ValidationError

from specht_brauer.config import Settings


def test_defaults_without_a_file():
    settings = Settings()
    assert settings.limits.max_group_order == 1_000_000
    assert settings.limits.max_dim == 5000
    assert settings.limits.endomorphism_enumeration == 2 ** 20
    assert settings.limits.intertwiner_entries == 20_000_000
    assert settings.output.mode == "text"
    assert settings.paths.log_folder is None
    assert settings.random_seed == 20240229


def test_load_yaml_and_create_log_folder(tmp_path: Path):
    config = tmp_path / "config.yaml"
    config.write_text(
        "limits:\n  max_dim: 40\noutput:\n  mode: Structured\n  indent: 4\n"
        f"paths:\n  log_folder: \"{(tmp_path / 'runs').as_posix()}\"\n",
        encoding="utf-8",
    )
    settings = Settings.load(config)
    assert settings.limits.max_dim == 40
    assert settings.limits.random_trials == 200
    assert settings.output.mode == "structured"
    assert settings.output.indent == 4
    assert settings.paths.log_folder == (tmp_path / "runs").resolve()
    assert settings.paths.log_folder.is_dir()


def test_empty_file_gives_defaults(tmp_path: Path):
    config = tmp_path / "empty.yaml"
    config.write_text("", encoding="utf-8")
    assert Settings.load(config).limits.max_dim == 5000


def test_explicit_missing_file_raises(tmp_path: Path):
    with pytest.raises(FileNotFoundError):
        Settings.load(tmp_path / "missing.yaml")


def test_missing_default_file_falls_back(tmp_path: Path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert Settings.load().limits.max_group_order == 1_000_000


@pytest.mark.parametrize(
    "payload",
    [
        {"limits": {"max_dim": 0}},
        {"limits": {"random_trials": -1}},
        {"limits": {"intertwiner_entries": 0}},
        {"output": {"mode": "xml"}},
        {"output": {"indent": -2}},
    ],
)
def test_validation_errors(payload):
    with pytest.raises(ValidationError):
        Settings.parse_obj(payload)
