"""Application configuration models and helpers.

The configuration lives in a YAML file (``config.yaml`` by default) validated
with ``pydantic``.  Every section has defaults, so an absent default file
simply yields the built-in limits; tests build ``Settings`` directly from
dictionaries.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel, Field, validator


DEFAULT_CONFIG_PATH = Path("config.yaml")


class LimitsConfig(BaseModel):
    """Resource caps guarding the enumerations and eliminations."""

    max_group_order: int = Field(1_000_000, description="Largest permutation group whose elements are listed one by one")
    max_dim: int = Field(5000, description="Largest Specht module dimension built explicitly")
    normalizer_search: int = Field(
        10_000_000,
        description="Normalizers are found by brute force when |support|! stays below this bound",
    )
    endomorphism_enumeration: int = Field(
        2 ** 20,
        description="Endomorphism algebras with at most this many elements are enumerated exhaustively",
    )
    random_trials: int = Field(200, description="Random elements tried when exhaustive search is too large")
    intertwiner_entries: int = Field(
        20_000_000,
        description="Largest candidate tensor (seeds × rows × cols × cols) built when solving for module maps",
    )

    @validator(
        "max_group_order", "max_dim", "normalizer_search", "endomorphism_enumeration", "random_trials", "intertwiner_entries"
    )
    def _validate_positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("limits must be greater than zero")
        return value


class OutputConfig(BaseModel):
    """How reports are printed on standard output."""

    mode: str = Field("text", description="'text' for key: value lines, 'structured' for JSON")
    indent: int = Field(2, description="JSON indentation in structured mode")

    @validator("mode")
    def _validate_mode(cls, value: str) -> str:
        normalized = (value or "").strip().lower()
        if normalized not in {"text", "structured"}:
            raise ValueError("output.mode must be either 'text' or 'structured'")
        return normalized

    @validator("indent")
    def _validate_indent(cls, value: int) -> int:
        if value < 0:
            raise ValueError("output.indent must be zero or positive")
        return value


class PathsConfig(BaseModel):
    """Filesystem locations; all optional."""

    log_folder: Optional[Path] = Field(
        default=None,
        description="Folder receiving one run_<timestamp>.json record per invocation",
    )

    @validator("log_folder", pre=True)
    def _expand_path(cls, value: Optional[str]) -> Optional[Path]:
        if value is None:
            return None
        return Path(value).expanduser().resolve()

    def ensure_directories(self) -> None:
        if self.log_folder:
            self.log_folder.mkdir(parents=True, exist_ok=True)


class Settings(BaseModel):
    """Top level configuration object."""

    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    paths: PathsConfig = Field(default_factory=PathsConfig)
    random_seed: int = Field(20240229, description="Seed for every randomized search")

    class Config:
        arbitrary_types_allowed = True

    def ensure_folders(self) -> None:
        """Create all folders referenced by the configuration."""

        self.paths.ensure_directories()

    @classmethod
    def load(cls, path: Optional[Path | str] = None) -> "Settings":
        """Load the configuration from YAML.

        Without ``path`` the default ``config.yaml`` is read when present and
        built-in defaults are used otherwise; an explicit missing path raises.
        """

        if path is None:
            config_path = DEFAULT_CONFIG_PATH.expanduser().resolve()
            if not config_path.exists():
                return cls()
        else:
            config_path = Path(path).expanduser().resolve()
            if not config_path.exists():
                raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with config_path.open("r", encoding="utf-8") as stream:
            data = yaml.safe_load(stream) or {}

        settings = cls.parse_obj(data)
        settings.ensure_folders()
        return settings


__all__ = ["Settings", "LimitsConfig", "OutputConfig", "PathsConfig", "DEFAULT_CONFIG_PATH"]
