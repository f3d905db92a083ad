"""Utility helpers used across the project."""

from __future__ import annotations

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional

from sympy import isprime

from .errors import InvalidInputError


LOGGER = logging.getLogger(__name__)

EMPTY_PARTITION_TEXT = "-"


def ensure_directory(path: Path) -> None:
    """Create ``path`` when it does not exist."""

    path.mkdir(parents=True, exist_ok=True)


def require_prime(p: int) -> int:
    """Return ``p`` unchanged, raising :class:`InvalidInputError` unless it is prime."""

    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise InvalidInputError(f"{p!r} is not a prime")
    return p


def parse_int_list(text: str, *, separator: str = ",") -> List[int]:
    """Parse ``"6,5,2"`` into ``[6, 5, 2]``; ``"-"`` and blank text give ``[]``."""

    if text is None:
        raise InvalidInputError("Expected a comma separated list of integers, got None")
    stripped = text.strip()
    if not stripped or stripped == EMPTY_PARTITION_TEXT:
        return []
    values: List[int] = []
    for token in stripped.split(separator):
        token = token.strip()
        if not token:
            raise InvalidInputError(f"Empty entry in integer list '{text}'")
        try:
            values.append(int(token))
        except ValueError as exc:
            raise InvalidInputError(f"'{token}' is not an integer (in '{text}')") from exc
    return values


def format_int_list(values, *, separator: str = ",") -> str:
    values = list(values)
    if not values:
        return EMPTY_PARTITION_TEXT
    return separator.join(str(value) for value in values)


def now_timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S%f")


def dump_json(path: Path, data) -> None:
    ensure_directory(path.parent)
    with path.open("w", encoding="utf-8") as handle:
        json.dump(data, handle, ensure_ascii=False, indent=2)


def load_json(path: Path) -> Optional[dict]:
    if not path.exists():
        return None
    with path.open("r", encoding="utf-8") as handle:
        return json.load(handle)


__all__ = [
    "EMPTY_PARTITION_TEXT",
    "ensure_directory",
    "require_prime",
    "parse_int_list",
    "format_int_list",
    "now_timestamp",
    "dump_json",
    "load_json",
]
