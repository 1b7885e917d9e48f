"""
Runtime configuration for ReesType.

Values come from the environment (optionally a `.env` file):

    REESTYPE_DEGREE_CAP   Gröbner degree cap (default 60)
    REESTYPE_PRIME        default characteristic for rings built in code (default 32003)
    REESTYPE_LOG_LEVEL    logging level name (default INFO)
"""

import os
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

from dotenv import load_dotenv

load_dotenv()

DEFAULT_DEGREE_CAP = 60
DEFAULT_PRIME = 32003
DEFAULT_LOG_LEVEL = "INFO"

_degree_cap_override: ContextVar[Optional[int]] = ContextVar("degree_cap_override", default=None)


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        from src.utilis.errors import ParseError

        raise ParseError(f"{name} must be an integer, got {raw!r}")


def degree_cap() -> int:
    """Return the active Gröbner degree cap.

    A scoped override (see `degree_cap_override`) wins over the
    environment, which wins over the built-in default.
    """
    override = _degree_cap_override.get()
    if override is not None:
        return override
    return _int_from_env("REESTYPE_DEGREE_CAP", DEFAULT_DEGREE_CAP)


@contextmanager
def degree_cap_override(value: Optional[int]) -> Iterator[None]:
    """Temporarily replace the degree cap for the current context.

    Args:
        value: New cap, or None to keep the environment value.
    """
    token = _degree_cap_override.set(value)
    try:
        yield
    finally:
        _degree_cap_override.reset(token)


def default_prime() -> int:
    return _int_from_env("REESTYPE_PRIME", DEFAULT_PRIME)


def log_level() -> str:
    return os.getenv("REESTYPE_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
