import logging
import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """Return integer value from environment with fallback."""
    try:
        return int(os.getenv(name, str(default)))
    except (TypeError, ValueError):
        logging.warning(
            "Invalid integer value for %s; falling back to %s", name, default
        )
        return default


def _env_level(name: str, default: str) -> str:
    raw = os.getenv(name, default).strip().upper()
    if raw not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
        logging.warning("Unsupported %s='%s', falling back to '%s'.", name, raw, default)
        return default
    return raw


MAX_SCHEMES = _env_int("NOMINATION_MAX_SCHEMES", 1_000_000)
MAX_AXIS_PARTIES = _env_int("NOMINATION_MAX_AXIS_PARTIES", 6)
MAX_SP_CANDIDATES = _env_int("NOMINATION_MAX_SP_CANDIDATES", 9)
SCORE_TABLE_LIMIT = _env_int("NOMINATION_SCORE_TABLE_LIMIT", 64)
LOG_LEVEL = _env_level("NOMINATION_LOG_LEVEL", "WARNING")


__all__ = [
    "MAX_SCHEMES",
    "MAX_AXIS_PARTIES",
    "MAX_SP_CANDIDATES",
    "SCORE_TABLE_LIMIT",
    "LOG_LEVEL",
]
