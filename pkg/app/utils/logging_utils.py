import logging
import sys

from .config import LOG_LEVEL

logger = logging.getLogger("app.nomination")
if not logger.handlers:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
    logger.addHandler(handler)
logger.setLevel(LOG_LEVEL)
logger.propagate = False


def _query_label(query: str, party: str | None) -> str:
    if party is None:
        return query
    return f"{query}[{party}]"


def log_query_step(query: str, party: str | None, message: str, level: int = logging.INFO) -> None:
    logger.log(level, "%s - %s", _query_label(query, party), message)
