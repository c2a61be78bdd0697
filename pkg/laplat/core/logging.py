import logging
import sys
from typing import Optional

from laplat.core.config import settings
from laplat.core.errors import UsageError

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def configure_logging(level: Optional[str] = None) -> None:
    """Send log records to stderr so stdout only carries results"""
    name = (level or settings.LOG_LEVEL).upper()
    if name not in LEVELS:
        raise UsageError(f"unknown log level {name}", detail={"level": name, "choices": list(LEVELS)})
    root = logging.getLogger("laplat")
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(name)
    root.propagate = False
