import os
import sys
import json
from typing import Any, Dict, Optional
from loguru import logger
import zetamoments.utils.constants as CONST

EVENTS_LEVEL_NUM = 38
EVENTS_LEVEL_NAME = "EVENT"
DEFAULT_LOG_BACKUP_COUNT = 10
EVENTS_FILE = "events.log"


def _ensure_event_level() -> None:
    try:
        logger.level(EVENTS_LEVEL_NAME)
    except ValueError:
        logger.level(EVENTS_LEVEL_NAME, no=EVENTS_LEVEL_NUM, color="<magenta>")


def setup_logging(
    level: str = "WARNING",
    events_path: Optional[str] = None,
    events_retention_size: str = CONST.EVENTS_RETENTION_SIZE,
) -> None:
    """
    Configure loguru sinks for a command-line run.

    Log lines go to stderr so that tables on stdout stay machine readable.
    When ``events_path`` is set every verification record is also appended,
    one JSON line each, to a rotating ``events.log`` inside that directory.
    """
    _ensure_event_level()
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        filter=lambda record: record["level"].name != EVENTS_LEVEL_NAME,
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{line} - {message}",
    )
    if events_path:
        os.makedirs(events_path, exist_ok=True)
        logger.add(
            os.path.join(events_path, EVENTS_FILE),
            level=EVENTS_LEVEL_NAME,
            filter=lambda record: record["level"].name == EVENTS_LEVEL_NAME,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}",
            rotation=events_retention_size,
            retention=DEFAULT_LOG_BACKUP_COUNT,
        )


def log_event(kind: str, payload: Dict[str, Any]) -> None:
    """Emit one structured record at the EVENT level."""
    _ensure_event_level()
    logger.log(EVENTS_LEVEL_NAME, json.dumps({"kind": kind, **payload}, default=str))
