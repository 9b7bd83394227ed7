"""Structured logging for the toolkit.

Reports own stdout, so every log line is written to stderr. Production
environments get one JSON object per line; anything else gets the console
renderer.
"""

import logging
import sys
from typing import Any, Dict, MutableMapping, Optional

import numpy as np
import structlog
from structlog.stdlib import LoggerFactory

from swobstruct.utils.config import get_settings


def _plain(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def numpy_to_builtin(
    _logger: Any, _method: str, event_dict: MutableMapping[str, Any]
) -> MutableMapping[str, Any]:
    """Processor turning numpy scalars and arrays into plain Python values."""
    for key, value in event_dict.items():
        event_dict[key] = _plain(value)
    return event_dict


def configure_logging(level: Optional[str] = None, json_logs: Optional[bool] = None) -> None:
    """Configure structlog on top of the stdlib ``logging`` module.

    Args:
        level: Log level name; defaults to ``LOG_LEVEL``
        json_logs: Force JSON (True) or console (False) rendering; defaults to
            JSON in production
    """
    settings = get_settings()
    level = (level or settings.log_level).upper()
    if json_logs is None:
        json_logs = settings.is_production
    renderer: Any = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if json_logs
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            numpy_to_builtin,
            structlog.processors.format_exc_info,
            renderer,
        ],
        context_class=dict,
        logger_factory=LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, level, logging.INFO),
        force=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Structured logger for a module (pass ``__name__``)."""
    return structlog.get_logger(name)


def log_error(
    logger: structlog.stdlib.BoundLogger,
    error: Exception,
    context: Optional[Dict[str, Any]] = None,
    operation: Optional[str] = None,
) -> None:
    """Log a toolkit error with its operation and details.

    Args:
        logger: Structured logger instance
        error: Exception instance
        context: Extra key/value context, usually ``error.details``
        operation: Name of the failing operation
    """
    logger.error(
        "Operation failed",
        error=str(error),
        error_type=type(error).__name__,
        operation=operation,
        context=context or {},
    )


configure_logging()
