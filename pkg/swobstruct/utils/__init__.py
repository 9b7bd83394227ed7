"""Utility modules for configuration, logging and exact arithmetic."""

from swobstruct.utils.config import Settings, get_settings
from swobstruct.utils.logger import get_logger, log_error

__all__ = [
    "Settings",
    "get_settings",
    "get_logger",
    "log_error",
]
