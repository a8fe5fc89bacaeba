"""
Logging Package
Structured JSON logging for the checker

All modules log through the 'hms' channel tree:
    from torichms.logging import getLogger
    logger = getLogger(__name__)   # torichms.toricdata.cone -> hms.toricdata.cone
"""
from torichms.logging.logger_config import (
    ContextFormatter,
    JSONFormatter,
    LoggerConfig,
)
import logging
from typing import Optional

__all__ = [
    'ContextFormatter',
    'LoggerConfig',
    'JSONFormatter',
    'getLogger',
    'INFO',
    'DEBUG',
    'WARNING',
    'ERROR',
    'CRITICAL',
]

INFO = logging.INFO
DEBUG = logging.DEBUG
WARNING = logging.WARNING
ERROR = logging.ERROR
CRITICAL = logging.CRITICAL


def getLogger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger under a configured channel

    Module names ('torichms.x.y') are re-rooted under the default channel so
    that the channel's handlers receive them. Bare names must be a configured
    channel name, otherwise the default channel is returned.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance

    Example:
        logger = getLogger(__name__)
        logger.info("cone normalized", extra={'cone': [0, 1, 2], 'order': 3})
    """
    from torichms.defaults import DEFAULT_LOG_CHANNEL

    root = DEFAULT_LOG_CHANNEL

    if name is None:
        return logging.getLogger(root)

    if name.startswith('torichms.'):
        return logging.getLogger(f"{root}.{name[len('torichms.'):]}")

    if '.' not in name:
        from torichms.support import Config
        channels = Config.get('app.logging_channels', {})
        allowed_names = [c.get('name') for c in channels.values() if c.get('name')]
        if name not in allowed_names:
            return logging.getLogger(root)

    return logging.getLogger(name)
