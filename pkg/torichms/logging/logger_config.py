"""
Logging Configuration
One JSON (or key=value text) line per record, rotated under storage/logs/

Records carry their check context through ``extra``:
    logger.warning("check molien failed", extra={'rms': [3, 1, 1], 'check': 'molien'})
"""
import json
import logging
import logging.handlers
from datetime import datetime
from typing import Any, Dict, List, Optional

# Attributes every LogRecord has; anything else came in through extra=
_RECORD_ATTRIBUTES = frozenset(vars(logging.LogRecord('', 0, '', 0, '', (), None))) | {'message', 'asctime'}


def record_context(record: logging.LogRecord) -> Dict[str, Any]:
    """The extra= fields of a record, sorted by key"""
    return {k: v for k, v in sorted(vars(record).items()) if k not in _RECORD_ATTRIBUTES}


class JSONFormatter(logging.Formatter):
    """Context fields sit next to timestamp/level/logger/message; keys are sorted"""

    def format(self, record: logging.LogRecord) -> str:
        data: Dict[str, Any] = {
            'timestamp': datetime.fromtimestamp(record.created).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
        }
        data.update(record_context(record))
        if record.exc_info:
            data['exception'] = self.formatException(record.exc_info)
        return json.dumps(data, default=str, sort_keys=True)


class ContextFormatter(logging.Formatter):
    """
    Example output:
        2026-01-02 10:00:00,000 hms.hmscheck.checks WARNING check molien failed | check=molien rms=[3, 1, 1]
    """

    def __init__(self):
        super().__init__('%(asctime)s %(name)s %(levelname)s %(message)s')

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        context = record_context(record)
        if context:
            line += ' | ' + ' '.join(f"{k}={v}" for k, v in context.items())
        return line


class LoggerConfig:

    @staticmethod
    def formatter(format_type: str) -> logging.Formatter:
        return JSONFormatter() if format_type == 'json' else ContextFormatter()

    @staticmethod
    def setup_logger(
        name: str,
        format_type: Optional[str] = None,
        max_bytes: Optional[int] = None,
        backup_count: Optional[int] = None,
        file_name: Optional[str] = None,
    ) -> logging.Logger:
        """
        Attach a rotating storage/logs/<file_name>.log handler to a channel

        The level follows app.env; app.debug also echoes records to stderr.
        Existing handlers of the channel are closed and replaced.

        Example:
            logger = LoggerConfig.setup_logger('hms', format_type='json')
        """
        from torichms.defaults import DEFAULT_LOG_BACKUP_COUNT, DEFAULT_LOG_MAX_BYTES
        from torichms.support import Config, Storage

        formatter = LoggerConfig.formatter(format_type or Config.get('app.log_format', 'json'))

        logger = logging.getLogger(name)
        logger.setLevel(LoggerConfig.get_level_by_environment(Config.get('app.env', 'local')))
        for old in list(logger.handlers):
            old.close()
            logger.removeHandler(old)

        log_file = Storage.logs(f"{file_name or name}.log")
        Storage.ensure_directory(log_file.parent)
        handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=max_bytes if max_bytes is not None else DEFAULT_LOG_MAX_BYTES,
            backupCount=backup_count if backup_count is not None else DEFAULT_LOG_BACKUP_COUNT,
            encoding='utf-8',
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)

        if Config.get('app.debug', False):
            console = logging.StreamHandler()
            console.setFormatter(formatter)
            logger.addHandler(console)

        logger.propagate = False
        return logger

    @staticmethod
    def setup_channels() -> List[logging.Logger]:
        """Configure every channel listed in app.logging_channels"""
        from torichms.support import Config

        return [
            LoggerConfig.setup_logger(
                channel['name'],
                max_bytes=channel.get('max_bytes'),
                backup_count=channel.get('backup_count'),
                file_name=channel.get('file_name'),
            )
            for channel in Config.get('app.logging_channels', {}).values()
        ]

    @staticmethod
    def get_level_by_environment(environment: str) -> int:
        """WARNING in production, DEBUG in development, ERROR in testing, else INFO"""
        levels = {
            'production': logging.WARNING,
            'staging': logging.INFO,
            'development': logging.DEBUG,
            'testing': logging.ERROR,
        }
        return levels.get(str(environment).lower(), logging.INFO)
