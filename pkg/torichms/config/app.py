"""
Application Configuration
Environment, debug mode and logging channels
"""

from torichms.support.env_helper import EnvHelper
from torichms.defaults import (
    DEFAULT_APP_ENV,
    DEFAULT_APP_DEBUG,
    DEFAULT_LOG_FORMAT,
    DEFAULT_LOG_MAX_BYTES,
    DEFAULT_LOG_BACKUP_COUNT,
    DEFAULT_LOG_CHANNEL,
)

# production | staging | development | testing | local
ENV = EnvHelper.get('HMS_ENV', DEFAULT_APP_ENV)

# Debug mode echoes logs to stderr and prints tracebacks on errors
DEBUG = EnvHelper.get_bool('HMS_DEBUG', DEFAULT_APP_DEBUG)

# 'json' or 'text'
LOG_FORMAT = EnvHelper.get('HMS_LOG_FORMAT', DEFAULT_LOG_FORMAT)

LOGGING_CHANNELS = {
    'hms': {
        'name': DEFAULT_LOG_CHANNEL,
        'file_name': 'hms',
        'max_bytes': EnvHelper.get_int('HMS_LOG_MAX_BYTES', DEFAULT_LOG_MAX_BYTES),
        'backup_count': EnvHelper.get_int('HMS_LOG_BACKUP_COUNT', DEFAULT_LOG_BACKUP_COUNT),
    },
}
