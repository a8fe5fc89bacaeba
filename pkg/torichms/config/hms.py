"""
Check Configuration
Every key can be overridden by HMS_* variables or CLI flags
"""

from torichms.support.env_helper import EnvHelper
from torichms.defaults import (
    DEFAULT_TRUNCATE,
    DEFAULT_REPORT_FORMAT,
    DEFAULT_PLACEMENT,
    DEFAULT_MAX_GROUP_ORDER,
    DEFAULT_CONCURRENCY,
)

# Truncation bound N for graded series comparisons
TRUNCATE = EnvHelper.get_int('HMS_TRUNCATE', DEFAULT_TRUNCATE)

# Report rendering: 'text' or 'json'
FORMAT = EnvHelper.get('HMS_FORMAT', DEFAULT_REPORT_FORMAT)

# Circle placement for global gluing: 'auto' or 'dumbbell'
PLACEMENT = EnvHelper.get('HMS_PLACEMENT', DEFAULT_PLACEMENT)

# Cones above this group order log a warning
MAX_GROUP_ORDER = EnvHelper.get_int('HMS_MAX_GROUP_ORDER', DEFAULT_MAX_GROUP_ORDER)

# Per-cone tasks in flight during check_global
CONCURRENCY = EnvHelper.get_int('HMS_CONCURRENCY', DEFAULT_CONCURRENCY)
