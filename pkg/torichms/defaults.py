"""
Default Values
All hardcoded values live here and are read through Config.get()
Every value can be overridden from .env or at runtime
"""

# ============================================================================
# APPLICATION DEFAULTS
# ============================================================================

DEFAULT_APP_ENV = 'local'
DEFAULT_APP_DEBUG = False
DEFAULT_LOG_FORMAT = 'json'

# ============================================================================
# LOGGING DEFAULTS
# ============================================================================

DEFAULT_LOG_MAX_BYTES = 10 * 1024 * 1024  # 10MB
DEFAULT_LOG_BACKUP_COUNT = 5
DEFAULT_LOG_CHANNEL = 'hms'

# ============================================================================
# CHECK DEFAULTS
# ============================================================================

# Truncation bound N for every graded series
DEFAULT_TRUNCATE = 30

# Report rendering ('text' or 'json')
DEFAULT_REPORT_FORMAT = 'text'
REPORT_FORMATS = ('text', 'json')

# Circle placement policy for global gluing ('auto' or 'dumbbell')
DEFAULT_PLACEMENT = 'auto'
PLACEMENTS = ('auto', 'dumbbell')

# Cones with |G| above this still run, with a warning
DEFAULT_MAX_GROUP_ORDER = 40

# Max per-cone tasks in flight during check_global
DEFAULT_CONCURRENCY = 4

# ============================================================================
# REPORT DEFAULTS
# ============================================================================

REPORT_SCHEMA_VERSION = 1
EXPORT_TARGETS = ('skeleton', 'dual', 'descent')

# ============================================================================
# EXIT CODES
# ============================================================================

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERRUPTED = 130
