"""
Built-in hms commands

Commands are auto-discovered - no need to import them here.
"""
