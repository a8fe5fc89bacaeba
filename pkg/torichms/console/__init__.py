"""
Console
CLI command infrastructure
"""
from torichms.console.artisan import Artisan, main
from torichms.console.command import Command

__all__ = [
    'Artisan',
    'Command',
    'main',
]
