"""
Support Classes
"""

from torichms.support.storage import Storage
from torichms.support.env_helper import EnvHelper
from torichms.support.config import Config

__all__ = [
    'Storage',
    'EnvHelper',
    'Config',
]
