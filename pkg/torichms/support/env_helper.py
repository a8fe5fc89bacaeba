"""
EnvHelper - read environment variables, with optional .env loading
"""

import os
import threading
from pathlib import Path
from typing import Optional, Any
from dotenv import load_dotenv

from torichms.exceptions.custom import InputException


class EnvHelper:
    """
    Environment variable reader with .env file support

    Usage:
        bound = EnvHelper.get_int('HMS_TRUNCATE', 30)
        debug = EnvHelper.get_bool('HMS_DEBUG', False)

    A missing .env is not an error; the process environment is used as is.
    Variables already set in the process win over the .env file.
    """

    _lock = threading.Lock()
    _env_path: Optional[Path] = None
    _loaded: bool = False

    @classmethod
    def initialize(cls, env_path=None):
        """
        Initialize EnvHelper

        Args:
            env_path: Path to .env file (defaults to .env in the working directory)
        """
        if env_path is None:
            from torichms.support.storage import Storage
            env_path = Storage.base('.env')

        cls._env_path = Path(env_path)

    @classmethod
    def load(cls, env_path=None, override: bool = False) -> bool:
        """
        Load .env file into environment

        Args:
            env_path: Path to .env file (defaults to initialized path)
            override: Whether to override existing environment variables

        Returns:
            bool: True if a .env file was read
        """
        with cls._lock:
            if env_path:
                cls._env_path = Path(env_path)

            if cls._env_path is None:
                cls.initialize()

            cls._loaded = True
            if not cls._env_path.exists():
                return False

            load_dotenv(cls._env_path, override=override)
            return True

    @classmethod
    def get(cls, key: str, default: Any = None) -> Optional[str]:
        """
        Get environment variable value

        Example:
            env = EnvHelper.get('HMS_ENV', 'local')
        """
        if not cls._loaded:
            cls.load()

        return os.getenv(key, default)

    @classmethod
    def get_bool(cls, key: str, default: bool = False) -> bool:
        """Get boolean environment variable (true/1/yes/on)"""
        value = cls.get(key)
        if value is None:
            return default

        return value.lower() in ('true', '1', 'yes', 'on')

    @classmethod
    def get_int(cls, key: str, default: int = 0) -> int:
        """
        Get integer environment variable

        Raises:
            InputException: the variable is set but is not an integer
        """
        value = cls.get(key)
        if value is None:
            return default

        try:
            return int(value)
        except ValueError:
            raise InputException(f"{key} must be an integer, got {value!r}") from None
