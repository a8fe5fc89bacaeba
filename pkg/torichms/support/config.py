"""
Config Manager - dot notation access to the checker's configuration

Keys are '<module>.<name>' where <module> is a file in torichms/config/
(app.py, hms.py) and <name> is one of its upper-case settings. Lookups are
case-insensitive. Precedence, highest first:

    CLI flags (Config.set)  >  HMS_* environment / .env  >  torichms/defaults.py
"""

import importlib
import threading
from types import ModuleType
from typing import Any, Dict, Optional, Sequence


class Config:
    """
    Usage:
        bound = Config.get('hms.truncate')
        Config.set('hms.placement', 'dumbbell')      # from --placement
        policy = Config.choice('hms.placement', PLACEMENTS)
    """

    _lock = threading.Lock()
    _modules: Dict[str, Optional[ModuleType]] = {}
    _overrides: Dict[str, Any] = {}

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        """
        Example:
            Config.get('hms.truncate', 30)
            Config.get('HMS.TRUNCATE', 30)  # same
            Config.get('app.logging_channels.hms.file_name')
        """
        key = key.lower()
        if key in cls._overrides:
            return cls._overrides[key]

        module_name, *path = key.split('.')
        value: Any = cls._module(module_name)
        if value is None or not path:
            return default if value is None else value

        head, *rest = path
        value = next(
            (getattr(value, attr) for attr in dir(value) if attr.isupper() and attr.lower() == head),
            _MISSING,
        )
        for part in rest:
            if not isinstance(value, dict):
                return default
            value = next((v for k, v in value.items() if k.lower() == part), _MISSING)
            if value is _MISSING:
                break

        return default if value is _MISSING else value

    @classmethod
    def choice(cls, key: str, allowed: Sequence[str], value: Optional[str] = None) -> str:
        """
        value, else the configured key, checked against allowed

        Raises:
            InputException: the result is not one of allowed
        """
        from torichms.exceptions.custom import InputException

        resolved = value if value is not None else cls.get(key)
        if resolved not in allowed:
            name = key.split('.')[-1]
            raise InputException(f"{name} must be one of {', '.join(allowed)}, got {resolved!r}")
        return resolved

    @classmethod
    def set(cls, key: str, value: Any) -> None:
        """Runtime override for this process only"""
        cls._overrides[key.lower()] = value

    @classmethod
    def has(cls, key: str) -> bool:
        return cls.get(key) is not None

    @classmethod
    def clear_runtime_overrides(cls) -> None:
        cls._overrides.clear()

    @classmethod
    def reload(cls, module_name: Optional[str] = None) -> None:
        """Re-import config module(s) so HMS_* variables are read again"""
        with cls._lock:
            targets = [module_name] if module_name else list(cls._modules)
            for name in targets:
                module = cls._modules.get(name)
                if module is None:
                    cls._modules.pop(name, None)
                else:
                    cls._modules[name] = importlib.reload(module)

    @classmethod
    def _module(cls, name: str) -> Optional[ModuleType]:
        with cls._lock:
            if name not in cls._modules:
                try:
                    cls._modules[name] = importlib.import_module(f'torichms.config.{name}')
                except ImportError:
                    cls._modules[name] = None
            return cls._modules[name]


_MISSING = object()
