"""
Storage - Centralized path management and async file access
Provides consistent path resolution for logs, reports and exports
"""

import os
from pathlib import Path
from typing import Union

import aiofiles


class Storage:
    """
    Centralized path management helper

    Directory structure (relative to the working directory):
    /
    ├── .env                # Optional HMS_* overrides
    └── storage/
        ├── logs/           # Rotating JSON logs
        ├── reports/        # Saved check reports
        └── exports/        # DOT exports
    """

    _base_path: Path = None
    _storage_path: Path = None
    _package_path: Path = None

    @classmethod
    def initialize(cls, base_path: Union[str, Path] = None):
        """
        Initialize paths

        Args:
            base_path: Base directory (defaults to current working directory)
        """
        if base_path is None:
            base_path = os.getcwd()

        cls._base_path = Path(base_path).resolve()
        cls._storage_path = cls._base_path / 'storage'
        cls._package_path = Path(__file__).parent.parent.resolve()

    @classmethod
    def package(cls, *paths: str) -> Path:
        """Get the installed torichms package path"""
        if cls._package_path is None:
            cls.initialize()

        if paths:
            return cls._package_path.joinpath(*paths)
        return cls._package_path

    @classmethod
    def base(cls, *paths: str) -> Path:
        """
        Get base path

        Example:
            Storage.base('fans', 'c3_z3.json')
        """
        if cls._base_path is None:
            cls.initialize()

        if paths:
            clean_paths = [p.lstrip('/') for p in paths]
            return cls._base_path.joinpath(*clean_paths)
        return cls._base_path

    @classmethod
    def storage(cls, *paths: str) -> Path:
        """Get storage path (storage/)"""
        if cls._storage_path is None:
            cls.initialize()

        if paths:
            clean_paths = [p.lstrip('/') for p in paths]
            return cls._storage_path.joinpath(*clean_paths)
        return cls._storage_path

    @classmethod
    def logs(cls, *paths: str) -> Path:
        """Get logs path (storage/logs/)"""
        return cls.storage('logs', *paths)

    @classmethod
    def reports(cls, *paths: str) -> Path:
        """Get reports path (storage/reports/)"""
        return cls.storage('reports', *paths)

    @classmethod
    def exports(cls, *paths: str) -> Path:
        """Get exports path (storage/exports/)"""
        return cls.storage('exports', *paths)

    @classmethod
    def output(cls, name: Union[str, Path], folder: Path) -> Path:
        """
        Where an --out value points: bare file names go into folder

        Example:
            Storage.output('kp2.json', Storage.reports())      # storage/reports/kp2.json
            Storage.output('out/kp2.json', Storage.reports())  # out/kp2.json
        """
        path = Path(name)
        if path.is_absolute() or path.parent != Path('.'):
            return path
        return folder / path.name

    # === Helpers ===

    @classmethod
    def ensure_directory(cls, path: Union[str, Path]) -> Path:
        """Ensure directory exists, create if it doesn't"""
        path_obj = Path(path)
        path_obj.mkdir(parents=True, exist_ok=True)
        return path_obj

    @classmethod
    async def read_text(cls, path: Union[str, Path]) -> str:
        """
        Read a UTF-8 text file without blocking the event loop

        Raises:
            FileNotFoundError / OSError from the underlying open
        """
        async with aiofiles.open(Path(path), mode='r', encoding='utf-8') as handle:
            return await handle.read()

    @classmethod
    async def write_text(cls, path: Union[str, Path], content: str) -> Path:
        """
        Write a UTF-8 text file, creating parent directories

        Returns:
            The written path
        """
        path_obj = Path(path)
        cls.ensure_directory(path_obj.parent)
        async with aiofiles.open(path_obj, mode='w', encoding='utf-8') as handle:
            await handle.write(content)
        return path_obj
