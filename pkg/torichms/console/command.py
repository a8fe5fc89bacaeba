"""
Base Command Class
Artisan-style command base class for the hms CLI
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, FrozenSet, Optional

from torichms.defaults import REPORT_FORMATS
from torichms.exceptions import InputException
from torichms.hmscheck.report import HmsReport
from torichms.support import Config, Storage
from torichms.toricdata.fan import StackyFan, load_fan


class Command(ABC):

    # Command name (e.g., "check", "crepant")
    name: str = ""

    # Command description
    description: str = ""

    # Command signature (for help display)
    signature: Optional[str] = None

    # Options that take a value, so "--key value" consumes the next argument
    options: FrozenSet[str] = frozenset()

    def __init__(self):
        if not self.signature:
            self.signature = self.name

    @abstractmethod
    async def handle(self, *args, **kwargs) -> int:
        """
        Execute the command logic

        Returns:
            int: Exit code (0 pass, 1 check failure, 2 input error)
        """

    # Argument helpers
    def require(self, args: tuple, count: int) -> None:
        if len(args) < count:
            raise InputException(f"usage: hms {self.signature}")

    def integer(self, kwargs: dict, key: str, default: Any = None) -> Optional[int]:
        value = kwargs.get(key, default)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            raise InputException(f"--{key} expects an integer, got {value!r}")
        return value

    def report_format(self, kwargs: dict) -> str:
        return Config.choice('hms.format', REPORT_FORMATS, kwargs.get('format'))

    async def load(self, path: str) -> StackyFan:
        return await load_fan(Storage.base(path) if not Path(path).is_absolute() else Path(path))

    async def emit(self, report: HmsReport, kwargs: dict) -> int:
        """Print the report, save it when --out is given, return its exit code"""
        rendered = report.render(self.report_format(kwargs))
        self.line(rendered.rstrip('\n'))
        out = kwargs.get('out')
        if out:
            written = await Storage.write_text(Storage.output(out, Storage.reports()), rendered)
            self.info(f"report written to {written}")
        return report.exit_code

    # Output helpers
    def info(self, message: str):
        """Print info message"""
        print(f"ℹ {message}")

    def success(self, message: str):
        """Print success message"""
        print(f"✅ {message}")

    def error(self, message: str):
        """Print error message"""
        print(f"❌ {message}")

    def line(self, message: str = ""):
        """Print plain line"""
        print(message)

    def table(self, headers: list, rows: list):
        """Print a simple table"""
        widths = [len(h) for h in headers]
        for row in rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(str(cell)))

        header_line = " | ".join(h.ljust(widths[i]) for i, h in enumerate(headers))
        self.line(header_line)
        self.line("-" * len(header_line))

        for row in rows:
            self.line(" | ".join(str(cell).ljust(widths[i]) for i, cell in enumerate(row)))
