"""
hms command dispatcher

Commands are discovered from torichms/console/commands/*.py; every Command
subclass with a name is registered.
"""
import asyncio
import importlib
import inspect
import sys
from typing import Dict, List, Optional, Tuple

from torichms.console.command import Command
from torichms.defaults import EXIT_INPUT_ERROR, EXIT_INTERRUPTED
from torichms.exceptions import HmsException, handle_cli_exceptions, install_cli_error_handler
from torichms.logging import LoggerConfig, getLogger
from torichms.support import Storage

logger = getLogger(__name__)


class Artisan:
    COMMAND_PACKAGE = 'torichms.console.commands'

    def __init__(self):
        self.commands: Dict[str, Command] = {}
        self._discover_commands()

    def _discover_commands(self):
        """Auto-discover commands"""
        command_path = Storage.package('console', 'commands')
        for py_file in sorted(command_path.glob('*.py')):
            if py_file.name.startswith('__'):
                continue
            module = importlib.import_module(f"{self.COMMAND_PACKAGE}.{py_file.stem}")
            for _, obj in inspect.getmembers(module, inspect.isclass):
                if issubclass(obj, Command) and obj is not Command and obj.name:
                    self.commands[obj.name] = obj()

    def show_help(self):
        """Show available commands"""
        print("╔═══════════════════════════════════════════════════════════╗")
        print("║  hms - toric orbifold mirror symmetry checker             ║")
        print("╚═══════════════════════════════════════════════════════════╝")
        print()
        print("COMMANDS:")
        for name in sorted(self.commands):
            cmd = self.commands[name]
            print(f"  {cmd.signature:<58} {cmd.description}")
        print()
        print("Run 'hms help <command>' for detailed information")

    def _parse_args(self, command: Command, argv: List[str]) -> Tuple[List[str], Dict[str, object]]:
        """
        Parse command line arguments

        --key=value and, for the command's value options, --key value;
        any other --flag is boolean. Integers and true/false are coerced.
        """
        args: List[str] = []
        kwargs: Dict[str, object] = {}

        def coerce(value: str) -> object:
            try:
                return int(value)
            except ValueError:
                if value.lower() in ('true', 'false'):
                    return value.lower() == 'true'
                return value

        k = 0
        while k < len(argv):
            arg = argv[k]
            if arg.startswith('--'):
                if '=' in arg:
                    key, value = arg[2:].split('=', 1)
                    kwargs[key] = coerce(value)
                elif arg[2:] in command.options and k + 1 < len(argv):
                    kwargs[arg[2:]] = coerce(argv[k + 1])
                    k += 1
                else:
                    kwargs[arg[2:]] = True
            else:
                args.append(arg)
            k += 1

        return args, kwargs

    async def run(self, argv: List[str]) -> int:
        """Run the CLI application"""
        if len(argv) < 2:
            self.show_help()
            return 0

        command_name = argv[1]

        if command_name in ['help', '--help', '-h']:
            if len(argv) > 2:
                cmd_name = argv[2]
                if cmd_name in self.commands:
                    cmd = self.commands[cmd_name]
                    print(f"\nCommand: {cmd.name}")
                    print(f"Description: {cmd.description}")
                    print(f"Signature: hms {cmd.signature}")
                    return 0
                print(f"Unknown command: {cmd_name}\n")
                self.show_help()
                return EXIT_INPUT_ERROR
            self.show_help()
            return 0

        if command_name not in self.commands:
            print(f"❌ Unknown command: {command_name}\n")
            self.show_help()
            return EXIT_INPUT_ERROR

        command = self.commands[command_name]
        args, kwargs = self._parse_args(command, argv[2:])
        logger.debug("running command", extra={'command': command_name, 'options': sorted(kwargs)})

        try:
            exit_code = await command.handle(*args, **kwargs)
            return exit_code if exit_code is not None else 0
        except KeyboardInterrupt:
            print("\n\n⚠ Command interrupted by user")
            return EXIT_INTERRUPTED
        except Exception as e:
            return handle_cli_exceptions(e)


def main(argv: Optional[List[str]] = None) -> None:
    """Console entry point"""
    Storage.initialize()
    install_cli_error_handler()
    try:
        LoggerConfig.setup_channels()
        code = asyncio.run(Artisan().run(argv if argv is not None else sys.argv))
    except KeyboardInterrupt:
        code = EXIT_INTERRUPTED
    except HmsException as e:
        # a malformed HMS_* variable surfaces while the config modules load
        code = handle_cli_exceptions(e)
    sys.exit(code)


if __name__ == '__main__':
    main()
