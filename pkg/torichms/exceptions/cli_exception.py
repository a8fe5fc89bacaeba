import sys
from typing import Optional, TextIO

from torichms.exceptions.cli_formatter import (
    CliColors, CliBox, _colorize, _box_line, _format_traceback, _wrap,
)
from torichms.exceptions.custom import (
    HmsException, FanValidationException, CheckFailedException, InputException,
)


def _rule(left: str, right: str, color: str, width: int) -> str:
    return _colorize(left + CliBox.H * (width - 2) + right, color)


def handle_cli_exceptions(error: BaseException, stream: Optional[TextIO] = None) -> int:
    """
    Print a boxed error report and return the process exit code

    HmsException subclasses map to their own exit code; anything else is
    reported as an internal failure (exit 1) with a traceback in local and
    development environments.
    """
    from torichms.support import Config

    out = stream or sys.stderr
    try:
        env = str(Config.get('app.env', 'local')).lower()
    except InputException:
        # the app config module itself did not load
        env = 'local'
    is_dev = env in ('local', 'development')
    width = 70

    def emit(text: str = "") -> None:
        print(text, file=out)

    is_input = isinstance(error, HmsException) and error.exit_code == 2
    title = "INPUT ERROR" if is_input else "CHECK FAILED" if isinstance(error, HmsException) else "INTERNAL ERROR"

    emit(_rule(CliBox.TL, CliBox.TR, CliColors.RED, width))
    emit(_box_line(_colorize(f"❌ {title}: {type(error).__name__}", CliColors.BOLD + CliColors.RED), width))
    emit(_rule(CliBox.L, CliBox.R, CliColors.RED, width))

    for line in _wrap(str(error)):
        emit(_box_line(_colorize(line, CliColors.WHITE), width))

    if isinstance(error, FanValidationException):
        emit(_box_line("", width))
        for path, messages in error.errors.items():
            for message in messages:
                for line in _wrap(f"{path}: {message}", 62):
                    emit(_box_line(_colorize(line, CliColors.YELLOW), width))

    if isinstance(error, CheckFailedException) and error.counterexample:
        emit(_box_line("", width))
        for key in sorted(error.counterexample):
            for line in _wrap(f"{key} = {error.counterexample[key]}", 62):
                emit(_box_line(_colorize(line, CliColors.YELLOW), width))

    emit(_rule(CliBox.BL, CliBox.BR, CliColors.RED, width))

    if isinstance(error, HmsException):
        return error.exit_code

    if is_dev:
        emit(_rule(CliBox.TL, CliBox.TR, CliColors.BLUE, width))
        emit(_box_line(_colorize(f"📋 FULL TRACEBACK (HMS_ENV={env})", CliColors.BOLD + CliColors.BLUE), width))
        emit(_rule(CliBox.BL, CliBox.BR, CliColors.BLUE, width))
        for line in _format_traceback(error):
            emit(line)
    else:
        emit(_colorize("💡 Tip: Set HMS_ENV=local for full traceback", CliColors.CYAN))
    return 1


def install_cli_error_handler():
    """
    Route uncaught exceptions through handle_cli_exceptions
    KeyboardInterrupt keeps the default hook
    """
    original_excepthook = sys.excepthook

    def cli_exception_hook(exc_type, exc_value, exc_traceback):
        if issubclass(exc_type, KeyboardInterrupt):
            original_excepthook(exc_type, exc_value, exc_traceback)
            return
        sys.exit(handle_cli_exceptions(exc_value))

    sys.excepthook = cli_exception_hook
