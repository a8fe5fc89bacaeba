"""
CLI Formatter
Terminal formatting utilities: ANSI colors, box drawing, traceback highlighting
"""
import os
import re
import sys
import traceback
from typing import List, TextIO

# ============================================================================
# ANSI COLORS
# ============================================================================

class CliColors:
    """ANSI color codes for terminal output"""
    RESET = '\033[0m'

    BOLD = '\033[1m'
    DIM = '\033[2m'

    RED = '\033[91m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    CYAN = '\033[96m'
    WHITE = '\033[97m'


class CliBox:
    """Rounded unicode box-drawing characters"""
    H = '─'
    V = '│'
    TL = '╭'
    TR = '╮'
    BL = '╰'
    BR = '╯'
    L = '├'
    R = '┤'


_ANSI = re.compile(r'\033\[[0-9;]*m')


def _is_color_supported(stream: TextIO = None) -> bool:
    """Check if the stream is a colour-capable terminal"""
    stream = stream or sys.stderr
    return (
        hasattr(stream, 'isatty') and stream.isatty() and
        os.getenv('TERM') != 'dumb' and os.getenv('NO_COLOR') is None
    )


def _colorize(text: str, color: str, stream: TextIO = None) -> str:
    """Apply color to text if supported"""
    if _is_color_supported(stream):
        return f"{color}{text}{CliColors.RESET}"
    return text


def _visible_len(text: str) -> int:
    return len(_ANSI.sub('', text))


def _box_line(text: str, width: int = 70) -> str:
    """Create a centered text line in a box"""
    padding = max(width - _visible_len(text) - 4, 0)
    left_pad = padding // 2
    right_pad = padding - left_pad
    return f"{CliBox.V} {' ' * left_pad}{text}{' ' * right_pad} {CliBox.V}"


def _wrap(message: str, limit: int = 60) -> List[str]:
    """Greedy word wrap for boxed messages"""
    lines: List[str] = []
    current = ""
    for word in message.split():
        if current and len(current) + len(word) + 1 > limit:
            lines.append(current)
            current = word
        else:
            current = f"{current} {word}" if current else word
    if current:
        lines.append(current)
    return lines or [""]


def _format_traceback(error: BaseException = None) -> List[str]:
    """Format a traceback (the active one by default) with highlighting"""
    if error is not None:
        text = "".join(traceback.format_exception(type(error), error, error.__traceback__))
    else:
        text = traceback.format_exc()
    tb_lines = text.split("\n")
    formatted = []

    for line in tb_lines:
        if not line.strip():
            continue

        head = line.split(':', 1)[0]
        if 'File "' in line:
            formatted.append(_colorize(line, CliColors.CYAN))
        elif head.endswith(('Error', 'Exception')) and ' ' not in head:
            parts = line.split(':', 1)
            if len(parts) == 2:
                error_type = _colorize(parts[0], CliColors.BOLD + CliColors.RED)
                message = _colorize(parts[1], CliColors.RED)
                formatted.append(f"{error_type}:{message}")
            else:
                formatted.append(_colorize(line, CliColors.RED))
        else:
            formatted.append(_colorize(f"  {line}", CliColors.WHITE))

    return formatted
