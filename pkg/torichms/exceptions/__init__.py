"""
Exceptions Package
Exit-code exceptions and boxed CLI error output
"""
from torichms.exceptions.cli_formatter import CliColors, CliBox, _colorize, _box_line, _format_traceback
from torichms.exceptions.cli_exception import install_cli_error_handler, handle_cli_exceptions
from torichms.exceptions.custom import (
    HmsException,
    InputException,
    FanValidationException,
    DegenerateConeException,
    TruncationException,
    PolygonMismatchException,
    PlacementException,
    SubgraphException,
    CheckFailedException,
    ConventionViolationException,
    ProjectionMismatchException,
    LabelMismatchException,
)

__all__ = [
    # CLI formatting
    'CliColors',
    'CliBox',
    '_colorize',
    '_box_line',
    '_format_traceback',
    'install_cli_error_handler',
    'handle_cli_exceptions',

    # Custom exceptions
    'HmsException',
    'InputException',
    'FanValidationException',
    'DegenerateConeException',
    'TruncationException',
    'PolygonMismatchException',
    'PlacementException',
    'SubgraphException',
    'CheckFailedException',
    'ConventionViolationException',
    'ProjectionMismatchException',
    'LabelMismatchException',
]
