"""
Custom Exception Classes
Checker exceptions with process exit codes

Exit code contract:
    0 = all checks pass
    1 = check failure (counterexample attached)
    2 = input error
"""
from typing import Optional, Dict, Any, List


class HmsException(Exception):
    """Base exception for all checker exceptions"""
    exit_code = 1
    message = "An error occurred"

    def __init__(self, message: Optional[str] = None, exit_code: Optional[int] = None):
        self.message = message or self.__class__.message
        self.exit_code = exit_code if exit_code is not None else self.__class__.exit_code
        super().__init__(self.message)


# ============================================================================
# INPUT ERRORS (exit 2)
# ============================================================================

class InputException(HmsException):
    """
    Malformed or unusable input

    Example:
        raise InputException("Fan document is not valid JSON")
    """
    exit_code = 2
    message = "Invalid input"


class FanValidationException(InputException):
    """
    Fan validation failed

    Errors are keyed by index paths into the document.

    Example:
        raise FanValidationException({'triangles[2]': ['degenerate triangle (zero area)']})
    """
    message = "The given fan is invalid."

    def __init__(self, errors: Dict[str, List[str]], message: Optional[str] = None):
        self.errors = errors
        super().__init__(message)

    def has_error(self, field: str) -> bool:
        return field in self.errors and len(self.errors[field]) > 0


class DegenerateConeException(InputException):
    """
    Three rays do not span a 3-dimensional cone

    Example:
        raise DegenerateConeException("rays (0,0,1), (1,1,1), (2,2,1) are coplanar")
    """
    message = "Degenerate cone"


class TruncationException(InputException):
    """Raised when a truncation bound N < 0 is requested"""
    message = "Truncation bound must be non-negative"


class PolygonMismatchException(InputException):
    """
    Two fans of a crepant comparison triangulate different polygons

    Example:
        raise PolygonMismatchException("hulls differ: [(0,0),(1,0),(0,1)] vs [(0,0),(2,0),(0,1)]")
    """
    message = "Fans do not triangulate the same polygon"


class PlacementException(InputException):
    """Circle placement cannot expose a circle at every interior edge"""
    message = "Uncoverable circle placement"


class SubgraphException(InputException):
    """Half-edges of h are not a subgraph of g"""
    message = "Not a subgraph"


# ============================================================================
# CHECK FAILURES (exit 1)
# ============================================================================

class CheckFailedException(HmsException):
    """
    A comparison failed

    Example:
        raise CheckFailedException(
            "affine tables differ",
            counterexample={'pair': [[1, [0]], [2, [1]]], 'parity': 'odd', 'weight': 3}
        )
    """
    exit_code = 1
    message = "Check failed"

    def __init__(self, message: Optional[str] = None, counterexample: Optional[Dict[str, Any]] = None):
        self.counterexample = counterexample or {}
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'message': self.message,
            'counterexample': self.counterexample,
        }


class ConventionViolationException(CheckFailedException):
    """Orbit or character data disagrees with the fixed sign conventions"""
    message = "Convention violation"


class ProjectionMismatchException(CheckFailedException):
    """Two restriction routes into an edge disagree on a label"""
    message = "Projection mismatch"


class LabelMismatchException(CheckFailedException):
    """Circle label sets across an interior edge do not match"""
    message = "Label mismatch"
