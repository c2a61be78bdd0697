"""
Domain errors for the laplat library and CLI.
Every error carries a machine-readable code, a detail payload and the
process exit code the CLI should use when it surfaces.
"""

from typing import Any, Dict, Optional


class LaplatError(Exception):
    """Base class for all domain errors"""

    code: str = "laplat_error"
    exit_code: int = 1

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message, "detail": self.detail}


class InvalidGraphError(LaplatError):
    code = "invalid_graph"


class DisconnectedGraphError(LaplatError):
    code = "disconnected_graph"


class NotInHyperplaneError(LaplatError):
    code = "not_in_hyperplane"


class EnumerationLimitError(LaplatError):
    code = "enumeration_limit"


class NumericError(LaplatError):
    code = "numeric_error"


class ReconstructionError(LaplatError):
    code = "not_a_delaunay_polytope"


class InternalConsistencyError(LaplatError):
    """A proved identity failed to hold; indicates a bug, not bad input"""

    code = "internal_consistency"


class InvalidInputError(LaplatError):
    code = "invalid_input"


class UsageError(LaplatError):
    code = "usage_error"
    exit_code = 2
