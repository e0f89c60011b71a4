"""Exception hierarchy shared by the library, CLI, and HTTP service.

Every error carries a short machine-readable ``code`` drawn from the closed
set {"domain", "pole", "parse", "proximity"} so the CLI and service can map
failures to exit codes and HTTP statuses without inspecting types.
"""

from __future__ import annotations

from typing import Any


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""

    code = "domain"

    def __init__(self, message: str, detail: dict[str, Any] | None = None):
        super().__init__(message)
        self.detail = detail or {}


class DomainError(ToolkitError):
    """Input violates a documented precondition (non-unit, zero norm, ...)."""

    code = "domain"


class PoleError(DomainError):
    """Stereographic projection requested at (or too close to) its pole."""

    code = "pole"


class ProximityError(DomainError):
    """Curves or points too close together for a well-conditioned result."""

    code = "proximity"


class FitError(DomainError):
    """Point cloud is neither a line nor a circle within tolerance."""

    code = "domain"

    def __init__(self, message: str, line_residual: float, circle_residual: float):
        super().__init__(
            message,
            detail={"line_residual": line_residual, "circle_residual": circle_residual},
        )
        self.line_residual = line_residual
        self.circle_residual = circle_residual


class ParseError(ToolkitError):
    """Malformed user input (flags, query strings, request bodies)."""

    code = "parse"
