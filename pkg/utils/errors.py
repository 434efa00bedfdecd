"""
Exception hierarchy for entgeo.

Every error derives from ``EntanglementError`` (itself a ``ValueError``) and
carries a short machine-readable ``code`` so the CLI can report it on one
line and pick an exit status.
"""

from __future__ import annotations


class EntanglementError(ValueError):
    """Base class for all library errors."""

    code = "entanglement-error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidStateError(EntanglementError):
    code = "invalid-state"


class QubitIndexError(EntanglementError):
    code = "qubit-index"


class NotHermitianError(EntanglementError):
    code = "not-hermitian"


class ParameterError(EntanglementError):
    code = "parameter"


class StateParseError(EntanglementError):
    """Raised by parse_state and named-spec resolution; ``code`` tells which check failed."""

    code = "malformed-json"


class IsometryError(EntanglementError):
    code = "not-isometric"


class ConfigError(EntanglementError):
    code = "config"

    def __init__(self, message: str, flag: str | None = None):
        super().__init__(message)
        self.flag = flag
