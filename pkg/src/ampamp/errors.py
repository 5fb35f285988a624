"""Exceptions raised across the package.

All of them derive from built-in types, so callers that only care about bad input can
catch `ValueError` / `LookupError` directly.
"""


class AmpampError(Exception):
    """Base class for every error raised by this package."""


class InputError(AmpampError, ValueError):
    """Malformed input: length or dimension mismatch, unparsable file content, unknown kind."""


class CapacityError(AmpampError, ValueError):
    """A size guard tripped (too many qubits for an exhaustive path)."""


class DomainError(AmpampError, ValueError):
    """Mathematically undefined request (e.g. a target equal to the mean cost)."""


class PeakNotFoundError(AmpampError, LookupError):
    """No interior local maximum was found within the iteration cap."""
