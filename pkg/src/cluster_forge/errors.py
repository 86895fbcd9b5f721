"""Exception hierarchy shared by the library and the command line."""
from __future__ import annotations


class ClusterForgeError(Exception):
    """Base class for every error raised on purpose by this package."""


class UsageError(ClusterForgeError, ValueError):
    """Bad input: malformed specs, out-of-range parameters, mismatched parents."""


class SizeLimitError(ClusterForgeError):
    """A group, subgroup lattice or search space exceeds its configured cap."""


class SemanticsError(ClusterForgeError):
    """The request is well formed but mathematically undefined for this model."""


class SpecParseError(UsageError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")
